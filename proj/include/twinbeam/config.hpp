#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twinbeam/filter.hpp"
#include "twinbeam/state.hpp"
#include "twinbeam/sweep.hpp"

namespace twinbeam {

/// Monte-Carlo section of a config document.
struct SamplerConfig {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double sample_rate_hz = 0.0;
    std::optional<BandPassSpec> filter;
};

/// Parsed form of the JSON config accepted by every CLI subcommand:
///   {
///     "input1": {"v0_db": -7.0, "eta": 1.0} | "vacuum",
///     "input2": "vacuum",
///     "t": 0.5, "eta_x": 1.0, "eta_y": 1.0,
///     "sampler": {"n":..., "seed":..., "sample_rate_hz":...,
///                 "filter": {"center_hz":..., "width_hz":..., "order":...}}
///   }
/// Unknown keys anywhere are rejected; every domain is checked before any
/// computation starts, and messages name the offending key.
struct ConfigDocument {
    ScenarioConfig scenario;
    std::optional<SamplerConfig> sampler;
};

ConfigDocument parse_config(const std::string& json_text);
ConfigDocument load_config_file(const std::string& path);

/// Default sweep axis bundled with a figure preset.
struct SweepDefaults {
    SweepParameter parameter = SweepParameter::t;
    double from = 0.0;
    double to = 1.0;
    int steps = 201;
};

struct Preset {
    std::string name;
    std::string description;
    ConfigDocument config;
    std::optional<SweepDefaults> sweep_defaults;
};

/// Built-in figure presets: fig7, fig10, fig11, fig12, fig14.
const Preset& preset(const std::string& name);
std::vector<std::string> preset_names();

} // namespace twinbeam
