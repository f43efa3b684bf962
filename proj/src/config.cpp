#include "twinbeam/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "twinbeam/errors.hpp"

namespace twinbeam {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ValidationError("unknown key \"" + it.key() + "\" in " +
                                  where);
        }
    }
}

double get_finite(const json& obj, const std::string& where,
                  const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ValidationError(where + "." + key + " must be a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw ValidationError(where + "." + key + " must be finite");
    }
    return d;
}

double get_fraction(const json& obj, const std::string& where,
                    const std::string& key, double fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const double d = get_finite(obj, where, key);
    if (d < 0.0 || d > 1.0) {
        throw ValidationError(where + "." + key + " must be in [0, 1]");
    }
    return d;
}

std::optional<SqueezerSpec> parse_input(const json& root,
                                        const std::string& key) {
    if (!root.contains(key)) {
        return std::nullopt;
    }
    const json& v = root.at(key);
    if (v.is_string()) {
        if (v.get<std::string>() == "vacuum") {
            return std::nullopt;
        }
        throw ValidationError(key +
                              " must be \"vacuum\" or an object with v0_db");
    }
    if (!v.is_object()) {
        throw ValidationError(key +
                              " must be \"vacuum\" or an object with v0_db");
    }
    reject_unknown(v, key, {"v0_db", "eta"});
    if (!v.contains("v0_db")) {
        throw ValidationError(key + ".v0_db is required");
    }
    SqueezerSpec spec;
    spec.v0_plus = db_to_variance(get_finite(v, key, "v0_db"));
    spec.eta = get_fraction(v, key, "eta", 1.0);
    return spec;
}

std::optional<SamplerConfig> parse_sampler(const json& root) {
    if (!root.contains("sampler")) {
        return std::nullopt;
    }
    const json& s = root.at("sampler");
    if (!s.is_object()) {
        throw ValidationError("sampler must be an object");
    }
    reject_unknown(s, "sampler", {"n", "seed", "sample_rate_hz", "filter"});
    if (!s.contains("n")) {
        throw ValidationError("sampler.n is required");
    }
    if (!s.at("n").is_number_integer() || s.at("n").get<long long>() < 1) {
        throw ValidationError("sampler.n must be a positive integer");
    }
    SamplerConfig cfg;
    cfg.n = s.at("n").get<std::size_t>();
    if (s.contains("seed")) {
        if (!s.at("seed").is_number_unsigned()) {
            throw ValidationError("sampler.seed must be a nonnegative integer");
        }
        cfg.seed = s.at("seed").get<std::uint64_t>();
    }
    if (s.contains("sample_rate_hz")) {
        const double fs = get_finite(s, "sampler", "sample_rate_hz");
        if (!(fs > 0.0)) {
            throw ValidationError("sampler.sample_rate_hz must be positive");
        }
        cfg.sample_rate_hz = fs;
    }
    if (s.contains("filter")) {
        const json& f = s.at("filter");
        if (!f.is_object()) {
            throw ValidationError("sampler.filter must be an object");
        }
        reject_unknown(f, "sampler.filter", {"center_hz", "width_hz", "order"});
        BandPassSpec band;
        if (!f.contains("center_hz") || !f.contains("width_hz")) {
            throw ValidationError(
                "sampler.filter needs both center_hz and width_hz");
        }
        band.center_hz = get_finite(f, "sampler.filter", "center_hz");
        band.width_hz = get_finite(f, "sampler.filter", "width_hz");
        if (!(band.center_hz > 0.0)) {
            throw ValidationError("sampler.filter.center_hz must be positive");
        }
        if (!(band.width_hz > 0.0)) {
            throw ValidationError("sampler.filter.width_hz must be positive");
        }
        if (f.contains("order")) {
            if (!f.at("order").is_number_integer()) {
                throw ValidationError(
                    "sampler.filter.order must be an even integer >= 2");
            }
            band.order = f.at("order").get<int>();
        }
        if (band.order < 2 || band.order % 2 != 0) {
            throw ValidationError(
                "sampler.filter.order must be an even integer >= 2");
        }
        if (!(band.center_hz - 0.5 * band.width_hz > 0.0)) {
            throw ValidationError(
                "sampler.filter lower band edge must be positive");
        }
        if (!(cfg.sample_rate_hz > 0.0)) {
            throw ValidationError(
                "sampler.sample_rate_hz is required when a filter is set");
        }
        if (band.center_hz + 0.5 * band.width_hz > 0.49 * cfg.sample_rate_hz) {
            throw ValidationError("sampler.filter upper band edge exceeds "
                                  "0.49 * sample_rate_hz");
        }
        cfg.filter = band;
    }
    return cfg;
}

// Squeezer transmission and input variance that reproduce measured output
// variances of -2.9 dB and +5.3 dB: invert v = eta*v0 + (1 - eta) for the
// pair (v0, 1/v0).
struct MeasuredSource {
    double v0_plus;
    double eta;
};

MeasuredSource measured_source() {
    const double v1p = db_to_variance(-2.9);
    const double v1m = db_to_variance(5.3);
    const double u = (v1p * v1m - 1.0) / (v1p + v1m - 2.0);
    const double eta = 1.0 - u;
    return {(v1p - u) / eta, eta};
}

std::vector<Preset> build_presets() {
    std::vector<Preset> list;
    const double v7 = db_to_variance(-7.0);
    const MeasuredSource ms = measured_source();

    {
        Preset p;
        p.name = "fig7";
        p.description = "two -7 dB squeezers, balanced splitter, lossless "
                        "arms; default sweep: eta_y from 0 to 1";
        p.config.scenario.input1 = SqueezerSpec{v7, 1.0};
        p.config.scenario.input2 = SqueezerSpec{v7, 1.0};
        p.sweep_defaults = SweepDefaults{SweepParameter::eta_y, 0.0, 1.0, 201};
        list.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig10";
        p.description = "one -7 dB squeezer seen through the measured 0.612 "
                        "transmission; default sweep: t from 0 to 1";
        p.config.scenario.input1 = SqueezerSpec{v7, ms.eta};
        p.sweep_defaults = SweepDefaults{SweepParameter::t, 0.0, 1.0, 201};
        list.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig11";
        p.description = "one -7 dB squeezer, balanced splitter; default "
                        "sweep: eta_1 from 0 to 1";
        p.config.scenario.input1 = SqueezerSpec{v7, 1.0};
        p.sweep_defaults =
            SweepDefaults{SweepParameter::eta_1, 0.0, 1.0, 201};
        list.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig12";
        p.description = "one lossless -7 dB squeezer; default sweep: t from "
                        "0 to 1 (inseparability)";
        p.config.scenario.input1 = SqueezerSpec{v7, 1.0};
        p.sweep_defaults = SweepDefaults{SweepParameter::t, 0.0, 1.0, 201};
        list.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig14";
        p.description = "source tuned to -2.9 dB / +5.3 dB output variances; "
                        "default sweep: t from 0 to 1; Monte-Carlo defaults "
                        "n=1e6, fs=10 MHz, 4.0-4.9 MHz band-pass";
        p.config.scenario.input1 = SqueezerSpec{ms.v0_plus, ms.eta};
        p.sweep_defaults = SweepDefaults{SweepParameter::t, 0.0, 1.0, 201};
        SamplerConfig sampler;
        sampler.n = 1000000;
        sampler.seed = 42;
        sampler.sample_rate_hz = 1.0e7;
        sampler.filter = BandPassSpec{4.45e6, 0.9e6, 6};
        p.config.sampler = sampler;
        list.push_back(std::move(p));
    }
    return list;
}

} // namespace

ConfigDocument parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config is not valid JSON: ") +
                              e.what());
    }
    if (!root.is_object()) {
        throw ValidationError("config root must be a JSON object");
    }
    reject_unknown(root, "config",
                   {"input1", "input2", "t", "eta_x", "eta_y", "sampler"});

    ConfigDocument doc;
    doc.scenario.input1 = parse_input(root, "input1");
    doc.scenario.input2 = parse_input(root, "input2");
    if (root.contains("t")) {
        const double t = get_finite(root, "config", "t");
        if (t < 0.0 || t > 1.0) {
            throw ValidationError("t must be in [0, 1]");
        }
        doc.scenario.t = t;
    }
    doc.scenario.eta_x = get_fraction(root, "config", "eta_x", 1.0);
    doc.scenario.eta_y = get_fraction(root, "config", "eta_y", 1.0);
    doc.sampler = parse_sampler(root);
    return doc;
}

ConfigDocument load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

const Preset& preset(const std::string& name) {
    static const std::vector<Preset> presets = build_presets();
    for (const Preset& p : presets) {
        if (p.name == name) {
            return p;
        }
    }
    std::string valid;
    for (const Preset& p : presets) {
        if (!valid.empty()) {
            valid += ", ";
        }
        valid += p.name;
    }
    throw ValidationError("unknown preset \"" + name +
                          "\"; valid presets: " + valid);
}

std::vector<std::string> preset_names() {
    static const std::vector<Preset> presets = build_presets();
    std::vector<std::string> names;
    names.reserve(presets.size());
    for (const Preset& p : presets) {
        names.push_back(p.name);
    }
    return names;
}

} // namespace twinbeam
