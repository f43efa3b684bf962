#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twinbeam/criteria.hpp"
#include "twinbeam/state.hpp"

namespace twinbeam {

enum class SweepParameter { t, eta_1, eta_2, eta_x, eta_y, v0_plus_db };

const char* sweep_parameter_name(SweepParameter p);
SweepParameter parse_sweep_parameter(const std::string& name);

struct SweepSpec {
    ScenarioConfig base;
    SweepParameter parameter = SweepParameter::t;
    double from = 0.0;
    double to = 1.0;
    int steps = 2;  ///< number of grid points, endpoints included
    bool want_inseparability = true;
    bool want_epr_x_given_y = true;
    bool want_epr_y_given_x = true;
};

/// One evaluated grid point. Unselected or failed observables are NaN;
/// a failed point carries its message and never aborts the sweep.
struct SweepRow {
    double parameter = 0.0;
    double inseparability = 0.0;
    double epr_x_given_y = 0.0;
    double epr_y_given_x = 0.0;
    std::optional<std::string> error;
};

struct SweepTable {
    SweepParameter parameter = SweepParameter::t;
    std::vector<SweepRow> rows;
};

/// t* = 1/(2 eta_1), clamped into (0, 1]. interior is false when the
/// unclamped optimum lies outside the physical range (eta_1 < 1/2).
struct OptimalTransmission {
    double t = 0.5;
    bool interior = true;
};

struct MinimizeResult {
    double t_star = 0.5;
    double epsilon = 1.0;
};

enum class ThresholdPolicy { fixed_t_half, optimal_t };

/// Result of inverting the measured beam variances back to the source.
struct InferenceResult {
    VariancePair v1;       ///< squeezer output at the beamsplitter input
    double v0_plus = 1.0;  ///< pure-source squeezed variance
    double eta_1 = 1.0;    ///< source-path transmission (NaN when degenerate)
    double t_opt = 0.5;
    double residual = 0.0;  ///< worst disagreement of the redundant readings
    bool vacuum_degenerate = false;
};

OptimalTransmission t_optimal(double eta_1);

/// Golden-section minimum of epr_biased_general over t in [0, 1],
/// interval tolerance 1e-8. A flat objective (vacuum input) returns
/// t = 0.5 by convention.
MinimizeResult minimize_epr_over_t(const VariancePair& v1);

/// Smallest source transmission at which the EPR product drops below 1,
/// located by bisection to 1e-8 in eta_1. Throws BracketError when the
/// entanglement predicate does not change across (0, 1].
double threshold_eta1(double v0_plus, ThresholdPolicy policy);

SweepTable sweep(const SweepSpec& spec);

/// Invert the single-squeezer relations from measured per-beam variances at
/// known t. Each quadrature is solved from both redundant readings and
/// averaged; the worst relative disagreement is reported as residual.
InferenceResult infer_inputs(const VariancePair& v_x, const VariancePair& v_y,
                             double t);

} // namespace twinbeam
