#include "twinbeam/sweep.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "twinbeam/errors.hpp"

namespace twinbeam {

const char* sweep_parameter_name(SweepParameter p) {
    switch (p) {
        case SweepParameter::t: return "t";
        case SweepParameter::eta_1: return "eta_1";
        case SweepParameter::eta_2: return "eta_2";
        case SweepParameter::eta_x: return "eta_x";
        case SweepParameter::eta_y: return "eta_y";
        case SweepParameter::v0_plus_db: return "v0_plus_db";
    }
    return "?";
}

SweepParameter parse_sweep_parameter(const std::string& name) {
    if (name == "t") return SweepParameter::t;
    if (name == "eta_1") return SweepParameter::eta_1;
    if (name == "eta_2") return SweepParameter::eta_2;
    if (name == "eta_x") return SweepParameter::eta_x;
    if (name == "eta_y") return SweepParameter::eta_y;
    if (name == "v0_plus_db") return SweepParameter::v0_plus_db;
    throw ValidationError("unknown sweep parameter '" + name + "'");
}

OptimalTransmission t_optimal(double eta_1) {
    if (!(eta_1 > 0.0) || eta_1 > 1.0) {
        throw ValidationError("eta_1 must lie in (0, 1]");
    }
    const double raw = 1.0 / (2.0 * eta_1);
    if (raw > 1.0) return {1.0, false};
    return {raw, true};
}

MinimizeResult minimize_epr_over_t(const VariancePair& v1) {
    if (!(v1.plus > 0.0) || !(v1.minus > 0.0)) {
        throw ValidationError("v1 variances must be positive");
    }
    // Flat objective: a vacuum input gives eps = 1 for every t.
    if (v1.plus == 1.0 && v1.minus == 1.0) {
        return {0.5, 1.0};
    }
    const auto f = [&](double t) { return epr_biased_general(v1, t); };
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);  // 1/phi
    double lo = 0.0, hi = 1.0;
    double t1 = hi - inv_phi * (hi - lo);
    double t2 = lo + inv_phi * (hi - lo);
    double f1 = f(t1), f2 = f(t2);
    while (hi - lo > 1e-8) {
        if (f1 < f2) {
            hi = t2;
            t2 = t1;
            f2 = f1;
            t1 = hi - inv_phi * (hi - lo);
            f1 = f(t1);
        } else {
            lo = t1;
            t1 = t2;
            f1 = f2;
            t2 = lo + inv_phi * (hi - lo);
            f2 = f(t2);
        }
    }
    const double t_star = 0.5 * (lo + hi);
    return {t_star, f(t_star)};
}

double threshold_eta1(double v0_plus, ThresholdPolicy policy) {
    if (!(v0_plus > 0.0)) throw ValidationError("v0_plus must be positive");
    if (v0_plus == 1.0) {
        throw BracketError("vacuum source never becomes entangled");
    }
    // Entanglement predicate at source transmission e. At the optimal-t
    // policy the clamped branch gives eps = 1 exactly, so compare against a
    // strict margin instead of bare < 1.
    const auto entangled = [&](double e) {
        const VariancePair v1 = squeezer_output({v0_plus, e});
        double eps;
        if (policy == ThresholdPolicy::fixed_t_half) {
            eps = epr_biased_5050(v1);
        } else {
            eps = epr_biased_general(v1, t_optimal(e).t);
        }
        return eps < 1.0 - 1e-13;
    };
    double lo = 1e-6, hi = 1.0;
    if (entangled(lo) || !entangled(hi)) {
        throw BracketError(
            "entanglement predicate does not change sign over (0, 1]");
    }
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        (entangled(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

ScenarioConfig with_parameter(const ScenarioConfig& base, SweepParameter p,
                              double value) {
    ScenarioConfig c = base;
    switch (p) {
        case SweepParameter::t:
            c.t = value;
            break;
        case SweepParameter::eta_1:
            if (!c.input1) {
                throw ValidationError("cannot sweep eta_1: input1 is vacuum");
            }
            c.input1->eta = value;
            break;
        case SweepParameter::eta_2:
            if (!c.input2) {
                throw ValidationError("cannot sweep eta_2: input2 is vacuum");
            }
            c.input2->eta = value;
            break;
        case SweepParameter::eta_x:
            c.eta_x = value;
            break;
        case SweepParameter::eta_y:
            c.eta_y = value;
            break;
        case SweepParameter::v0_plus_db:
            // Retunes every squeezer present; vacuum ports stay vacuum.
            if (!c.input1 && !c.input2) {
                throw ValidationError(
                    "cannot sweep v0_plus_db: both inputs are vacuum");
            }
            if (c.input1) c.input1->v0_plus = db_to_variance(value);
            if (c.input2) c.input2->v0_plus = db_to_variance(value);
            break;
    }
    return c;
}

void check_sweep_domain(const SweepSpec& spec) {
    if (spec.steps < 2) throw ValidationError("steps must be at least 2");
    if (!std::isfinite(spec.from) || !std::isfinite(spec.to)) {
        throw ValidationError("sweep range must be finite");
    }
    const bool is_fraction = spec.parameter != SweepParameter::v0_plus_db;
    if (is_fraction) {
        for (double v : {spec.from, spec.to}) {
            if (v < 0.0 || v > 1.0) {
                throw ValidationError(
                    std::string("sweep range for ") +
                    sweep_parameter_name(spec.parameter) +
                    " must lie in [0, 1]");
            }
        }
    }
    // fail fast on an axis the base scenario cannot carry
    with_parameter(spec.base, spec.parameter, 0.5 * (spec.from + spec.to));
}

} // namespace

SweepTable sweep(const SweepSpec& spec) {
    check_sweep_domain(spec);
    SweepTable table;
    table.parameter = spec.parameter;
    table.rows.reserve(static_cast<std::size_t>(spec.steps));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < spec.steps; ++i) {
        const double frac = static_cast<double>(i) / (spec.steps - 1);
        const double value = spec.from + frac * (spec.to - spec.from);
        SweepRow row;
        row.parameter = value;
        row.inseparability = nan;
        row.epr_x_given_y = nan;
        row.epr_y_given_x = nan;
        try {
            const ScenarioConfig c =
                with_parameter(spec.base, spec.parameter, value);
            const CorrelationMatrix4 cm = build_scenario(c);
            if (spec.want_inseparability) {
                row.inseparability = inseparability(cm).value;
            }
            if (spec.want_epr_x_given_y) {
                row.epr_x_given_y = epr_value(cm, Direction::x_given_y).value;
            }
            if (spec.want_epr_y_given_x) {
                row.epr_y_given_x = epr_value(cm, Direction::y_given_x).value;
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

InferenceResult infer_inputs(const VariancePair& v_x, const VariancePair& v_y,
                             double t) {
    if (!(t > 0.0) || !(t < 1.0)) {
        throw ValidationError("t must lie strictly inside (0, 1) to invert");
    }
    for (double v : {v_x.plus, v_x.minus, v_y.plus, v_y.minus}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ValidationError("measured variances must be positive");
        }
    }

    // Each quadrature is overdetermined: V_x^k = (1-t) v1^k + t and
    // V_y^k = t v1^k + (1-t) both contain v1^k. Solve both, average, and
    // keep the worst relative disagreement as a consistency diagnostic.
    InferenceResult result;
    double residual = 0.0;
    const double meas_x[2] = {v_x.plus, v_x.minus};
    const double meas_y[2] = {v_y.plus, v_y.minus};
    double v1[2];
    for (int k = 0; k < 2; ++k) {
        const double from_x = (meas_x[k] - t) / (1.0 - t);
        const double from_y = (meas_y[k] - (1.0 - t)) / t;
        v1[k] = 0.5 * (from_x + from_y);
        if (!(v1[k] > 0.0)) {
            throw UnphysicalSourceError(
                "measured variances imply a nonpositive source variance");
        }
        residual =
            std::max(residual, std::abs(from_x - from_y) / std::abs(v1[k]));
    }
    result.v1 = {v1[0], v1[1]};
    result.residual = residual;

    const double p = v1[0] * v1[1];
    const double s = v1[0] + v1[1];
    if (std::abs(s - 2.0) < 1e-12) {
        if (std::abs(p - 1.0) < 1e-12) {
            // vacuum: eta_1 is a 0/0 and stays undefined
            result.vacuum_degenerate = true;
            result.v0_plus = 1.0;
            result.eta_1 = std::numeric_limits<double>::quiet_NaN();
            result.t_opt = 0.5;
            return result;
        }
        throw InconsistentMeasurementError(
            "v1+ + v1- = 2 but v1+ v1- != 1: no single squeezed source "
            "reproduces these variances");
    }
    double u = (p - 1.0) / (s - 2.0);
    // A lossless source sits exactly on u = 0 and rounding can push the
    // estimate a hair below; clamp noise-level negatives instead of
    // rejecting them.
    if (u < 0.0 && u > -1e-9) {
        u = 0.0;
    }
    if (u < 0.0 || u >= 1.0) {
        throw UnphysicalSourceError(
            "inferred vacuum fraction outside [0, 1): source would be "
            "unphysical");
    }
    result.eta_1 = 1.0 - u;
    result.v0_plus = (v1[0] - u) / result.eta_1;
    if (!(result.v0_plus > 0.0)) {
        throw UnphysicalSourceError("inferred v0_plus is not positive");
    }
    result.t_opt = t_optimal(result.eta_1).t;
    return result;
}

} // namespace twinbeam
