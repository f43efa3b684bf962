#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twinbeam/config.hpp"
#include "twinbeam/criteria.hpp"
#include "twinbeam/ellipse.hpp"
#include "twinbeam/errors.hpp"
#include "twinbeam/io.hpp"
#include "twinbeam/sampler.hpp"
#include "twinbeam/state.hpp"
#include "twinbeam/sweep.hpp"

namespace {

using namespace twinbeam;

constexpr double kPi = 3.14159265358979323846;

const char* pairing_name(InseparabilityPairing p) {
    return p == InseparabilityPairing::sum_plus_diff_minus
               ? "sum_plus_diff_minus"
               : "sum_minus_diff_plus";
}

struct SourceOptions {
    std::string config_path;
    std::string preset_name;
};

struct Resolved {
    ConfigDocument doc;
    const Preset* preset = nullptr;
};

Resolved resolve_source(const SourceOptions& src) {
    if (!src.preset_name.empty()) {
        const Preset& p = preset(src.preset_name);
        return {p.config, &p};
    }
    if (!src.config_path.empty()) {
        return {load_config_file(src.config_path), nullptr};
    }
    throw ValidationError("either --config or --preset is required");
}

void add_source_options(CLI::App* cmd, SourceOptions& src) {
    auto* c = cmd->add_option("--config", src.config_path, "JSON config file");
    auto* p = cmd->add_option("--preset", src.preset_name,
                              "built-in preset (fig7, fig10, fig11, fig12, "
                              "fig14)");
    c->excludes(p);
    p->excludes(c);
}

int run_eval(const Resolved& r, const std::string& out_format) {
    const CorrelationMatrix4 cm = build_scenario(r.doc.scenario);
    const InseparabilityResult insep = inseparability(cm);
    const EprResult exy = epr_value(cm, Direction::x_given_y);
    const EprResult eyx = epr_value(cm, Direction::y_given_x);

    if (out_format == "json") {
        JsonWriter w;
        w.begin_object();
        w.begin_array("cm");
        for (int i = 0; i < 4; ++i) {
            w.element_array_of_doubles(
                {cm(i, 0), cm(i, 1), cm(i, 2), cm(i, 3)});
        }
        w.end_array();
        w.begin_object("inseparability");
        w.field("value", insep.value);
        w.field("pairing", std::string(pairing_name(insep.pairing)));
        w.field("sum_plus_diff_minus", insep.sum_plus_diff_minus);
        w.field("sum_minus_diff_plus", insep.sum_minus_diff_plus);
        w.end_object();
        w.field("epsilon_x_given_y", exy.value);
        w.field("epsilon_y_given_x", eyx.value);
        w.begin_object("conditional_variances");
        auto emit_dir = [&](const char* key, const ConditionalVariances& cv) {
            w.begin_object(key);
            w.begin_object("plus");
            w.field("variance", cv.plus.variance);
            w.field("gain", cv.plus.gain);
            w.end_object();
            w.begin_object("minus");
            w.field("variance", cv.minus.variance);
            w.field("gain", cv.minus.gain);
            w.end_object();
            w.end_object();
        };
        emit_dir("x_given_y", exy.conditionals);
        emit_dir("y_given_x", eyx.conditionals);
        w.end_object();
        w.end_object();
        std::cout << w.str() << "\n";
        return 0;
    }

    std::string out = csv_row({"key", "value"});
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out += csv_row({"cm_" + std::to_string(i) + std::to_string(j),
                            format_double(cm(i, j))});
        }
    }
    out += csv_row({"inseparability", format_double(insep.value)});
    out += csv_row({"pairing", pairing_name(insep.pairing)});
    out += csv_row({"epsilon_x_given_y", format_double(exy.value)});
    out += csv_row({"epsilon_y_given_x", format_double(eyx.value)});
    out += csv_row(
        {"v_x_given_y_plus", format_double(exy.conditionals.plus.variance)});
    out += csv_row(
        {"v_x_given_y_minus", format_double(exy.conditionals.minus.variance)});
    out += csv_row(
        {"v_y_given_x_plus", format_double(eyx.conditionals.plus.variance)});
    out += csv_row(
        {"v_y_given_x_minus", format_double(eyx.conditionals.minus.variance)});
    out += csv_row(
        {"gain_x_given_y_plus", format_double(exy.conditionals.plus.gain)});
    out += csv_row(
        {"gain_x_given_y_minus", format_double(exy.conditionals.minus.gain)});
    out += csv_row(
        {"gain_y_given_x_plus", format_double(eyx.conditionals.plus.gain)});
    out += csv_row(
        {"gain_y_given_x_minus", format_double(eyx.conditionals.minus.gain)});
    std::cout << out;
    return 0;
}

int run_sweep(const Resolved& r, const std::string& param_name,
              const bool have_from, double from, const bool have_to, double to,
              const bool have_steps, int steps) {
    SweepSpec spec;
    spec.base = r.doc.scenario;
    spec.from = 0.0;
    spec.to = 1.0;
    spec.steps = 201;
    bool have_param = !param_name.empty();
    if (r.preset && r.preset->sweep_defaults) {
        const SweepDefaults& d = *r.preset->sweep_defaults;
        spec.parameter = d.parameter;
        spec.from = d.from;
        spec.to = d.to;
        spec.steps = d.steps;
        have_param = true;
    }
    if (!param_name.empty()) {
        spec.parameter = parse_sweep_parameter(param_name);
    }
    if (!have_param) {
        throw ValidationError("--param is required");
    }
    if (have_from) {
        spec.from = from;
    }
    if (have_to) {
        spec.to = to;
    }
    if (have_steps) {
        spec.steps = steps;
    }

    const SweepTable table = sweep(spec);
    std::string out = csv_row({sweep_parameter_name(table.parameter),
                               "inseparability", "epsilon_x_given_y",
                               "epsilon_y_given_x"});
    for (const SweepRow& row : table.rows) {
        out += csv_row({format_double(row.parameter),
                        format_double(row.inseparability),
                        format_double(row.epr_x_given_y),
                        format_double(row.epr_y_given_x)});
    }
    std::cout << out;
    return 0;
}

int run_ellipse(const Resolved& r, double quadrature_deg, int points) {
    if (!std::isfinite(quadrature_deg)) {
        throw ValidationError("--quadrature must be finite");
    }
    if (points < 8) {
        throw ValidationError("--points must be at least 8");
    }
    const CorrelationMatrix4 cm = build_scenario(r.doc.scenario);
    const QuadratureCov2 block =
        quadrature_block(cm, quadrature_deg * kPi / 180.0);
    const std::vector<Point2> poly = ellipse_polyline(block, points);
    const EllipseSummary summary = summarize(block);

    std::string out = csv_row({"theta_deg", "x", "y", "qnl_x", "qnl_y"});
    for (int i = 0; i < points; ++i) {
        const double phi = 2.0 * kPi * static_cast<double>(i) / points;
        out += csv_row({format_double(360.0 * static_cast<double>(i) / points),
                        format_double(poly[static_cast<std::size_t>(i)].x),
                        format_double(poly[static_cast<std::size_t>(i)].y),
                        format_double(std::cos(phi)),
                        format_double(std::sin(phi))});
    }
    out += "\n";
    out += csv_row({"sigma_x", "sigma_y", "sigma_sum", "sigma_diff",
                    "sigma_x_given_y", "sigma_y_given_x", "axis_angle_deg",
                    "semi_major", "semi_minor"});
    const double angle_deg =
        summary.axes.angle ? *summary.axes.angle * 180.0 / kPi
                           : std::numeric_limits<double>::quiet_NaN();
    out += csv_row({format_double(summary.sigma_x),
                    format_double(summary.sigma_y),
                    format_double(summary.sigma_sum),
                    format_double(summary.sigma_diff),
                    format_double(summary.sigma_x_given_y),
                    format_double(summary.sigma_y_given_x),
                    format_double(angle_deg),
                    format_double(summary.axes.semi_major),
                    format_double(summary.axes.semi_minor)});
    std::cout << out;
    return 0;
}

const SamplerConfig& require_sampler(const Resolved& r) {
    if (!r.doc.sampler) {
        throw ValidationError(
            "config has no sampler block (required for this command)");
    }
    return *r.doc.sampler;
}

int run_sample(const Resolved& r, double quadrature_deg) {
    if (!std::isfinite(quadrature_deg)) {
        throw ValidationError("--quadrature must be finite");
    }
    const SamplerConfig& sc = require_sampler(r);
    const CorrelationMatrix4 cm = build_scenario(r.doc.scenario);
    SampleBatch batch =
        sample_pairs(cm, quadrature_deg * kPi / 180.0, sc.n, sc.seed);
    if (sc.sample_rate_hz > 0.0) {
        batch.sample_rate_hz = sc.sample_rate_hz;
    }
    if (sc.filter) {
        batch = apply_bandpass(batch, *sc.filter);
    }
    std::cout << csv_row({"index", "dX_x", "dX_y"});
    for (std::size_t i = 0; i < batch.size(); ++i) {
        std::cout << csv_row({std::to_string(i), format_double(batch.x[i]),
                              format_double(batch.y[i])});
    }
    return 0;
}

int run_estimate(const Resolved& r) {
    const SamplerConfig& sc = require_sampler(r);
    const CorrelationMatrix4 cm = build_scenario(r.doc.scenario);
    SampleBatch plus = sample_pairs(cm, 0.0, sc.n, sc.seed);
    SampleBatch minus = sample_pairs(cm, 0.5 * kPi, sc.n, sc.seed + 1);
    double qnl_scale = 1.0;
    if (sc.filter) {
        plus.sample_rate_hz = sc.sample_rate_hz;
        minus.sample_rate_hz = sc.sample_rate_hz;
        plus = apply_bandpass(plus, *sc.filter);
        minus = apply_bandpass(minus, *sc.filter);
        SampleBatch vac = sample_pairs(CorrelationMatrix4::identity(), 0.0,
                                       sc.n, sc.seed + 2);
        vac.sample_rate_hz = sc.sample_rate_hz;
        qnl_scale = qnl_calibrate(apply_bandpass(vac, *sc.filter));
    }
    const EstimateReport rep = estimate(plus, minus, qnl_scale);

    JsonWriter w;
    w.begin_object();
    w.field("n", static_cast<long long>(rep.n));
    w.field("seed", static_cast<long long>(sc.seed));
    if (sc.sample_rate_hz > 0.0) {
        w.field("sample_rate_hz", sc.sample_rate_hz);
    }
    if (sc.filter) {
        w.begin_object("filter");
        w.field("center_hz", sc.filter->center_hz);
        w.field("width_hz", sc.filter->width_hz);
        w.field("order", static_cast<long long>(sc.filter->order));
        w.end_object();
    }
    w.field("qnl_scale", rep.qnl_scale);
    auto emit_est = [&](const char* key, const Estimate& e) {
        w.begin_object(key);
        w.field("value", e.value);
        w.field("std_error", e.std_error);
        w.end_object();
    };
    w.begin_object("inseparability");
    w.field("value", rep.inseparability.value);
    w.field("std_error", rep.inseparability.std_error);
    w.field("pairing", std::string(pairing_name(rep.pairing)));
    w.end_object();
    emit_est("epsilon_x_given_y", rep.epr_x_given_y);
    emit_est("epsilon_y_given_x", rep.epr_y_given_x);
    auto emit_quad = [&](const char* key,
                         const EstimateReport::QuadStats& q) {
        w.begin_object(key);
        emit_est("var_x", q.var_x);
        emit_est("var_y", q.var_y);
        emit_est("cov", q.cov);
        emit_est("v_x_given_y", q.cond_x_given_y);
        emit_est("v_y_given_x", q.cond_y_given_x);
        emit_est("gain_x_given_y", q.gain_x_given_y);
        emit_est("gain_y_given_x", q.gain_y_given_x);
        w.end_object();
    };
    emit_quad("plus", rep.plus);
    emit_quad("minus", rep.minus);
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int run_infer(double vx_plus, double vx_minus, double vy_plus, double vy_minus,
              double t) {
    const InferenceResult res =
        infer_inputs({vx_plus, vx_minus}, {vy_plus, vy_minus}, t);
    JsonWriter w;
    w.begin_object();
    w.field("v1_plus", res.v1.plus);
    w.field("v1_minus", res.v1.minus);
    w.field("v0_plus", res.v0_plus);
    w.field("v0_plus_db", variance_to_db(res.v0_plus));
    w.field("eta_1", res.eta_1);
    w.field("t_opt", res.t_opt);
    w.field("residual", res.residual);
    w.field("status",
            std::string(res.vacuum_degenerate ? "vacuum-degenerate" : "ok"));
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"two-mode squeezed-light entanglement toolbox"};
    app.require_subcommand(1);

    auto* eval_cmd =
        app.add_subcommand("eval", "criteria report for one scenario");
    SourceOptions eval_src;
    add_source_options(eval_cmd, eval_src);
    std::string eval_out = "json";
    eval_cmd->add_option("--out", eval_out, "output format (json or csv)")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* sweep_cmd =
        app.add_subcommand("sweep", "criteria along one parameter axis (CSV)");
    SourceOptions sweep_src;
    add_source_options(sweep_cmd, sweep_src);
    std::string sweep_param;
    double sweep_from = 0.0;
    double sweep_to = 1.0;
    int sweep_steps = 201;
    sweep_cmd->add_option("--param", sweep_param,
                          "t, eta_1, eta_2, eta_x, eta_y or v0_plus_db");
    auto* opt_from = sweep_cmd->add_option("--from", sweep_from, "range start");
    auto* opt_to = sweep_cmd->add_option("--to", sweep_to, "range end");
    auto* opt_steps =
        sweep_cmd->add_option("--steps", sweep_steps, "grid points (>= 2)");

    auto* ellipse_cmd = app.add_subcommand(
        "ellipse", "one-sigma correlation ellipse and QNL circle (CSV)");
    SourceOptions ellipse_src;
    add_source_options(ellipse_cmd, ellipse_src);
    double ellipse_quad = 0.0;
    int ellipse_points = 360;
    ellipse_cmd->add_option("--quadrature", ellipse_quad,
                            "homodyne angle in degrees (0 = amplitude)");
    ellipse_cmd->add_option("--points", ellipse_points,
                            "polyline points (>= 8)");

    auto* sample_cmd = app.add_subcommand(
        "sample", "draw the configured Monte-Carlo batch (CSV)");
    SourceOptions sample_src;
    add_source_options(sample_cmd, sample_src);
    double sample_quad = 0.0;
    sample_cmd->add_option("--quadrature", sample_quad,
                           "homodyne angle in degrees (0 = amplitude)");

    auto* estimate_cmd = app.add_subcommand(
        "estimate", "Monte-Carlo criteria estimates with standard errors");
    SourceOptions estimate_src;
    add_source_options(estimate_cmd, estimate_src);

    auto* infer_cmd = app.add_subcommand(
        "infer", "invert measured beam variances back to the source");
    double vx_plus = 0.0, vx_minus = 0.0, vy_plus = 0.0, vy_minus = 0.0;
    double infer_t = 0.5;
    infer_cmd->add_option("--vx-plus", vx_plus, "measured V_x^+")->required();
    infer_cmd->add_option("--vx-minus", vx_minus, "measured V_x^-")
        ->required();
    infer_cmd->add_option("--vy-plus", vy_plus, "measured V_y^+")->required();
    infer_cmd->add_option("--vy-minus", vy_minus, "measured V_y^-")
        ->required();
    infer_cmd->add_option("--t", infer_t, "beamsplitter transmission used")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) {
            return run_eval(resolve_source(eval_src), eval_out);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(resolve_source(sweep_src), sweep_param,
                             opt_from->count() > 0, sweep_from,
                             opt_to->count() > 0, sweep_to,
                             opt_steps->count() > 0, sweep_steps);
        }
        if (ellipse_cmd->parsed()) {
            return run_ellipse(resolve_source(ellipse_src), ellipse_quad,
                               ellipse_points);
        }
        if (sample_cmd->parsed()) {
            return run_sample(resolve_source(sample_src), sample_quad);
        }
        if (estimate_cmd->parsed()) {
            return run_estimate(resolve_source(estimate_src));
        }
        if (infer_cmd->parsed()) {
            return run_infer(vx_plus, vx_minus, vy_plus, vy_minus, infer_t);
        }
    } catch (const InferenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InsufficientDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BracketError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
