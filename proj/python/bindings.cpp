#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twinbeam/config.hpp"
#include "twinbeam/criteria.hpp"
#include "twinbeam/ellipse.hpp"
#include "twinbeam/errors.hpp"
#include "twinbeam/filter.hpp"
#include "twinbeam/rng.hpp"
#include "twinbeam/sampler.hpp"
#include "twinbeam/state.hpp"
#include "twinbeam/sweep.hpp"

namespace py = pybind11;
using namespace twinbeam;

PYBIND11_MODULE(_twinbeam, m) {
    m.doc() = "two-mode squeezed-light entanglement toolbox";

    py::register_exception<ValidationError>(m, "ValidationError",
                                            PyExc_ValueError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError",
                                                 PyExc_ValueError);
    py::register_exception<InferenceError>(m, "InferenceError",
                                           PyExc_RuntimeError);
    py::register_exception<BracketError>(m, "BracketError",
                                         PyExc_RuntimeError);
    py::register_exception<InsufficientDataError>(m, "InsufficientDataError",
                                                  PyExc_RuntimeError);

    py::enum_<Mode>(m, "Mode").value("x", Mode::x).value("y", Mode::y);
    py::enum_<Quadrature>(m, "Quadrature")
        .value("plus", Quadrature::plus)
        .value("minus", Quadrature::minus);
    py::enum_<Direction>(m, "Direction")
        .value("x_given_y", Direction::x_given_y)
        .value("y_given_x", Direction::y_given_x);
    py::enum_<InseparabilityPairing>(m, "InseparabilityPairing")
        .value("sum_plus_diff_minus",
               InseparabilityPairing::sum_plus_diff_minus)
        .value("sum_minus_diff_plus",
               InseparabilityPairing::sum_minus_diff_plus);
    py::enum_<Reconciliation>(m, "Reconciliation")
        .value("direct", Reconciliation::direct)
        .value("reverse", Reconciliation::reverse);
    py::enum_<SweepParameter>(m, "SweepParameter")
        .value("t", SweepParameter::t)
        .value("eta_1", SweepParameter::eta_1)
        .value("eta_2", SweepParameter::eta_2)
        .value("eta_x", SweepParameter::eta_x)
        .value("eta_y", SweepParameter::eta_y)
        .value("v0_plus_db", SweepParameter::v0_plus_db);
    py::enum_<ThresholdPolicy>(m, "ThresholdPolicy")
        .value("fixed_t_half", ThresholdPolicy::fixed_t_half)
        .value("optimal_t", ThresholdPolicy::optimal_t);

    py::class_<VariancePair>(m, "VariancePair")
        .def(py::init<>())
        .def(py::init([](double plus, double minus) {
                 return VariancePair{plus, minus};
             }),
             py::arg("plus"), py::arg("minus"))
        .def_readwrite("plus", &VariancePair::plus)
        .def_readwrite("minus", &VariancePair::minus);

    py::class_<SqueezerSpec>(m, "SqueezerSpec")
        .def(py::init<>())
        .def(py::init([](double v0_plus, double eta) {
                 return SqueezerSpec{v0_plus, eta};
             }),
             py::arg("v0_plus"), py::arg("eta") = 1.0)
        .def_readwrite("v0_plus", &SqueezerSpec::v0_plus)
        .def_readwrite("eta", &SqueezerSpec::eta);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("input1", &ScenarioConfig::input1)
        .def_readwrite("input2", &ScenarioConfig::input2)
        .def_readwrite("t", &ScenarioConfig::t)
        .def_readwrite("eta_x", &ScenarioConfig::eta_x)
        .def_readwrite("eta_y", &ScenarioConfig::eta_y);

    py::class_<CorrelationMatrix4>(m, "CorrelationMatrix4")
        .def(py::init<>())
        .def_static("identity", &CorrelationMatrix4::identity)
        .def_readwrite("m", &CorrelationMatrix4::m)
        .def("var", &CorrelationMatrix4::var)
        .def("cross", &CorrelationMatrix4::cross)
        .def("min_eigenvalue", &CorrelationMatrix4::min_eigenvalue)
        .def("validate", &CorrelationMatrix4::validate,
             py::arg("psd_tol") = 1e-12)
        .def("__getitem__", [](const CorrelationMatrix4& cm,
                               std::pair<int, int> idx) {
            if (idx.first < 0 || idx.first > 3 || idx.second < 0 ||
                idx.second > 3) {
                throw py::index_error("index out of range");
            }
            return cm(idx.first, idx.second);
        });

    m.def("db_to_variance", &db_to_variance, py::arg("db"));
    m.def("variance_to_db", &variance_to_db, py::arg("v"));
    m.def("squeezer_output", &squeezer_output, py::arg("spec"));
    m.def("mix_on_beamsplitter", &mix_on_beamsplitter, py::arg("in1"),
          py::arg("in2"), py::arg("t"));
    m.def("apply_loss", &apply_loss, py::arg("cm"), py::arg("mode"),
          py::arg("eta"));
    m.def("build_scenario", &build_scenario, py::arg("config"));
    m.def("rotate_quadrature", &rotate_quadrature, py::arg("cm"),
          py::arg("theta"));

    py::class_<ConditionalVariance>(m, "ConditionalVariance")
        .def_readonly("variance", &ConditionalVariance::variance)
        .def_readonly("gain", &ConditionalVariance::gain);
    py::class_<ConditionalVariances>(m, "ConditionalVariances")
        .def_readonly("plus", &ConditionalVariances::plus)
        .def_readonly("minus", &ConditionalVariances::minus)
        .def_readonly("direction", &ConditionalVariances::direction);
    py::class_<EprResult>(m, "EprResult")
        .def_readonly("value", &EprResult::value)
        .def_readonly("conditionals", &EprResult::conditionals);
    py::class_<InseparabilityResult>(m, "InseparabilityResult")
        .def_readonly("value", &InseparabilityResult::value)
        .def_readonly("pairing", &InseparabilityResult::pairing)
        .def_readonly("sum_plus_diff_minus",
                      &InseparabilityResult::sum_plus_diff_minus)
        .def_readonly("sum_minus_diff_plus",
                      &InseparabilityResult::sum_minus_diff_plus);
    py::class_<QkdRateInput>(m, "QkdRateInput")
        .def(py::init<>())
        .def_readwrite("eve_conditional", &QkdRateInput::eve_conditional)
        .def_readwrite("partner_conditional",
                       &QkdRateInput::partner_conditional)
        .def_readwrite("reconciliation", &QkdRateInput::reconciliation);

    m.def("conditional_variance", &conditional_variance, py::arg("cm"),
          py::arg("direction"), py::arg("q"));
    m.def("epr_value", &epr_value, py::arg("cm"), py::arg("direction"));
    m.def("inseparability", &inseparability, py::arg("cm"));
    m.def("inseparability_symmetric_closed_form",
          &inseparability_symmetric_closed_form, py::arg("v0_plus"),
          py::arg("eta"));
    m.def("epr_symmetric_closed_form", &epr_symmetric_closed_form,
          py::arg("v0_plus"), py::arg("eta"));
    m.def("epr_biased_5050", &epr_biased_5050, py::arg("v1"));
    m.def("epr_biased_general", &epr_biased_general, py::arg("v1"),
          py::arg("t"));
    m.def("qkd_rate", &qkd_rate, py::arg("input"));

    py::class_<QuadratureCov2>(m, "QuadratureCov2")
        .def(py::init<>())
        .def(py::init([](double var_x, double var_y, double cov) {
                 return QuadratureCov2{var_x, var_y, cov};
             }),
             py::arg("var_x"), py::arg("var_y"), py::arg("cov"))
        .def_readwrite("var_x", &QuadratureCov2::var_x)
        .def_readwrite("var_y", &QuadratureCov2::var_y)
        .def_readwrite("cov", &QuadratureCov2::cov)
        .def("det", &QuadratureCov2::det)
        .def("validate", &QuadratureCov2::validate);
    py::class_<Point2>(m, "Point2")
        .def_readonly("x", &Point2::x)
        .def_readonly("y", &Point2::y);
    py::class_<EllipseAxes>(m, "EllipseAxes")
        .def_readonly("semi_major", &EllipseAxes::semi_major)
        .def_readonly("semi_minor", &EllipseAxes::semi_minor)
        .def_readonly("angle", &EllipseAxes::angle);
    py::class_<EllipseSummary>(m, "EllipseSummary")
        .def_readonly("sigma_x", &EllipseSummary::sigma_x)
        .def_readonly("sigma_y", &EllipseSummary::sigma_y)
        .def_readonly("sigma_sum", &EllipseSummary::sigma_sum)
        .def_readonly("sigma_diff", &EllipseSummary::sigma_diff)
        .def_readonly("sigma_x_given_y", &EllipseSummary::sigma_x_given_y)
        .def_readonly("sigma_y_given_x", &EllipseSummary::sigma_y_given_x)
        .def_readonly("axes", &EllipseSummary::axes);

    m.def("quadrature_block", &quadrature_block, py::arg("cm"),
          py::arg("theta"));
    m.def("directional_std", &directional_std, py::arg("block"),
          py::arg("angle"));
    m.def("ellipse_polyline", &ellipse_polyline, py::arg("block"),
          py::arg("n_points"));
    m.def("summarize", &summarize, py::arg("block"));
    m.def("axis_angle", &axis_angle, py::arg("block"));

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("base", &SweepSpec::base)
        .def_readwrite("parameter", &SweepSpec::parameter)
        .def_readwrite("from_", &SweepSpec::from)
        .def_readwrite("to", &SweepSpec::to)
        .def_readwrite("steps", &SweepSpec::steps)
        .def_readwrite("want_inseparability", &SweepSpec::want_inseparability)
        .def_readwrite("want_epr_x_given_y", &SweepSpec::want_epr_x_given_y)
        .def_readwrite("want_epr_y_given_x", &SweepSpec::want_epr_y_given_x);
    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("parameter", &SweepRow::parameter)
        .def_readonly("inseparability", &SweepRow::inseparability)
        .def_readonly("epr_x_given_y", &SweepRow::epr_x_given_y)
        .def_readonly("epr_y_given_x", &SweepRow::epr_y_given_x)
        .def_readonly("error", &SweepRow::error);
    py::class_<SweepTable>(m, "SweepTable")
        .def_readonly("parameter", &SweepTable::parameter)
        .def_readonly("rows", &SweepTable::rows);
    py::class_<OptimalTransmission>(m, "OptimalTransmission")
        .def_readonly("t", &OptimalTransmission::t)
        .def_readonly("interior", &OptimalTransmission::interior);
    py::class_<MinimizeResult>(m, "MinimizeResult")
        .def_readonly("t_star", &MinimizeResult::t_star)
        .def_readonly("epsilon", &MinimizeResult::epsilon);
    py::class_<InferenceResult>(m, "InferenceResult")
        .def_readonly("v1", &InferenceResult::v1)
        .def_readonly("v0_plus", &InferenceResult::v0_plus)
        .def_readonly("eta_1", &InferenceResult::eta_1)
        .def_readonly("t_opt", &InferenceResult::t_opt)
        .def_readonly("residual", &InferenceResult::residual)
        .def_readonly("vacuum_degenerate",
                      &InferenceResult::vacuum_degenerate);

    m.def("t_optimal", &t_optimal, py::arg("eta_1"));
    m.def("minimize_epr_over_t", &minimize_epr_over_t, py::arg("v1"));
    m.def("threshold_eta1", &threshold_eta1, py::arg("v0_plus"),
          py::arg("policy"));
    m.def("sweep", &sweep, py::arg("spec"));
    m.def("infer_inputs", &infer_inputs, py::arg("v_x"), py::arg("v_y"),
          py::arg("t"));

    py::class_<BandPassSpec>(m, "BandPassSpec")
        .def(py::init<>())
        .def(py::init([](double center_hz, double width_hz, int order) {
                 return BandPassSpec{center_hz, width_hz, order};
             }),
             py::arg("center_hz"), py::arg("width_hz"), py::arg("order") = 6)
        .def_readwrite("center_hz", &BandPassSpec::center_hz)
        .def_readwrite("width_hz", &BandPassSpec::width_hz)
        .def_readwrite("order", &BandPassSpec::order);
    py::class_<SosFilter>(m, "SosFilter")
        .def("apply",
             [](const SosFilter& f, const std::vector<double>& series) {
                 return f.apply(series);
             })
        .def("response", &SosFilter::response, py::arg("f_hz"))
        .def("noise_bandwidth_fraction", &SosFilter::noise_bandwidth_fraction,
             py::arg("n_grid") = 200001)
        .def_property_readonly("sample_rate_hz", &SosFilter::sample_rate_hz);
    m.def("design_butterworth_bandpass", &design_butterworth_bandpass,
          py::arg("spec"), py::arg("sample_rate_hz"));
    m.def(
        "butterworth_bandpass",
        [](const std::vector<double>& series, const BandPassSpec& spec,
           double sample_rate_hz) {
            return butterworth_bandpass(series, spec, sample_rate_hz);
        },
        py::arg("series"), py::arg("spec"), py::arg("sample_rate_hz"));

    py::class_<SampleBatch>(m, "SampleBatch")
        .def(py::init<>())
        .def_readwrite("x", &SampleBatch::x)
        .def_readwrite("y", &SampleBatch::y)
        .def_readwrite("theta", &SampleBatch::theta)
        .def_readwrite("seed", &SampleBatch::seed)
        .def_readwrite("sample_rate_hz", &SampleBatch::sample_rate_hz)
        .def_readwrite("filter", &SampleBatch::filter)
        .def("__len__", &SampleBatch::size);
    py::class_<Estimate>(m, "Estimate")
        .def_readonly("value", &Estimate::value)
        .def_readonly("std_error", &Estimate::std_error);
    py::class_<EstimateReport::QuadStats>(m, "QuadStats")
        .def_readonly("var_x", &EstimateReport::QuadStats::var_x)
        .def_readonly("var_y", &EstimateReport::QuadStats::var_y)
        .def_readonly("cov", &EstimateReport::QuadStats::cov)
        .def_readonly("cond_x_given_y",
                      &EstimateReport::QuadStats::cond_x_given_y)
        .def_readonly("cond_y_given_x",
                      &EstimateReport::QuadStats::cond_y_given_x)
        .def_readonly("gain_x_given_y",
                      &EstimateReport::QuadStats::gain_x_given_y)
        .def_readonly("gain_y_given_x",
                      &EstimateReport::QuadStats::gain_y_given_x);
    py::class_<EstimateReport>(m, "EstimateReport")
        .def_readonly("plus", &EstimateReport::plus)
        .def_readonly("minus", &EstimateReport::minus)
        .def_readonly("inseparability", &EstimateReport::inseparability)
        .def_readonly("pairing", &EstimateReport::pairing)
        .def_readonly("epr_x_given_y", &EstimateReport::epr_x_given_y)
        .def_readonly("epr_y_given_x", &EstimateReport::epr_y_given_x)
        .def_readonly("n", &EstimateReport::n)
        .def_readonly("qnl_scale", &EstimateReport::qnl_scale);

    m.def("sample_pairs", &sample_pairs, py::arg("cm"), py::arg("theta"),
          py::arg("n"), py::arg("seed"));
    m.def("apply_bandpass", &apply_bandpass, py::arg("batch"),
          py::arg("spec"));
    m.def("qnl_calibrate", &qnl_calibrate, py::arg("batch"));
    m.def("estimate", &estimate, py::arg("plus"), py::arg("minus"),
          py::arg("qnl_scale") = 1.0);

    m.def("mix64", &mix64, py::arg("z"));
    m.def("counter_hash", &counter_hash, py::arg("seed"), py::arg("counter"));
    m.def("unit_double", &unit_double, py::arg("bits"));
    m.def("normal_pair", &normal_pair, py::arg("seed"), py::arg("index"));

    py::class_<SamplerConfig>(m, "SamplerConfig")
        .def(py::init<>())
        .def_readwrite("n", &SamplerConfig::n)
        .def_readwrite("seed", &SamplerConfig::seed)
        .def_readwrite("sample_rate_hz", &SamplerConfig::sample_rate_hz)
        .def_readwrite("filter", &SamplerConfig::filter);
    py::class_<ConfigDocument>(m, "ConfigDocument")
        .def(py::init<>())
        .def_readwrite("scenario", &ConfigDocument::scenario)
        .def_readwrite("sampler", &ConfigDocument::sampler);
    py::class_<SweepDefaults>(m, "SweepDefaults")
        .def_readonly("parameter", &SweepDefaults::parameter)
        .def_readonly("from_", &SweepDefaults::from)
        .def_readonly("to", &SweepDefaults::to)
        .def_readonly("steps", &SweepDefaults::steps);
    py::class_<Preset>(m, "Preset")
        .def_readonly("name", &Preset::name)
        .def_readonly("description", &Preset::description)
        .def_readonly("config", &Preset::config)
        .def_readonly("sweep_defaults", &Preset::sweep_defaults);

    m.def("parse_config", &parse_config, py::arg("json_text"));
    m.def("load_config_file", &load_config_file, py::arg("path"));
    m.def("preset", &preset, py::arg("name"),
          py::return_value_policy::reference);
    m.def("preset_names", &preset_names);
}
