#include "twinbeam/state.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "twinbeam/errors.hpp"

namespace twinbeam {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw ValidationError(std::string(what) + " must be finite");
    }
}

void require_unit_interval(double v, const char* what) {
    require_finite(v, what);
    if (v < 0.0 || v > 1.0) {
        throw ValidationError(std::string(what) + " must lie in [0, 1], got " +
                              std::to_string(v));
    }
}

} // namespace

CorrelationMatrix4 CorrelationMatrix4::identity() {
    CorrelationMatrix4 cm;
    for (int i = 0; i < 4; ++i) cm.m[i][i] = 1.0;
    return cm;
}

double CorrelationMatrix4::min_eigenvalue() const {
    Eigen::Matrix4d a;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a(r, c) = m[r][c];
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(
        a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void CorrelationMatrix4::validate(double psd_tol) const {
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (!std::isfinite(m[r][c])) {
                throw ValidationError("correlation matrix entry not finite");
            }
            if (std::abs(m[r][c] - m[c][r]) > 1e-12) {
                throw ValidationError("correlation matrix not symmetric");
            }
        }
        if (m[r][r] <= 0.0) {
            throw ValidationError("correlation matrix diagonal not positive");
        }
    }
    if (min_eigenvalue() < -psd_tol) {
        throw ValidationError("correlation matrix not positive semidefinite");
    }
}

double db_to_variance(double db) {
    require_finite(db, "db");
    return std::pow(10.0, db / 10.0);
}

double variance_to_db(double v) {
    require_finite(v, "variance");
    if (v <= 0.0) {
        throw ValidationError("variance must be positive to convert to dB");
    }
    return 10.0 * std::log10(v);
}

VariancePair squeezer_output(const SqueezerSpec& spec) {
    require_finite(spec.v0_plus, "v0_plus");
    if (spec.v0_plus <= 0.0) {
        throw ValidationError("v0_plus must be positive");
    }
    require_unit_interval(spec.eta, "eta");
    return {spec.eta * spec.v0_plus + (1.0 - spec.eta),
            spec.eta / spec.v0_plus + (1.0 - spec.eta)};
}

CorrelationMatrix4 mix_on_beamsplitter(const VariancePair& in1,
                                       const VariancePair& in2, double t) {
    if (!(in1.plus > 0.0) || !(in1.minus > 0.0) || !(in2.plus > 0.0) ||
        !(in2.minus > 0.0)) {
        throw ValidationError("input variances must be positive");
    }
    require_unit_interval(t, "t");

    // Input 2 enters with the pi/2 phase offset: its pair is swapped.
    const double v2[2] = {in2.minus, in2.plus};
    const double v1[2] = {in1.plus, in1.minus};
    const double s = std::sqrt(t * (1.0 - t));

    CorrelationMatrix4 cm;
    for (int k = 0; k < 2; ++k) {
        const auto q = static_cast<Quadrature>(k);
        const int ix = basis_index(Mode::x, q);
        const int iy = basis_index(Mode::y, q);
        cm.m[ix][ix] = (1.0 - t) * v1[k] + t * v2[k];
        cm.m[iy][iy] = t * v1[k] + (1.0 - t) * v2[k];
        cm.m[ix][iy] = cm.m[iy][ix] = s * (v1[k] - v2[k]);
    }
    return cm;
}

CorrelationMatrix4 apply_loss(const CorrelationMatrix4& cm, Mode mode,
                              double eta) {
    require_unit_interval(eta, "eta");
    const double root = std::sqrt(eta);
    CorrelationMatrix4 out = cm;
    for (int k = 0; k < 2; ++k) {
        const auto q = static_cast<Quadrature>(k);
        const int i = basis_index(mode, q);
        const int j = basis_index(mode == Mode::x ? Mode::y : Mode::x, q);
        out.m[i][i] = eta * cm.m[i][i] + (1.0 - eta);
        out.m[i][j] = out.m[j][i] = root * cm.m[i][j];
    }
    // cross-quadrature entries of the lossy mode scale the same way
    const int a0 = basis_index(mode, Quadrature::plus);
    const int a1 = basis_index(mode, Quadrature::minus);
    out.m[a0][a1] = out.m[a1][a0] = eta * cm.m[a0][a1];
    const Mode other = mode == Mode::x ? Mode::y : Mode::x;
    const int b0 = basis_index(other, Quadrature::plus);
    const int b1 = basis_index(other, Quadrature::minus);
    out.m[a0][b1] = out.m[b1][a0] = root * cm.m[a0][b1];
    out.m[a1][b0] = out.m[b0][a1] = root * cm.m[a1][b0];
    return out;
}

CorrelationMatrix4 build_scenario(const ScenarioConfig& config) {
    const VariancePair v1 =
        config.input1 ? squeezer_output(*config.input1) : kVacuum;
    const VariancePair v2 =
        config.input2 ? squeezer_output(*config.input2) : kVacuum;
    CorrelationMatrix4 cm = mix_on_beamsplitter(v1, v2, config.t);
    cm = apply_loss(cm, Mode::x, config.eta_x);
    cm = apply_loss(cm, Mode::y, config.eta_y);
    return cm;
}

CorrelationMatrix4 rotate_quadrature(const CorrelationMatrix4& cm,
                                     double theta) {
    require_finite(theta, "theta");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // Block-diagonal rotation acting on (X+, X-) of each mode.
    double r[4][4] = {};
    for (int mode = 0; mode < 2; ++mode) {
        const int o = 2 * mode;
        r[o][o] = c;
        r[o][o + 1] = s;
        r[o + 1][o] = -s;
        r[o + 1][o + 1] = c;
    }
    CorrelationMatrix4 out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int p = 0; p < 4; ++p) {
                if (r[i][p] == 0.0) continue;
                for (int q = 0; q < 4; ++q) {
                    acc += r[i][p] * cm.m[p][q] * r[j][q];
                }
            }
            out.m[i][j] = acc;
        }
    }
    // clean up the tiny asymmetry floating point leaves behind
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const double sym = 0.5 * (out.m[i][j] + out.m[j][i]);
            out.m[i][j] = out.m[j][i] = sym;
        }
    }
    return out;
}

} // namespace twinbeam
