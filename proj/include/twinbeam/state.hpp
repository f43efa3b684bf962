#pragma once

#include <array>
#include <optional>

namespace twinbeam {

/// Quadrature variances of one mode in quantum-noise units (vacuum = 1).
struct VariancePair {
    double plus = 1.0;   ///< amplitude quadrature X+
    double minus = 1.0;  ///< phase quadrature X-
};

inline constexpr VariancePair kVacuum{1.0, 1.0};

/// A minimum-uncertainty squeezed source followed by a transmission eta.
/// The pure source has variances (v0_plus, 1/v0_plus); the output is what
/// arrives at the beamsplitter input.
struct SqueezerSpec {
    double v0_plus = 1.0;
    double eta = 1.0;
};

/// Full two-mode scenario: two input ports (vacuum when unset), beamsplitter
/// transmission t, and independent detection-path transmissions per beam.
/// Beam y carries the fraction t of input 1; beam x the remaining 1 - t.
struct ScenarioConfig {
    std::optional<SqueezerSpec> input1;
    std::optional<SqueezerSpec> input2;
    double t = 0.5;
    double eta_x = 1.0;
    double eta_y = 1.0;
};

enum class Mode { x = 0, y = 1 };
enum class Quadrature { plus = 0, minus = 1 };

/// Basis order used throughout: (X_x+, X_x-, X_y+, X_y-).
constexpr int basis_index(Mode m, Quadrature q) {
    return 2 * static_cast<int>(m) + static_cast<int>(q);
}

/// Symmetric 4x4 correlation matrix of the two detected beams,
/// normalized so the vacuum state is the identity.
struct CorrelationMatrix4 {
    std::array<std::array<double, 4>, 4> m{};

    static CorrelationMatrix4 identity();

    double operator()(int row, int col) const { return m[row][col]; }
    double& operator()(int row, int col) { return m[row][col]; }

    double var(Mode mode, Quadrature q) const {
        const int i = basis_index(mode, q);
        return m[i][i];
    }

    /// Same-quadrature cross correlation <X_x^k X_y^k>.
    double cross(Quadrature q) const {
        return m[basis_index(Mode::x, q)][basis_index(Mode::y, q)];
    }

    double min_eigenvalue() const;

    /// Throws ValidationError unless symmetric, positive on the diagonal and
    /// positive semidefinite within psd_tol.
    void validate(double psd_tol = 1e-12) const;
};

/// Noise power in dB to linear variance: v = 10^(db/10).
double db_to_variance(double db);
double variance_to_db(double v);

/// Variances leaving the source path: loss admixes vacuum,
/// v -> eta v + (1 - eta), independently per quadrature.
VariancePair squeezer_output(const SqueezerSpec& spec);

/// Mix two independent input modes on a beamsplitter of transmission t.
///
/// The pi/2 relative phase between the inputs is folded into the state:
/// input 1 enters squeezed along X+ as given, input 2 enters squeezed along
/// X-, i.e. its VariancePair is swapped before mixing. With v2 the swapped
/// pair, per quadrature k:
///
///   V_x^k    = (1-t) v1^k + t v2^k
///   V_y^k    = t v1^k + (1-t) v2^k
///   C_xy^kk  = sqrt(t(1-t)) (v1^k - v2^k)
///
/// and cross-quadrature correlations vanish. Setting input 2 to vacuum
/// reproduces the single-squeezer relations exactly.
CorrelationMatrix4 mix_on_beamsplitter(const VariancePair& in1,
                                       const VariancePair& in2, double t);

/// Pure transmission loss eta on one detected beam: its 2x2 diagonal block
/// maps to eta V + (1-eta) I and the cross block scales by sqrt(eta).
CorrelationMatrix4 apply_loss(const CorrelationMatrix4& cm, Mode mode,
                              double eta);

/// squeezer_output per port, mix, then per-beam detection losses.
CorrelationMatrix4 build_scenario(const ScenarioConfig& config);

/// Homodyne phase rotation by theta applied to both modes:
/// X^theta = cos(theta) X+ + sin(theta) X-. theta and theta + pi give the
/// same matrix.
CorrelationMatrix4 rotate_quadrature(const CorrelationMatrix4& cm,
                                     double theta);

} // namespace twinbeam
