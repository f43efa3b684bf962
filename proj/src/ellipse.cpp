#include "twinbeam/ellipse.hpp"

#include <cmath>

#include "twinbeam/errors.hpp"

namespace twinbeam {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Eigen2 {
    double lambda_major = 1.0;
    double lambda_minor = 1.0;
    double angle = 0.0;  // major-axis direction, [0, pi)
    bool isotropic = false;
};

// Closed-form eigendecomposition of [[a, c], [c, b]]. The major direction is
// the eigenvector of the larger eigenvalue; isotropic when the deviatoric
// part is negligible against the trace.
Eigen2 eig_sym_2x2(double a, double b, double c) {
    Eigen2 e;
    const double half_trace = 0.5 * (a + b);
    const double half_diff = 0.5 * (a - b);
    const double radius = std::hypot(half_diff, c);
    e.lambda_major = half_trace + radius;
    e.lambda_minor = half_trace - radius;
    if (radius <= 1e-12 * half_trace) {
        e.isotropic = true;
        e.angle = 0.0;
        return e;
    }
    double angle = 0.5 * std::atan2(2.0 * c, a - b);
    if (angle < 0.0) angle += kPi;
    if (angle >= kPi) angle -= kPi;
    e.angle = angle;
    return e;
}

} // namespace

void QuadratureCov2::validate() const {
    if (!std::isfinite(var_x) || !std::isfinite(var_y) || !std::isfinite(cov)) {
        throw ValidationError("covariance block entries must be finite");
    }
    if (var_x <= 0.0 || var_y <= 0.0) {
        throw ValidationError("covariance block variances must be positive");
    }
    if (det() <= 0.0) {
        throw DegenerateInputError(
            "covariance block is singular; ellipse is degenerate");
    }
}

QuadratureCov2 quadrature_block(const CorrelationMatrix4& cm, double theta) {
    const CorrelationMatrix4 rotated = rotate_quadrature(cm, theta);
    const int ix = basis_index(Mode::x, Quadrature::plus);
    const int iy = basis_index(Mode::y, Quadrature::plus);
    return {rotated(ix, ix), rotated(iy, iy), rotated(ix, iy)};
}

double directional_std(const QuadratureCov2& block, double angle) {
    block.validate();
    if (!std::isfinite(angle)) throw ValidationError("angle must be finite");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double v =
        c * c * block.var_x + s * s * block.var_y + 2.0 * c * s * block.cov;
    return std::sqrt(v);
}

std::vector<Point2> ellipse_polyline(const QuadratureCov2& block,
                                     int n_points) {
    block.validate();
    if (n_points < 8) {
        throw ValidationError("n_points must be at least 8");
    }
    const Eigen2 e = eig_sym_2x2(block.var_x, block.var_y, block.cov);
    const double ca = std::cos(e.angle);
    const double sa = std::sin(e.angle);
    const double ra = std::sqrt(e.lambda_major);
    const double rb = std::sqrt(e.lambda_minor);
    std::vector<Point2> points;
    points.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double phi = 2.0 * kPi * i / n_points;
        const double u = ra * std::cos(phi);
        const double v = rb * std::sin(phi);
        points.push_back({ca * u - sa * v, sa * u + ca * v});
    }
    return points;
}

EllipseSummary summarize(const QuadratureCov2& block) {
    block.validate();
    EllipseSummary s;
    s.sigma_x = std::sqrt(block.var_x);
    s.sigma_y = std::sqrt(block.var_y);
    s.sigma_sum = std::sqrt(0.5 * (block.var_x + block.var_y + 2.0 * block.cov));
    s.sigma_diff =
        std::sqrt(0.5 * (block.var_x + block.var_y - 2.0 * block.cov));
    s.sigma_x_given_y =
        std::sqrt(block.var_x - block.cov * block.cov / block.var_y);
    s.sigma_y_given_x =
        std::sqrt(block.var_y - block.cov * block.cov / block.var_x);
    const Eigen2 e = eig_sym_2x2(block.var_x, block.var_y, block.cov);
    s.axes.semi_major = std::sqrt(e.lambda_major);
    s.axes.semi_minor = std::sqrt(e.lambda_minor);
    if (!e.isotropic) s.axes.angle = e.angle;
    return s;
}

std::optional<double> axis_angle(const QuadratureCov2& block) {
    block.validate();
    const Eigen2 e = eig_sym_2x2(block.var_x, block.var_y, block.cov);
    if (e.isotropic) return std::nullopt;
    return e.angle;
}

} // namespace twinbeam
