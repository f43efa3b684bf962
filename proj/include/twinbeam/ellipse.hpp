#pragma once

#include <optional>
#include <vector>

#include "twinbeam/state.hpp"

namespace twinbeam {

/// 2x2 covariance of (dX_x, dX_y) at one measured quadrature angle.
struct QuadratureCov2 {
    double var_x = 1.0;
    double var_y = 1.0;
    double cov = 0.0;

    /// Throws unless symmetric-positive-definite-representable: positive
    /// variances and det > 0 (DegenerateInputError on a singular block).
    void validate() const;
    double det() const { return var_x * var_y - cov * cov; }
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Principal axes of the one-sigma ellipse {v^T Sigma^-1 v = 1}.
/// angle is the major-axis direction in [0, pi); unset when the block is
/// isotropic and every direction is principal.
struct EllipseAxes {
    double semi_major = 1.0;
    double semi_minor = 1.0;
    std::optional<double> angle;
};

struct EllipseSummary {
    double sigma_x = 1.0;
    double sigma_y = 1.0;
    double sigma_sum = 1.0;        ///< std of (dX_x + dX_y)/sqrt(2)
    double sigma_diff = 1.0;       ///< std of (dX_x - dX_y)/sqrt(2)
    double sigma_x_given_y = 1.0;  ///< optimal-gain conditional deviations
    double sigma_y_given_x = 1.0;
    EllipseAxes axes;
};

/// Extract the (X_x^theta, X_y^theta) covariance block of a scenario matrix.
/// theta = 0 is the amplitude block, theta = pi/2 the phase block.
QuadratureCov2 quadrature_block(const CorrelationMatrix4& cm, double theta);

/// Standard deviation along the direction (cos angle, sin angle):
/// sqrt(u^T Sigma u).
double directional_std(const QuadratureCov2& block, double angle);

/// n_points samples of the one-sigma ellipse boundary, parameter angle
/// 2 pi i / n_points starting on the major axis. The polyline is not closed;
/// repeat the first point to close it. Its x-axis intercepts sit at
/// +- sigma_x_given_y and the y-intercepts at +- sigma_y_given_x.
std::vector<Point2> ellipse_polyline(const QuadratureCov2& block,
                                     int n_points);

EllipseSummary summarize(const QuadratureCov2& block);

/// Major-axis direction in [0, pi); nullopt for an isotropic block.
std::optional<double> axis_angle(const QuadratureCov2& block);

} // namespace twinbeam
