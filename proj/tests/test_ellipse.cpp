#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "twinbeam/criteria.hpp"
#include "twinbeam/ellipse.hpp"
#include "twinbeam/errors.hpp"

using namespace twinbeam;
using namespace twinbeam::testing;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("quadrature blocks of the symmetric scenario") {
    const CorrelationMatrix4 cm = build_scenario(symmetric7());

    const QuadratureCov2 plus = quadrature_block(cm, 0.0);
    CHECK(plus.var_x == doctest::Approx(kSymDiag).epsilon(1e-14));
    CHECK(plus.var_y == doctest::Approx(kSymDiag).epsilon(1e-14));
    CHECK(plus.cov == doctest::Approx(kSymCross).epsilon(1e-14));

    const QuadratureCov2 minus = quadrature_block(cm, kPi / 2.0);
    CHECK(minus.cov == doctest::Approx(-kSymCross).epsilon(1e-13));
}

TEST_CASE("block validation rejects impossible covariances") {
    CHECK_THROWS_AS((QuadratureCov2{-1.0, 1.0, 0.0}).validate(),
                    ValidationError);
    CHECK_THROWS_AS((QuadratureCov2{1.0, 0.0, 0.0}).validate(),
                    ValidationError);
    // |cov| = sqrt(var_x var_y): perfectly correlated, singular block.
    CHECK_THROWS_AS((QuadratureCov2{1.0, 4.0, 2.0}).validate(),
                    DegenerateInputError);
    CHECK_THROWS_AS(
        (QuadratureCov2{1.0, 1.0, std::nan("")}).validate(),
        ValidationError);
    CHECK_NOTHROW((QuadratureCov2{1.0, 1.0, 0.5}).validate());
}

TEST_CASE("directional deviations along the axes and diagonals") {
    const CorrelationMatrix4 cm = build_scenario(symmetric7());
    const QuadratureCov2 block = quadrature_block(cm, 0.0);

    CHECK(directional_std(block, 0.0) ==
          doctest::Approx(std::sqrt(kSymDiag)).epsilon(1e-14));
    CHECK(directional_std(block, kPi / 2.0) ==
          doctest::Approx(std::sqrt(kSymDiag)).epsilon(1e-14));
    // The diagonal direction measures the normalized sum variance.
    CHECK(directional_std(block, kPi / 4.0) ==
          doctest::Approx(std::sqrt(kV7)).epsilon(1e-13));
    CHECK(directional_std(block, 3.0 * kPi / 4.0) ==
          doctest::Approx(std::sqrt(kInvV7)).epsilon(1e-13));
}

TEST_CASE("summary of the symmetric plus-quadrature block") {
    const CorrelationMatrix4 cm = build_scenario(symmetric7());
    const EllipseSummary s = summarize(quadrature_block(cm, 0.0));

    CHECK(s.sigma_x == doctest::Approx(std::sqrt(kSymDiag)).epsilon(1e-14));
    CHECK(s.sigma_y == doctest::Approx(std::sqrt(kSymDiag)).epsilon(1e-14));
    CHECK(s.sigma_sum == doctest::Approx(std::sqrt(kV7)).epsilon(1e-13));
    CHECK(s.sigma_diff == doctest::Approx(std::sqrt(kInvV7)).epsilon(1e-13));
    CHECK(s.sigma_x_given_y ==
          doctest::Approx(std::sqrt(1.0 / kSymDiag)).epsilon(1e-13));
    CHECK(s.sigma_y_given_x ==
          doctest::Approx(std::sqrt(1.0 / kSymDiag)).epsilon(1e-13));

    // Equal variances with negative correlation: major axis on the
    // anti-diagonal.
    REQUIRE(s.axes.angle.has_value());
    CHECK(*s.axes.angle == doctest::Approx(3.0 * kPi / 4.0).epsilon(1e-13));
    CHECK(s.axes.semi_major ==
          doctest::Approx(std::sqrt(kInvV7)).epsilon(1e-13));
    CHECK(s.axes.semi_minor ==
          doctest::Approx(std::sqrt(kV7)).epsilon(1e-13));
}

TEST_CASE("minus-quadrature block swaps the squeezed direction") {
    const CorrelationMatrix4 cm = build_scenario(symmetric7());
    const EllipseSummary s = summarize(quadrature_block(cm, kPi / 2.0));
    CHECK(s.sigma_sum == doctest::Approx(std::sqrt(kInvV7)).epsilon(1e-13));
    CHECK(s.sigma_diff == doctest::Approx(std::sqrt(kV7)).epsilon(1e-13));
    REQUIRE(s.axes.angle.has_value());
    CHECK(*s.axes.angle == doctest::Approx(kPi / 4.0).epsilon(1e-13));
}

TEST_CASE("isotropic block has no principal direction") {
    const QuadratureCov2 vac{1.0, 1.0, 0.0};
    CHECK(!axis_angle(vac).has_value());
    const EllipseSummary s = summarize(vac);
    CHECK(s.axes.semi_major == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.axes.semi_minor == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(!s.axes.angle.has_value());
}

TEST_CASE("single squeezer major axis points along the split amplitudes") {
    // Lossless pure squeezer split at t: the antisqueezed quadrature block is
    // V1 w w^T + z z^T with w = (sqrt(1-t), sqrt(t)), so the major axis sits
    // exactly at arcsin(sqrt(t)).
    const CorrelationMatrix4 cm =
        mix_on_beamsplitter({kV29, kV53}, kVacuum, 0.78);
    const QuadratureCov2 minus = quadrature_block(cm, kPi / 2.0);
    const auto angle = axis_angle(minus);
    REQUIRE(angle.has_value());
    CHECK(*angle == doctest::Approx(1.0825910633979794).epsilon(1e-12));

    const EllipseSummary s = summarize(minus);
    CHECK(s.axes.semi_major == doctest::Approx(std::sqrt(kV53)).epsilon(1e-12));
    CHECK(s.axes.semi_minor == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conditional deviations from the biased balanced scenario") {
    const CorrelationMatrix4 cm = build_scenario(single7());
    const EllipseSummary s = summarize(quadrature_block(cm, 0.0));
    CHECK(s.sigma_x_given_y ==
          doctest::Approx(0.57677990744574641).epsilon(1e-13));
    CHECK(s.sigma_x_given_y * s.sigma_x_given_y ==
          doctest::Approx(0.33267506163312379).epsilon(1e-13));
}

TEST_CASE("polyline starts on the major axis and respects intercepts") {
    const CorrelationMatrix4 cm = build_scenario(symmetric7());
    const QuadratureCov2 block = quadrature_block(cm, 0.0);
    const EllipseSummary s = summarize(block);
    const auto pts = ellipse_polyline(block, 720);
    REQUIRE(pts.size() == 720);

    // First point: semi-major radius along the major axis.
    const double r0 = std::hypot(pts[0].x, pts[0].y);
    CHECK(r0 == doctest::Approx(s.axes.semi_major).epsilon(1e-12));
    const double ang0 = std::atan2(pts[0].y, pts[0].x);
    const double folded = ang0 < 0.0 ? ang0 + kPi : ang0;
    CHECK(folded == doctest::Approx(*s.axes.angle).epsilon(1e-12));

    // Every boundary point solves v^T Sigma^-1 v = 1.
    const double det = block.det();
    for (std::size_t i = 0; i < pts.size(); i += 37) {
        const double q = (block.var_y * pts[i].x * pts[i].x -
                          2.0 * block.cov * pts[i].x * pts[i].y +
                          block.var_x * pts[i].y * pts[i].y) /
                         det;
        CHECK(q == doctest::Approx(1.0).epsilon(1e-10));
    }

    CHECK_THROWS_AS(ellipse_polyline(block, 7), ValidationError);
}

TEST_CASE("axis intercepts equal the conditional deviations") {
    // The ellipse crosses y = 0 at x = +-sigma_x_given_y: substituting y = 0
    // into v^T Sigma^-1 v = 1 gives x^2 = det/var_y = V_x - C^2/V_y.
    ScenarioConfig cfg = symmetric7();
    cfg.eta_y = 0.7;
    const CorrelationMatrix4 cm = build_scenario(cfg);
    const QuadratureCov2 block = quadrature_block(cm, 0.0);
    const EllipseSummary s = summarize(block);
    const double x_intercept = std::sqrt(block.det() / block.var_y);
    const double y_intercept = std::sqrt(block.det() / block.var_x);
    CHECK(x_intercept == doctest::Approx(s.sigma_x_given_y).epsilon(1e-13));
    CHECK(y_intercept == doctest::Approx(s.sigma_y_given_x).epsilon(1e-13));

    const ConditionalVariance cv =
        conditional_variance(cm, Direction::x_given_y, Quadrature::plus);
    CHECK(s.sigma_x_given_y * s.sigma_x_given_y ==
          doctest::Approx(cv.variance).epsilon(1e-13));
}
