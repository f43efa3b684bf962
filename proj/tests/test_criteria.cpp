#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "twinbeam/criteria.hpp"
#include "twinbeam/errors.hpp"

using namespace twinbeam;
using namespace twinbeam::testing;

TEST_CASE("conditional variance hits the pinned symmetric values") {
    const CorrelationMatrix4 cm = build_scenario(symmetric7());
    const ConditionalVariance cv =
        conditional_variance(cm, Direction::x_given_y, Quadrature::plus);
    // V - C^2/V = (V^2 - C^2)/V = 1/V for a pure state.
    CHECK(cv.variance == doctest::Approx(1.0 / kSymDiag).epsilon(1e-14));
    CHECK(cv.gain == doctest::Approx(kSymCross / kSymDiag).epsilon(1e-14));
}

TEST_CASE("conditional variance with an asymmetric loss") {
    ScenarioConfig cfg = symmetric7();
    cfg.eta_y = 0.5;
    const CorrelationMatrix4 cm = build_scenario(cfg);

    // Conditioning the lossless beam on the lossy one gives exactly the
    // quantum noise limit at this loss value.
    const ConditionalVariance xy =
        conditional_variance(cm, Direction::x_given_y, Quadrature::plus);
    CHECK(xy.variance == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(xy.gain == doctest::Approx(kHalfLossGainXgY).epsilon(1e-14));

    const ConditionalVariance yx =
        conditional_variance(cm, Direction::y_given_x, Quadrature::plus);
    CHECK(yx.variance == doctest::Approx(kHalfLossVyGivenX).epsilon(1e-14));

    const EprResult eps = epr_value(cm, Direction::y_given_x);
    CHECK(eps.value == doctest::Approx(kHalfLossEprYgX).epsilon(1e-14));
}

TEST_CASE("conditioning on a dead channel is rejected") {
    CorrelationMatrix4 cm = CorrelationMatrix4::identity();
    cm(2, 2) = 0.0;
    cm(3, 3) = 0.0;
    CHECK_THROWS_AS(
        conditional_variance(cm, Direction::x_given_y, Quadrature::plus),
        DegenerateInputError);
}

TEST_CASE("EPR product of the symmetric lossless scenario") {
    const CorrelationMatrix4 cm = build_scenario(symmetric7());
    const EprResult xy = epr_value(cm, Direction::x_given_y);
    const EprResult yx = epr_value(cm, Direction::y_given_x);
    CHECK(xy.value == doctest::Approx(kSymEpr).epsilon(1e-13));
    CHECK(yx.value == doctest::Approx(kSymEpr).epsilon(1e-13));
    CHECK(xy.conditionals.plus.variance ==
          doctest::Approx(1.0 / kSymDiag).epsilon(1e-13));
    CHECK(xy.conditionals.direction == Direction::x_given_y);
}

TEST_CASE("inseparability picks the squeezed pairing") {
    const CorrelationMatrix4 cm = build_scenario(symmetric7());
    const InseparabilityResult insep = inseparability(cm);
    CHECK(insep.value == doctest::Approx(kV7).epsilon(1e-13));
    CHECK(insep.pairing == InseparabilityPairing::sum_plus_diff_minus);
    CHECK(insep.sum_plus_diff_minus == doctest::Approx(kV7).epsilon(1e-13));
    CHECK(insep.sum_minus_diff_plus ==
          doctest::Approx(kInvV7).epsilon(1e-13));
}

TEST_CASE("vacuum sits exactly on the inseparability boundary") {
    const InseparabilityResult insep =
        inseparability(CorrelationMatrix4::identity());
    CHECK(insep.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(insep.sum_plus_diff_minus == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(insep.sum_minus_diff_plus == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(insep.pairing == InseparabilityPairing::sum_plus_diff_minus);
}

TEST_CASE("symmetric closed forms match their pinned values") {
    CHECK(inseparability_symmetric_closed_form(kV7, 1.0) ==
          doctest::Approx(kV7).epsilon(1e-15));
    CHECK(inseparability_symmetric_closed_form(kV7, 0.8) ==
          doctest::Approx(0.35962098519751037).epsilon(1e-15));
    CHECK(epr_symmetric_closed_form(kV7, 1.0) ==
          doctest::Approx(kSymEpr).epsilon(1e-14));
    // At half transmission the EPR product reaches the boundary exactly.
    CHECK(epr_symmetric_closed_form(kV7, 0.5) ==
          doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(inseparability_symmetric_closed_form(0.0, 1.0),
                    ValidationError);
    CHECK_THROWS_AS(inseparability_symmetric_closed_form(kV7, -0.1),
                    ValidationError);
    CHECK_THROWS_AS(epr_symmetric_closed_form(kV7, 1.5), ValidationError);
    CHECK_THROWS_AS(epr_symmetric_closed_form(-1.0, 0.5), ValidationError);
}

TEST_CASE("balanced-splitter closed form at the pinned working points") {
    CHECK(epr_biased_5050({kV7, kInvV7}) ==
          doctest::Approx(0.55467742663364487).epsilon(1e-14));
    CHECK(epr_biased_5050({kV29, kV53}) ==
          doctest::Approx(1.0470092879223754).epsilon(1e-14));
    // Vacuum input: no correlations, product of units.
    CHECK(epr_biased_5050({1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(epr_biased_5050({0.0, 1.0}), ValidationError);
}

TEST_CASE("general-splitter closed form and its balanced limit") {
    CHECK(epr_biased_general({kV29, kV53}, 0.78) ==
          doctest::Approx(0.97896461854830274).epsilon(1e-14));
    CHECK(epr_biased_general({kV7, kInvV7}, 0.78) ==
          doctest::Approx(0.64471373660637647).epsilon(1e-14));
    CHECK(epr_biased_general({kV29, kV53}, 0.5) ==
          doctest::Approx(epr_biased_5050({kV29, kV53})).epsilon(1e-13));
    CHECK_THROWS_AS(epr_biased_general({kV29, kV53}, -0.01), ValidationError);
    CHECK_THROWS_AS(epr_biased_general({kV29, kV53}, 1.01), ValidationError);
}

TEST_CASE("engine and closed form agree on the measured working point") {
    const CorrelationMatrix4 cm =
        mix_on_beamsplitter({kV29, kV53}, kVacuum, 0.78);
    const EprResult eps = epr_value(cm, Direction::x_given_y);
    CHECK(eps.value ==
          doctest::Approx(0.97896461854830274).epsilon(1e-12));
}

TEST_CASE("information rate difference from conditional products") {
    QkdRateInput in;
    in.eve_conditional = {1.0, 1.0};
    in.partner_conditional = {0.5, 0.5};
    CHECK(qkd_rate(in) == doctest::Approx(1.0).epsilon(1e-15));

    // Beam y conditioned on x at eta_y = 0.5, Eve held at the vacuum limit.
    QkdRateInput half;
    half.eve_conditional = {1.0, 1.0};
    half.partner_conditional = {kHalfLossVyGivenX, kHalfLossVyGivenX};
    CHECK(qkd_rate(half) ==
          doctest::Approx(0.53139151560477318).epsilon(1e-14));

    QkdRateInput bad;
    bad.eve_conditional = {0.0, 1.0};
    bad.partner_conditional = {0.5, 0.5};
    CHECK_THROWS_AS(qkd_rate(bad), ValidationError);
}
