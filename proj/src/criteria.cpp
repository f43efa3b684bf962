#include "twinbeam/criteria.hpp"

#include <cmath>

#include "twinbeam/errors.hpp"

namespace twinbeam {

ConditionalVariance conditional_variance(const CorrelationMatrix4& cm,
                                         Direction direction, Quadrature q) {
    const Mode a = direction == Direction::x_given_y ? Mode::x : Mode::y;
    const Mode b = direction == Direction::x_given_y ? Mode::y : Mode::x;
    const double va = cm.var(a, q);
    const double vb = cm.var(b, q);
    const double c = cm.cross(q);
    if (vb <= 0.0) {
        throw DegenerateInputError(
            "conditioning variance is not positive; cannot form V_{a|b}");
    }
    return {va - c * c / vb, c / vb};
}

EprResult epr_value(const CorrelationMatrix4& cm, Direction direction) {
    EprResult result;
    result.conditionals.direction = direction;
    result.conditionals.plus =
        conditional_variance(cm, direction, Quadrature::plus);
    result.conditionals.minus =
        conditional_variance(cm, direction, Quadrature::minus);
    result.value =
        result.conditionals.plus.variance * result.conditionals.minus.variance;
    return result;
}

InseparabilityResult inseparability(const CorrelationMatrix4& cm) {
    // Normalized sum/difference variances per quadrature k:
    // V_{x +- y}^k = (V_x^k + V_y^k +- 2 C^k) / 2.
    double sum[2], diff[2];
    for (int k = 0; k < 2; ++k) {
        const auto q = static_cast<Quadrature>(k);
        const double vx = cm.var(Mode::x, q);
        const double vy = cm.var(Mode::y, q);
        const double c = cm.cross(q);
        sum[k] = 0.5 * (vx + vy + 2.0 * c);
        diff[k] = 0.5 * (vx + vy - 2.0 * c);
    }
    InseparabilityResult result;
    result.sum_plus_diff_minus = 0.5 * (sum[0] + diff[1]);
    result.sum_minus_diff_plus = 0.5 * (sum[1] + diff[0]);
    if (result.sum_plus_diff_minus <= result.sum_minus_diff_plus) {
        result.value = result.sum_plus_diff_minus;
        result.pairing = InseparabilityPairing::sum_plus_diff_minus;
    } else {
        result.value = result.sum_minus_diff_plus;
        result.pairing = InseparabilityPairing::sum_minus_diff_plus;
    }
    return result;
}

double inseparability_symmetric_closed_form(double v0_plus, double eta) {
    if (v0_plus <= 0.0) throw ValidationError("v0_plus must be positive");
    if (eta < 0.0 || eta > 1.0)
        throw ValidationError("eta must lie in [0, 1]");
    return eta * v0_plus + (1.0 - eta);
}

double epr_symmetric_closed_form(double v0_plus, double eta) {
    if (v0_plus <= 0.0) throw ValidationError("v0_plus must be positive");
    if (eta < 0.0 || eta > 1.0)
        throw ValidationError("eta must lie in [0, 1]");
    const double inner =
        1.0 - eta +
        (2.0 * eta - 1.0) / (eta * (v0_plus + 1.0 / v0_plus - 2.0) + 2.0);
    return 4.0 * inner * inner;
}

double epr_biased_5050(const VariancePair& v1) {
    if (!(v1.plus > 0.0) || !(v1.minus > 0.0)) {
        throw ValidationError("v1 variances must be positive");
    }
    const double p = v1.plus * v1.minus;
    return 4.0 * p / (p + v1.plus + v1.minus + 1.0);
}

double epr_biased_general(const VariancePair& v1, double t) {
    if (!(v1.plus > 0.0) || !(v1.minus > 0.0)) {
        throw ValidationError("v1 variances must be positive");
    }
    if (!(t >= 0.0) || !(t <= 1.0)) {
        throw ValidationError("t must lie in [0, 1]");
    }
    const double dp = 1.0 + t * (v1.minus - 1.0);
    const double dm = 1.0 + t * (v1.plus - 1.0);
    return v1.plus * v1.minus / (dp * dm);
}

double qkd_rate(const QkdRateInput& input) {
    const double eve = input.eve_conditional.plus * input.eve_conditional.minus;
    const double partner =
        input.partner_conditional.plus * input.partner_conditional.minus;
    if (!(eve > 0.0) || !(partner > 0.0)) {
        throw ValidationError("conditional-variance products must be positive");
    }
    return 0.5 * std::log2(eve / partner);
}

} // namespace twinbeam
