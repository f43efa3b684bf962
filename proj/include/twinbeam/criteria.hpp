#pragma once

#include "twinbeam/state.hpp"

namespace twinbeam {

enum class Direction { x_given_y, y_given_x };

/// One optimally weighted conditional measurement: the residual variance
/// min_g <(dX_a - g dX_b)^2> together with the gain that reaches it.
struct ConditionalVariance {
    double variance = 0.0;
    double gain = 0.0;
};

struct ConditionalVariances {
    ConditionalVariance plus;
    ConditionalVariance minus;
    Direction direction = Direction::x_given_y;
};

/// EPR criterion value: product of the two conditional variances.
/// Entanglement (steering) when value < 1.
struct EprResult {
    double value = 0.0;
    ConditionalVariances conditionals;
};

/// The sum/difference pairing that realizes the smaller combined variance.
enum class InseparabilityPairing {
    sum_plus_diff_minus,  ///< (V+_{x+y} + V-_{x-y}) / 2
    sum_minus_diff_plus,  ///< (V-_{x+y} + V+_{x-y}) / 2
};

struct InseparabilityResult {
    double value = 0.0;
    InseparabilityPairing pairing = InseparabilityPairing::sum_plus_diff_minus;
    double sum_plus_diff_minus = 0.0;
    double sum_minus_diff_plus = 0.0;
};

enum class Reconciliation { direct, reverse };

/// Conditional-variance products entering the information rate: what the
/// reference beam looks like given Eve and given the receiving party.
struct QkdRateInput {
    VariancePair eve_conditional;
    VariancePair partner_conditional;
    Reconciliation reconciliation = Reconciliation::reverse;
};

/// Optimal-gain conditional variance of one beam given the other, same
/// quadrature: V_{a|b} = V_a - C^2 / V_b, gain g = C / V_b.
ConditionalVariance conditional_variance(const CorrelationMatrix4& cm,
                                         Direction direction, Quadrature q);

/// epsilon_{a|b} = V+_{a|b} V-_{a|b}.
EprResult epr_value(const CorrelationMatrix4& cm, Direction direction);

/// Inseparability: both sum/difference pairings of the normalized combined
/// quadratures, reported as the smaller one with its label.
InseparabilityResult inseparability(const CorrelationMatrix4& cm);

/// Symmetric 50:50 case with equal squeezers and total transmission eta:
/// I = eta v0 + (1 - eta).
double inseparability_symmetric_closed_form(double v0_plus, double eta);

/// Same symmetric case for the EPR product:
/// eps = 4 (1 - eta + (2 eta - 1) / (eta (v0 + 1/v0 - 2) + 2))^2.
double epr_symmetric_closed_form(double v0_plus, double eta);

/// Single squeezer v1 against vacuum on a 50:50 splitter:
/// eps = 4 v1+ v1- / (v1+ v1- + v1+ + v1- + 1).
double epr_biased_5050(const VariancePair& v1);

/// Single squeezer at arbitrary transmission t:
/// eps = v1+ v1- / ((1 + t(v1- - 1))(1 + t(v1+ - 1))).
double epr_biased_general(const VariancePair& v1, double t);

/// Information-rate difference dI = (1/2) log2(prod_eve / prod_partner).
/// Positive means a secure key is possible for the stated reconciliation.
double qkd_rate(const QkdRateInput& input);

} // namespace twinbeam
