#pragma once

#include "twinbeam/state.hpp"

namespace twinbeam::testing {

// Pinned reference values, all computed independently of the library
// (closed-form arithmetic at double precision plus scipy for the filter).

// 10^(-0.7), the linear variance of a -7 dB squeezed quadrature.
inline constexpr double kV7 = 0.19952623149688796;
inline constexpr double kInvV7 = 5.0118723362727229;

// Measured working point: -2.9 dB / +5.3 dB output variances.
inline constexpr double kV29 = 0.51286138399136486;   // 10^(-0.29)
inline constexpr double kV53 = 3.3884415613920255;    // 10^(0.53)

// Symmetric two-squeezer scenario, balanced splitter, lossless arms:
// every diagonal entry and the same-quadrature cross correlation.
inline constexpr double kSymDiag = 2.6056992838848054;
inline constexpr double kSymCross = -2.4061730523879174;
inline constexpr double kSymEpr = 0.14728259001091531;  // (1/kSymDiag)^2

// Same scenario with eta_y = 0.5.
inline constexpr double kHalfLossVy = 1.8028496419424027;
inline constexpr double kHalfLossCross = -1.7014212820518303;
inline constexpr double kHalfLossVyGivenX = 0.6918870696600707;
inline constexpr double kHalfLossEprYgX = 0.47870771716279953;
inline constexpr double kHalfLossGainXgY = -0.94373997834822609;

// Source parameters recovered from the measured variance pair.
inline constexpr double kInferEta1 = 0.61194988387260884;
inline constexpr double kInferV0 = 0.20395668199841668;
inline constexpr double kInferV0Db = -6.9046206182272274;
inline constexpr double kInferTopt = 0.81706037238841321;
inline constexpr double kEpsAtTopt = 0.97808411737700415;

// Beam variances of the measured squeezer split at t = 0.78.
inline constexpr double kT78VxP = 0.89282950447810027;
inline constexpr double kT78VyP = 0.62003187951326459;
inline constexpr double kT78VxM = 1.5254571435062456;
inline constexpr double kT78VyM = 2.8629844178857799;

inline ScenarioConfig symmetric7() {
    ScenarioConfig cfg;
    cfg.input1 = SqueezerSpec{kV7, 1.0};
    cfg.input2 = SqueezerSpec{kV7, 1.0};
    return cfg;
}

inline ScenarioConfig single7(double t = 0.5) {
    ScenarioConfig cfg;
    cfg.input1 = SqueezerSpec{kV7, 1.0};
    cfg.t = t;
    return cfg;
}

inline ScenarioConfig measured_at(double t) {
    ScenarioConfig cfg;
    cfg.input1 = SqueezerSpec{kInferV0, kInferEta1};
    cfg.t = t;
    return cfg;
}

} // namespace twinbeam::testing
