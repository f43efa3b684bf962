#include "twinbeam/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "twinbeam/ellipse.hpp"
#include "twinbeam/errors.hpp"
#include "twinbeam/rng.hpp"

namespace twinbeam {

namespace {

constexpr std::size_t kJackknifeBlocks = 100;
constexpr std::size_t kMinSamples = 1000;

struct Sums {
    double sx = 0.0, sy = 0.0;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    std::size_t n = 0;

    void add(double x, double y) {
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
        ++n;
    }
    Sums& operator-=(const Sums& o) {
        sx -= o.sx;
        sy -= o.sy;
        sxx -= o.sxx;
        syy -= o.syy;
        sxy -= o.sxy;
        n -= o.n;
        return *this;
    }
};

struct Moments {
    double vx = 0.0, vy = 0.0, c = 0.0;
};

Moments moments_from(const Sums& s, double qnl_scale) {
    const double n = static_cast<double>(s.n);
    const double mx = s.sx / n;
    const double my = s.sy / n;
    Moments m;
    m.vx = (s.sxx - n * mx * mx) / ((n - 1.0) * qnl_scale);
    m.vy = (s.syy - n * my * my) / ((n - 1.0) * qnl_scale);
    m.c = (s.sxy - n * mx * my) / ((n - 1.0) * qnl_scale);
    if (!(m.vx > 0.0) || !(m.vy > 0.0)) {
        throw DegenerateInputError(
            "sample variances must be positive for conditioning");
    }
    return m;
}

enum StatIndex : std::size_t {
    s_vx_p, s_vy_p, s_c_p, s_cxy_p, s_cyx_p, s_gxy_p, s_gyx_p,
    s_vx_m, s_vy_m, s_c_m, s_cxy_m, s_cyx_m, s_gxy_m, s_gyx_m,
    s_insep, s_eps_xy, s_eps_yx,
    s_count
};

using StatVec = std::array<double, s_count>;

StatVec compute_stats(const Sums& sum_p, const Sums& sum_m, double qnl_scale,
                      InseparabilityPairing pairing) {
    const Moments p = moments_from(sum_p, qnl_scale);
    const Moments m = moments_from(sum_m, qnl_scale);

    StatVec v{};
    v[s_vx_p] = p.vx;
    v[s_vy_p] = p.vy;
    v[s_c_p] = p.c;
    v[s_cxy_p] = p.vx - p.c * p.c / p.vy;
    v[s_cyx_p] = p.vy - p.c * p.c / p.vx;
    v[s_gxy_p] = p.c / p.vy;
    v[s_gyx_p] = p.c / p.vx;
    v[s_vx_m] = m.vx;
    v[s_vy_m] = m.vy;
    v[s_c_m] = m.c;
    v[s_cxy_m] = m.vx - m.c * m.c / m.vy;
    v[s_cyx_m] = m.vy - m.c * m.c / m.vx;
    v[s_gxy_m] = m.c / m.vy;
    v[s_gyx_m] = m.c / m.vx;

    // sum and difference variances normalized so that vacuum reads 1
    const double sum_plus = 0.5 * (p.vx + p.vy + 2.0 * p.c);
    const double diff_plus = 0.5 * (p.vx + p.vy - 2.0 * p.c);
    const double sum_minus = 0.5 * (m.vx + m.vy + 2.0 * m.c);
    const double diff_minus = 0.5 * (m.vx + m.vy - 2.0 * m.c);
    v[s_insep] = pairing == InseparabilityPairing::sum_plus_diff_minus
                     ? 0.5 * (sum_plus + diff_minus)
                     : 0.5 * (diff_plus + sum_minus);
    v[s_eps_xy] = v[s_cxy_p] * v[s_cxy_m];
    v[s_eps_yx] = v[s_cyx_p] * v[s_cyx_m];
    return v;
}

// The conditional variance v_x - 2 g c + g^2 v_y is an upward parabola in the
// gain, so a grid scan can never do better than the closed-form vertex. Run
// the scan anyway on the full sample; a win beyond rounding means the moment
// bookkeeping is broken.
void check_gain_scan(double va, double vb, double c) {
    const double g0 = c / vb;
    const double v0 = va - c * c / vb;
    const double span = 0.5 * (std::abs(g0) + 1.0);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 40; ++i) {
        const double g = g0 - span + 2.0 * span * static_cast<double>(i) / 40.0;
        best = std::min(best, va - 2.0 * g * c + g * g * vb);
    }
    if (best < v0 - 1e-9 * std::max(1.0, std::abs(v0))) {
        throw std::logic_error("gain grid scan beat the closed-form optimum");
    }
}

} // namespace

SampleBatch sample_pairs(const CorrelationMatrix4& cm, double theta,
                         std::size_t n, std::uint64_t seed) {
    const QuadratureCov2 block = quadrature_block(cm, theta);
    block.validate();

    // lower Cholesky factor of the 2x2 block
    const double l11 = std::sqrt(block.var_x);
    const double l21 = block.cov / l11;
    const double l22 = std::sqrt(block.var_y - l21 * l21);

    SampleBatch batch;
    batch.theta = theta;
    batch.seed = seed;
    batch.x.resize(n);
    batch.y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [z0, z1] = normal_pair(seed, i);
        batch.x[i] = l11 * z0;
        batch.y[i] = l21 * z0 + l22 * z1;
    }
    return batch;
}

SampleBatch apply_bandpass(const SampleBatch& batch, const BandPassSpec& spec) {
    if (!batch.sample_rate_hz) {
        throw ValidationError(
            "batch carries no sample rate; set sample_rate_hz before filtering");
    }
    const SosFilter filt = design_butterworth_bandpass(spec, *batch.sample_rate_hz);
    SampleBatch out = batch;
    out.x = filt.apply(batch.x);
    out.y = filt.apply(batch.y);
    out.filter = spec;
    return out;
}

double qnl_calibrate(const SampleBatch& batch) {
    if (batch.size() < 2) {
        throw InsufficientDataError(
            "calibration needs at least two samples per channel");
    }
    Sums s;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        s.add(batch.x[i], batch.y[i]);
    }
    const Moments m = moments_from(s, 1.0);
    return 0.5 * (m.vx + m.vy);
}

EstimateReport estimate(const SampleBatch& plus, const SampleBatch& minus,
                        double qnl_scale) {
    const std::size_t n = plus.size();
    if (minus.size() != n) {
        throw ValidationError("plus and minus batches must have equal length");
    }
    if (n < kMinSamples) {
        throw InsufficientDataError("estimation needs at least 1000 samples");
    }
    if (!(qnl_scale > 0.0) || !std::isfinite(qnl_scale)) {
        throw ValidationError("qnl scale must be positive and finite");
    }

    // contiguous-block partial sums; block b covers [b*n/B, (b+1)*n/B)
    std::array<std::array<Sums, kJackknifeBlocks>, 2> blocks{};
    const SampleBatch* batches[2] = {&plus, &minus};
    for (int q = 0; q < 2; ++q) {
        for (std::size_t b = 0; b < kJackknifeBlocks; ++b) {
            const std::size_t lo = b * n / kJackknifeBlocks;
            const std::size_t hi = (b + 1) * n / kJackknifeBlocks;
            for (std::size_t i = lo; i < hi; ++i) {
                blocks[q][b].add(batches[q]->x[i], batches[q]->y[i]);
            }
        }
    }
    Sums total_p, total_m;
    for (std::size_t b = 0; b < kJackknifeBlocks; ++b) {
        total_p.sx += blocks[0][b].sx;
        total_p.sy += blocks[0][b].sy;
        total_p.sxx += blocks[0][b].sxx;
        total_p.syy += blocks[0][b].syy;
        total_p.sxy += blocks[0][b].sxy;
        total_p.n += blocks[0][b].n;
        total_m.sx += blocks[1][b].sx;
        total_m.sy += blocks[1][b].sy;
        total_m.sxx += blocks[1][b].sxx;
        total_m.syy += blocks[1][b].syy;
        total_m.sxy += blocks[1][b].sxy;
        total_m.n += blocks[1][b].n;
    }

    // pairing is fixed on the full sample and held fixed across replicates
    const Moments full_p = moments_from(total_p, qnl_scale);
    const Moments full_m = moments_from(total_m, qnl_scale);
    const double pair_a = 0.25 * ((full_p.vx + full_p.vy + 2.0 * full_p.c) +
                                  (full_m.vx + full_m.vy - 2.0 * full_m.c));
    const double pair_b = 0.25 * ((full_p.vx + full_p.vy - 2.0 * full_p.c) +
                                  (full_m.vx + full_m.vy + 2.0 * full_m.c));
    const InseparabilityPairing pairing =
        pair_a <= pair_b ? InseparabilityPairing::sum_plus_diff_minus
                         : InseparabilityPairing::sum_minus_diff_plus;

    check_gain_scan(full_p.vx, full_p.vy, full_p.c);
    check_gain_scan(full_p.vy, full_p.vx, full_p.c);
    check_gain_scan(full_m.vx, full_m.vy, full_m.c);
    check_gain_scan(full_m.vy, full_m.vx, full_m.c);

    const StatVec full = compute_stats(total_p, total_m, qnl_scale, pairing);

    std::array<StatVec, kJackknifeBlocks> reps{};
    for (std::size_t b = 0; b < kJackknifeBlocks; ++b) {
        Sums lp = total_p;
        lp -= blocks[0][b];
        Sums lm = total_m;
        lm -= blocks[1][b];
        reps[b] = compute_stats(lp, lm, qnl_scale, pairing);
    }
    StatVec rep_mean{};
    for (const auto& r : reps) {
        for (std::size_t j = 0; j < s_count; ++j) {
            rep_mean[j] += r[j];
        }
    }
    for (double& v : rep_mean) {
        v /= static_cast<double>(kJackknifeBlocks);
    }
    StatVec se{};
    for (const auto& r : reps) {
        for (std::size_t j = 0; j < s_count; ++j) {
            const double d = r[j] - rep_mean[j];
            se[j] += d * d;
        }
    }
    const double bf = static_cast<double>(kJackknifeBlocks);
    for (double& v : se) {
        v = std::sqrt((bf - 1.0) / bf * v);
    }

    auto est = [&](std::size_t j) { return Estimate{full[j], se[j]}; };

    EstimateReport rep;
    rep.plus = {est(s_vx_p), est(s_vy_p), est(s_c_p), est(s_cxy_p),
                est(s_cyx_p), est(s_gxy_p), est(s_gyx_p)};
    rep.minus = {est(s_vx_m), est(s_vy_m), est(s_c_m), est(s_cxy_m),
                 est(s_cyx_m), est(s_gxy_m), est(s_gyx_m)};
    rep.inseparability = est(s_insep);
    rep.pairing = pairing;
    rep.epr_x_given_y = est(s_eps_xy);
    rep.epr_y_given_x = est(s_eps_yx);
    rep.n = n;
    rep.qnl_scale = qnl_scale;
    return rep;
}

} // namespace twinbeam
