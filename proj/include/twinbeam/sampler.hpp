#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twinbeam/criteria.hpp"
#include "twinbeam/filter.hpp"
#include "twinbeam/state.hpp"

namespace twinbeam {

/// Paired homodyne records (dX_x[i], dX_y[i]) at one quadrature angle.
/// filter records provenance once apply_bandpass has run.
struct SampleBatch {
    std::vector<double> x;
    std::vector<double> y;
    double theta = 0.0;
    std::uint64_t seed = 0;
    std::optional<double> sample_rate_hz;
    std::optional<BandPassSpec> filter;

    std::size_t size() const { return x.size(); }
};

/// Point estimate with its jackknife standard error.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Everything measured from one pair of batches, each entry with a
/// delete-one-block jackknife standard error (100 contiguous blocks).
struct EstimateReport {
    struct QuadStats {
        Estimate var_x, var_y, cov;
        Estimate cond_x_given_y, cond_y_given_x;
        Estimate gain_x_given_y, gain_y_given_x;
    };
    QuadStats plus;
    QuadStats minus;
    Estimate inseparability;
    InseparabilityPairing pairing = InseparabilityPairing::sum_plus_diff_minus;
    Estimate epr_x_given_y;
    Estimate epr_y_given_x;
    std::size_t n = 0;
    double qnl_scale = 1.0;
};

/// Draw n correlated pairs from the theta-quadrature block of cm. The block
/// is Cholesky-factored and fed with counter-indexed Box-Muller normals, so
/// equal (cm, theta, n, seed) always reproduce the same batch.
SampleBatch sample_pairs(const CorrelationMatrix4& cm, double theta,
                         std::size_t n, std::uint64_t seed);

/// Filter both channels of a batch through the same band-pass; the batch
/// must carry its sample rate. Provenance is recorded on the result.
SampleBatch apply_bandpass(const SampleBatch& batch, const BandPassSpec& spec);

/// Quantum-noise-limit scale from a (typically filtered) vacuum batch: the
/// mean of the two channel sample variances. Downstream estimates divide by
/// it so that filtered vacuum reads exactly 1.
double qnl_calibrate(const SampleBatch& batch);

/// Sample moments (denominator n - 1), optimal gains (closed form, with a
/// parabola scan over a gain grid as a cross-check), conditional variances,
/// EPR products and inseparability, all divided by qnl_scale where they are
/// variances. Requires n >= 1000 and equal batch sizes.
EstimateReport estimate(const SampleBatch& plus, const SampleBatch& minus,
                        double qnl_scale = 1.0);

} // namespace twinbeam
