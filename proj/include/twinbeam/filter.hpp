#pragma once

#include <complex>
#include <span>
#include <vector>

namespace twinbeam {

/// Band-pass specification in physical units. "order" is the overall filter
/// order (even, >= 2); order 6 means three second-order sections.
struct BandPassSpec {
    double center_hz = 0.0;
    double width_hz = 0.0;
    int order = 6;
};

struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;  // numerator, z^-1 form
    double a1 = 0.0, a2 = 0.0;            // denominator, a0 = 1
};

/// Cascade of second-order sections with zero initial state.
class SosFilter {
public:
    SosFilter() = default;
    explicit SosFilter(std::vector<Biquad> sections, double sample_rate_hz);

    const std::vector<Biquad>& sections() const { return sections_; }
    double sample_rate_hz() const { return sample_rate_hz_; }

    /// Run the cascade over a series (direct form II transposed).
    std::vector<double> apply(std::span<const double> series) const;

    /// Complex frequency response at f_hz.
    std::complex<double> response(double f_hz) const;

    /// Fraction of white-noise power passed:
    /// (2/fs) * integral_0^{fs/2} |H(f)|^2 df, trapezoid over n_grid points.
    double noise_bandwidth_fraction(int n_grid = 200001) const;

private:
    std::vector<Biquad> sections_;
    double sample_rate_hz_ = 1.0;
};

/// Butterworth band-pass designed by pole placement on the analog prototype,
/// band transform, and bilinear mapping with edge pre-warping, so the -3 dB
/// points land exactly on center_hz -+ width_hz/2. Gain is normalized to one
/// at the response peak. The upper edge must not exceed 0.49 * sample rate.
SosFilter design_butterworth_bandpass(const BandPassSpec& spec,
                                      double sample_rate_hz);

/// Convenience wrapper: design and apply in one call.
std::vector<double> butterworth_bandpass(std::span<const double> series,
                                         const BandPassSpec& spec,
                                         double sample_rate_hz);

} // namespace twinbeam
