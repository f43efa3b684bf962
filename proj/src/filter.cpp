#include "twinbeam/filter.hpp"

#include <cmath>
#include <utility>

#include "twinbeam/errors.hpp"

namespace twinbeam {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Biquad from a z-plane pole pair that is either conjugate or both real.
// Numerator is (z - 1)(z + 1), the band-pass zeros; gain comes later.
Biquad section_from_pair(std::complex<double> z1, std::complex<double> z2) {
    Biquad s;
    s.b0 = 1.0;
    s.b1 = 0.0;
    s.b2 = -1.0;
    s.a1 = -(z1 + z2).real();
    s.a2 = (z1 * z2).real();
    return s;
}

} // namespace

SosFilter::SosFilter(std::vector<Biquad> sections, double sample_rate_hz)
    : sections_(std::move(sections)), sample_rate_hz_(sample_rate_hz) {
    if (!(sample_rate_hz_ > 0.0)) {
        throw ValidationError("sample rate must be positive");
    }
    for (const auto& s : sections_) {
        const bool finite = std::isfinite(s.b0) && std::isfinite(s.b1) &&
                            std::isfinite(s.b2) && std::isfinite(s.a1) &&
                            std::isfinite(s.a2);
        // stability triangle for the denominator
        const bool stable = std::abs(s.a2) < 1.0 && std::abs(s.a1) < 1.0 + s.a2;
        if (!finite || !stable) {
            throw ValidationError("filter section is unstable or not finite");
        }
    }
}

std::vector<double> SosFilter::apply(std::span<const double> series) const {
    std::vector<double> out(series.begin(), series.end());
    for (const auto& s : sections_) {
        double d1 = 0.0;
        double d2 = 0.0;
        for (double& v : out) {
            const double x = v;
            const double y = s.b0 * x + d1;
            d1 = s.b1 * x - s.a1 * y + d2;
            d2 = s.b2 * x - s.a2 * y;
            v = y;
        }
    }
    return out;
}

std::complex<double> SosFilter::response(double f_hz) const {
    const std::complex<double> zi =
        std::polar(1.0, -2.0 * kPi * f_hz / sample_rate_hz_);
    std::complex<double> h = 1.0;
    for (const auto& s : sections_) {
        h *= (s.b0 + s.b1 * zi + s.b2 * zi * zi) /
             (1.0 + s.a1 * zi + s.a2 * zi * zi);
    }
    return h;
}

double SosFilter::noise_bandwidth_fraction(int n_grid) const {
    if (n_grid < 2) {
        throw ValidationError("noise bandwidth grid needs at least two points");
    }
    const double f_nyq = 0.5 * sample_rate_hz_;
    double acc = 0.0;
    for (int i = 0; i < n_grid; ++i) {
        const double f = f_nyq * static_cast<double>(i) / (n_grid - 1);
        const double m = std::abs(response(f));
        const double w = (i == 0 || i == n_grid - 1) ? 0.5 : 1.0;
        acc += w * m * m;
    }
    // trapezoid of |H|^2 over [0, fs/2], expressed as a fraction of fs/2
    return acc / (n_grid - 1);
}

SosFilter design_butterworth_bandpass(const BandPassSpec& spec,
                                      double sample_rate_hz) {
    if (!(sample_rate_hz > 0.0)) {
        throw ValidationError("sample rate must be positive");
    }
    if (spec.order < 2 || spec.order % 2 != 0) {
        throw ValidationError("band-pass order must be even and at least 2");
    }
    if (!(spec.center_hz > 0.0) || !(spec.width_hz > 0.0)) {
        throw ValidationError("band-pass center and width must be positive");
    }
    const double f_lo = spec.center_hz - 0.5 * spec.width_hz;
    const double f_hi = spec.center_hz + 0.5 * spec.width_hz;
    if (!(f_lo > 0.0)) {
        throw ValidationError("band-pass lower edge must be positive");
    }
    if (f_hi > 0.49 * sample_rate_hz) {
        throw ValidationError(
            "band-pass upper edge exceeds 0.49 of the sample rate");
    }

    const int p = spec.order / 2;
    const double big_k = 2.0 * sample_rate_hz;
    // pre-warp so the -3 dB points land exactly on the requested edges
    const double w_lo = big_k * std::tan(kPi * f_lo / sample_rate_hz);
    const double w_hi = big_k * std::tan(kPi * f_hi / sample_rate_hz);
    const double w0_sq = w_lo * w_hi;
    const double bw = w_hi - w_lo;

    auto bilinear = [big_k](std::complex<double> s) {
        return (big_k + s) / (big_k - s);
    };
    auto band_poles = [&](std::complex<double> proto) {
        const std::complex<double> q = proto * (0.5 * bw);
        const std::complex<double> d = std::sqrt(q * q - w0_sq);
        return std::pair{q + d, q - d};
    };

    std::vector<Biquad> sections;
    sections.reserve(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) {
        const double angle = kPi * (2.0 * k + p + 1.0) / (2.0 * p);
        const std::complex<double> proto{std::cos(angle), std::sin(angle)};
        if (proto.imag() > 1e-12) {
            // complex prototype pole: each band-pass pole pairs with its
            // conjugate (which comes from the conjugate prototype pole)
            const auto [p1, p2] = band_poles(proto);
            const auto z1 = bilinear(p1);
            const auto z2 = bilinear(p2);
            sections.push_back(section_from_pair(z1, std::conj(z1)));
            sections.push_back(section_from_pair(z2, std::conj(z2)));
        } else if (proto.imag() > -1e-12) {
            // real prototype pole: its two band-pass poles pair with each other
            const auto [p1, p2] =
                band_poles(std::complex<double>(proto.real(), 0.0));
            sections.push_back(section_from_pair(bilinear(p1), bilinear(p2)));
        }
        // prototype poles with negative imaginary part are already covered
    }

    // Normalize the cascade to unit gain at the response peak, the bilinear
    // image of sqrt(w_lo * w_hi). Split the gain evenly across sections.
    const double f_peak =
        sample_rate_hz * std::atan(std::sqrt(w0_sq) / big_k) / kPi;
    const SosFilter flat(sections, sample_rate_hz);
    const double mag = std::abs(flat.response(f_peak));
    if (!(mag > 0.0) || !std::isfinite(mag)) {
        throw ValidationError("band-pass design degenerated; widen the band");
    }
    const double g = std::pow(1.0 / mag, 1.0 / p);
    for (auto& s : sections) {
        s.b0 *= g;
        s.b1 *= g;
        s.b2 *= g;
    }
    return SosFilter(std::move(sections), sample_rate_hz);
}

std::vector<double> butterworth_bandpass(std::span<const double> series,
                                         const BandPassSpec& spec,
                                         double sample_rate_hz) {
    return design_butterworth_bandpass(spec, sample_rate_hz).apply(series);
}

} // namespace twinbeam
