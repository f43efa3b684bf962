#include "twinbeam/rng.hpp"

#include <cmath>

namespace twinbeam {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) {
    constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ull;
    return mix64(seed + (counter + 1) * gamma);
}

double unit_double(std::uint64_t bits) {
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

std::pair<double, double> normal_pair(std::uint64_t seed,
                                      std::uint64_t index) {
    const double u1 = unit_double(counter_hash(seed, 2 * index));
    const double u2 = unit_double(counter_hash(seed, 2 * index + 1));
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

} // namespace twinbeam
