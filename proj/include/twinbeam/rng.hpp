#pragma once

#include <cstdint>
#include <utility>

namespace twinbeam {

// Counter-based randomness. Every draw is a pure function of (seed, counter),
// so sample i of a batch owns counters {2i, 2i+1} and the stream is identical
// no matter how work is split across threads or runs. std::normal_distribution
// is deliberately avoided: its output sequence is implementation-defined and
// would break byte-identical reruns across toolchains.

/// SplitMix64 output finalizer.
std::uint64_t mix64(std::uint64_t z);

/// The (counter+1)-th output of a SplitMix64 stream seeded with seed.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter);

/// Map 64 random bits to (0, 1]; never returns 0, so log() stays finite.
double unit_double(std::uint64_t bits);

/// Two independent standard normals from counters {2i, 2i+1} via the
/// trigonometric Box-Muller transform (fixed consumption of two uniforms).
std::pair<double, double> normal_pair(std::uint64_t seed, std::uint64_t index);

} // namespace twinbeam
