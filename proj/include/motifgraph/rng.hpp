#pragma once

#include <cstdint>

// Counter-based random bits: every draw is a pure function of (seed, counter),
// so loops over edges or samples can run in any order, on any number of
// threads, and still reproduce bit-identical results.

namespace motifgraph::rng {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer.
inline std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// n-th output of the stream identified by `seed`.
inline std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    return mix(seed + (counter + 1) * kGamma);
}

// Derives an independent stream, e.g. one per Monte Carlo sample.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    return mix(mix(seed ^ 0x6a09e667f3bcc909ULL) + (index + 1) * kGamma);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(at(seed, counter) >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n); modulo bias is ~n/2^64 and irrelevant here.
inline std::uint64_t below(std::uint64_t seed, std::uint64_t counter, std::uint64_t n) {
    return at(seed, counter) % n;
}

}  // namespace motifgraph::rng
