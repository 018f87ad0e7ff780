#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qaoa {

/// SplitMix64 finalizer; used for seed mixing and stream derivation.
std::uint64_t splitmix64(std::uint64_t x);

/// FNV-1a 64-bit hash of a byte string (fixed algorithm, platform independent).
std::uint64_t fnv1a64(std::string_view s);

/// Derives an independent child stream seed from (seed, stream index).
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream);

/// Seeded generator producing doubles via explicit bit mapping.
///
/// All randomness in the project goes through this class: the standard
/// distributions are implementation-defined, so uniform doubles are built
/// directly from the mt19937_64 bit stream (which the standard pins down).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    /// Returns -1 or +1 with equal probability.
    int rademacher() { return (next_u64() & 1u) ? 1 : -1; }

private:
    std::mt19937_64 engine_;
};

} // namespace qaoa
