#pragma once

#include <cstdint>

namespace lw {

// Deterministic 64-bit generator (splitmix64).  Chosen over std distributions
// because its output stream is fully specified by the seed, independent of
// the standard library implementation, which keeps seeded runs byte-identical.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-r, r].
  double next_symmetric(double r) { return (2.0 * next_unit() - 1.0) * r; }

  // Uniform integer in [0, bound) by rejection-free modulo (bound << 2^64, the
  // bias is below 2^-50 for the set sizes used here).
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  std::uint64_t state_;
};

// Independent stream for a (seed, stream) pair; used so parallel trials can
// draw from per-trial generators with a deterministic overall result.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  Rng mix(seed ^ (0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull));
  mix.next_u64();
  return mix;
}

}  // namespace lw
