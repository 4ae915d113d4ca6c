#pragma once

#include <cstdint>
#include <initializer_list>

namespace nitk {

// Splitmix64-based generator. Hand-rolled so that seeded runs are
// bit-reproducible across platforms and standard-library versions, and so
// that independent streams can be derived from (seed, index...) tuples
// without coordination between workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). Rejection-free multiply-shift would bias for huge n;
  // rejection keeps it exact.
  std::uint64_t next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~0ULL >> __builtin_clzll(n - 1 | 1);
    std::uint64_t v;
    do {
      v = next_u64() & mask;
    } while (v >= n);
    return v;
  }

  // Derives an independent stream keyed by the given parts. The mixing is the
  // usual splitmix finalizer applied to a running combination, so derive(a, b)
  // and derive(b, a) differ.
  static Rng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = mix(seed ^ 0x6a09e667f3bcc909ULL);
    for (std::uint64_t p : parts) h = mix(h ^ mix(p + 0x9e3779b97f4a7c15ULL));
    return Rng(h);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
    return z ^ (z >> 33);
  }

 private:
  std::uint64_t state_;
};

}  // namespace nitk
