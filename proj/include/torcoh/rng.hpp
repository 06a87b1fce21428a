#pragma once

#include <cstdint>

namespace torcoh {

// SplitMix64. Self-contained so that seeded runs produce identical streams on
// every platform; std::mt19937 + distributions would not give that guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Rejection-free modulo is fine here: streams are
  // for test data and randomized constructions, not statistics.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Nonzero value in [-bound, bound].
  long long nonzero(long long bound) {
    long long v = range(1, bound);
    return (next() & 1) ? v : -v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace torcoh
