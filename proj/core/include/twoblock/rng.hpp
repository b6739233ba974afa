#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace twoblock {

// splitmix64 finalizer; good enough to spread structured inputs.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable per-task seeds: same (base, a, b, c) always gives the same stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = mix64(base ^ 0x2545f4914f6cdd1dULL);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

// Deterministic across platforms: mt19937_64's output sequence is pinned by
// the standard, and all derived draws below use integer arithmetic only
// (std::uniform_int_distribution et al. are implementation-defined, so they
// are avoided on purpose).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [lo, hi], rejection-sampled.
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % range);
  }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    const auto threshold =
        static_cast<std::uint64_t>(p * 18446744073709551616.0);  // p * 2^64
    return next_u64() < threshold;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
      std::swap(items[i], items[uniform_int(0, i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace twoblock
