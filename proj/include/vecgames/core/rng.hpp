#pragma once

#include <cstdint>

namespace vecgames {

// Small counter-seeded generator (splitmix64 core). Every environment derives
// independent per-subsystem streams from one master seed, so adding a consumer
// never perturbs the draws of another.
class Rng {
 public:
  Rng() : state_(0x9e3779b97f4a7c15ULL) {}
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). n must be positive.
  std::int64_t next_int(std::int64_t n) {
    return static_cast<std::int64_t>(next_u64() % static_cast<std::uint64_t>(n));
  }

  double next_range(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::uint64_t state_;
};

// Derives the seed of stream `stream` under `master`. Streams with distinct
// indices are statistically independent.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  Rng mixer(master ^ (stream * 0xd1b54a32d192ed03ULL + 0x8bb84b93962eacc9ULL));
  return mixer.next_u64();
}

inline Rng derive_stream(std::uint64_t master, std::uint64_t stream) {
  return Rng(derive_seed(master, stream));
}

}  // namespace vecgames
