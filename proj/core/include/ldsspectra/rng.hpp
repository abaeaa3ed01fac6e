#pragma once

#include <cstdint>
#include <random>

namespace ldsspectra {

// splitmix64-style mixer for deriving independent child seeds from a master
// seed plus an index. Collision-free enough for the task-count scales here.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Seedable random source. All library randomness flows through this type so
// identical seeds reproduce results bit for bit within one build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  double gaussian(double stddev) { return stddev * normal_(engine_); }
  // uniform in [lo, hi)
  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * unit_(engine_);
  }
  // integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

  std::uint64_t seed() const { return seed_; }
  // Child source independent of this source's consumption so far; used to
  // keep parallel per-task generation deterministic.
  Rng child(std::uint64_t index) const { return Rng(derive_seed(seed_, index)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace ldsspectra
