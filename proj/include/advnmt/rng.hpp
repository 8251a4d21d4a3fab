#pragma once

#include <cmath>
#include <cstdint>

namespace advnmt {

// Deterministic splitmix64 stream. Every stochastic operation in the
// workbench takes one of these explicitly so that runs are reproducible
// from a single seed, independent of the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed + kGolden) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += kGolden);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n must be positive.
  int uniform_int(int n) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller, one cached spare per pair.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 1e-300) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Derives an independent stream; used to hand each worker its own rng.
  Rng fork(std::uint64_t stream) {
    return Rng(next_u64() ^ (stream * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace advnmt
