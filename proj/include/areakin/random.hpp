#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "areakin/types.hpp"

namespace areakin {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of substream (stream, index) of a master seed. Counter based, so a
/// chunk's stream does not depend on which worker draws it.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

/// Random stream used by every Monte Carlo routine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return uniform_(engine_); }
  double gaussian() { return normal_(engine_); }
  std::uint64_t next_u64() { return engine_(); }

  /// Standard Gaussian vector in R^n.
  Vec gaussian_vec(int n) {
    Vec g(n);
    for (int i = 0; i < n; ++i) g[i] = gaussian();
    return g;
  }

  /// Uniform point on S^{n-1}.
  Vec unit_vec(int n) {
    for (;;) {
      Vec g = gaussian_vec(n);
      const double r = g.norm();
      if (r > 1e-300) return g / r;
    }
  }

  /// Uniform point of the closed n-ball of the given radius.
  Vec ball_point(int n, double radius) {
    if (n == 0) return Vec(0);
    return unit_vec(n) * (radius * std::pow(uniform(), 1.0 / n));
  }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace areakin
