#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace areakin {

/// Result of a Monte Carlo integration.
struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Streaming mean/variance (Welford), mergeable in a fixed order.
class RunningStats {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }

  void merge(const RunningStats& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    const double n = static_cast<double>(n_ + o.n_);
    const double delta = o.mean_ - mean_;
    mean_ += delta * static_cast<double>(o.n_) / n;
    m2_ += o.m2_ + delta * delta * static_cast<double>(n_) * static_cast<double>(o.n_) / n;
    n_ += o.n_;
  }

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  double std_error() const {
    return n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
  }

  /// Estimate of scale * E[X].
  McEstimate estimate(double scale = 1.0, std::uint64_t seed = 0) const {
    return {scale * mean(), std::abs(scale) * std_error(), n_, seed};
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// One RunningStats per tracked quantity.
using StatsVector = std::vector<RunningStats>;

inline void merge_into(StatsVector& acc, const StatsVector& part) {
  if (acc.size() < part.size()) acc.resize(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) acc[i].merge(part[i]);
}

/// |lhs - rhs| / combined standard error; 0 whenever the sides agree to
/// 1e-12 (relative, absolute below 1), +inf if they differ with no error.
inline double z_score(double lhs, double lhs_se, double rhs, double rhs_se) {
  const double se = std::sqrt(lhs_se * lhs_se + rhs_se * rhs_se);
  const double diff = std::abs(lhs - rhs);
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  if (diff <= 1e-12 * scale) return 0.0;
  if (se > 0.0) return diff / se;
  return std::numeric_limits<double>::infinity();
}

}  // namespace areakin
