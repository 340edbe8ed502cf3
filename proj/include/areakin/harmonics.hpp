#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "areakin/estimate.hpp"
#include "areakin/random.hpp"
#include "areakin/types.hpp"

namespace areakin {

/// Pointwise-evaluable function on the unit sphere.
using SphereFunction = std::function<double(const Vec&)>;

/// Gegenbauer polynomial C_n^lambda(t) by the three-term recurrence.
double gegenbauer_eval(int n, double lambda, double t);

/// u -> scale * C_n^{(d-2)/2}(<axis, u>), a degree-n harmonic on S^{d-1}.
struct ZonalHarmonic {
  int d = 3;
  int degree = 0;
  Vec axis;
  double scale = 1.0;

  double operator()(const Vec& u) const;
};

/// Real spherical harmonic Y_{l,m} on S^2, orthonormal for the probability
/// measure sigma. m < 0 selects the sine family.
struct RealHarmonicS2 {
  int degree = 0;
  int order = 0;
  Mat frame;  // optional rotation: evaluates Y(frame^T u); empty = identity

  double operator()(const Vec& u) const;
};

struct HarmonicTerm {
  int degree = 0;
  std::variant<ZonalHarmonic, RealHarmonicS2> basis;
  double coeff = 1.0;

  double operator()(const Vec& u) const;
};

/// Finite linear combination of spherical harmonics of known degrees.
class HarmonicSpectrum {
 public:
  explicit HarmonicSpectrum(int d) : d_(d) {}

  HarmonicSpectrum& add_zonal(int degree, const Vec& axis, double coeff = 1.0,
                              double scale = 1.0);
  /// Only for d = 3.
  HarmonicSpectrum& add_real_s2(int degree, int order, double coeff = 1.0);

  int dim() const { return d_; }
  const std::vector<HarmonicTerm>& terms() const { return terms_; }
  std::vector<HarmonicTerm>& terms() { return terms_; }

  double operator()(const Vec& u) const;

  /// Exact integral against sigma (only degree-0 terms contribute).
  double sphere_mean() const;

  int max_degree() const;
  bool has_odd_degree() const;
  bool has_degree(int s) const;
  std::vector<int> degrees() const;

  /// Degree-s part.
  HarmonicSpectrum component(int s) const;
  /// u -> f(-u).
  HarmonicSpectrum reflected() const;
  /// Image under a rotation: u -> f(rot^T u).
  HarmonicSpectrum rotated(const Mat& rot) const;

  std::string describe() const;

 private:
  int d_;
  std::vector<HarmonicTerm> terms_;
};

/// Degree-indexed real multiplier, defined for degrees 0..max_degree (even
/// degrees only when `even_only`).
class DegreeMultiplier {
 public:
  static constexpr int kUnbounded = std::numeric_limits<int>::max();

  DegreeMultiplier(std::function<double(int)> fn, int max_degree = kUnbounded,
                   std::string name = "m", bool even_only = false)
      : fn_(std::move(fn)),
        max_degree_(max_degree),
        name_(std::move(name)),
        even_only_(even_only) {}

  static DegreeMultiplier identity();
  /// I*: (-1)^s.
  static DegreeMultiplier reflection();
  /// Real multiplier of I_{p1} I_{p2} in R^d (phases combined).
  static DegreeMultiplier composed(int d, int p1, int p2);
  /// Reduced (phase-free) magnitude of I_p in R^d.
  static DegreeMultiplier reduced_lambda(int d, int p);
  /// Real multiplier of I_p on even degrees; odd degrees are undefined.
  static DegreeMultiplier even_lambda(int d, int p);

  double operator()(int s) const;
  bool defined_at(int s) const;
  int max_degree() const { return max_degree_; }
  const std::string& name() const { return name_; }

  /// Pointwise product (first this, then `next`; the operators commute).
  DegreeMultiplier then(const DegreeMultiplier& next) const;

 private:
  std::function<double(int)> fn_;
  int max_degree_;
  std::string name_;
  bool even_only_;
};

/// Degree-wise scaling c_s -> m(s) c_s; throws std::domain_error if m is
/// undefined on a degree present in f.
HarmonicSpectrum apply_multiplier(const HarmonicSpectrum& f, const DegreeMultiplier& m);

/// Monte Carlo quadrature for sigma: uniform nodes, equal weights.
struct SphereQuadrature {
  int d = 0;
  std::vector<Vec> nodes;
  std::vector<double> weights;

  static SphereQuadrature monte_carlo(int d, std::size_t n, std::uint64_t seed);
};

/// Quadrature value of int f dsigma.
double pair(const HarmonicSpectrum& f, const SphereQuadrature& q);
/// Same integral with its Monte Carlo standard error.
McEstimate pair_estimate(const HarmonicSpectrum& f, const SphereQuadrature& q);
double pair_pointwise(const HarmonicSpectrum& f, const Vec& u);

/// Average of f over S^{d-1} cap L against sigma_L, L given by an orthonormal
/// basis (d x k, k >= 1).
McEstimate subsphere_average(const SphereFunction& f, const Mat& basis,
                             std::uint64_t samples, Rng& rng);

}  // namespace areakin
