#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "areakin/constants.hpp"
#include "areakin/estimate.hpp"
#include "areakin/harmonics.hpp"
#include "areakin/polytope.hpp"
#include "areakin/random.hpp"

namespace areakin {

/// Normal cone N(P,F) = N0 + L(P)^perp, N0 the pointed part inside L(P).
struct NormalCone {
  int d = 0;
  Mat pointed_basis;             // d x m0, orthonormal basis of span N0
  std::vector<Vec> generators;   // extreme rays of N0 (unit facet normals)
  std::vector<Vec> constraints;  // x in N(P,F) iff <x, c> <= 0 for all c (x orthogonal to L(F))
  Mat lineality;                 // d x w, orthonormal basis of L(P)^perp
  /// Fraction of the unit sphere of span N covered by N; NaN when unknown
  /// (pointed part of dimension >= 4).
  double angle_fraction = std::numeric_limits<double>::quiet_NaN();
  // Arc parametrization for m0 = 2: cos(t) arc_start + sin(t) arc_normal, t in [0, arc_width].
  Vec arc_start;
  Vec arc_normal;
  double arc_width = 0.0;

  int pointed_dim() const { return static_cast<int>(pointed_basis.cols()); }
  int linear_dim() const { return pointed_dim() + static_cast<int>(lineality.cols()); }
  bool exact_angle() const { return !std::isnan(angle_fraction); }
  /// Single ray: pointed part a ray and no lineality.
  bool is_ray() const { return pointed_dim() == 1 && lineality.cols() == 0; }

  bool contains(const Vec& x, double tol = 1e-9) const;

  /// Uniform point on the unit sphere of span N restricted to N. Exact for
  /// m0 <= 2; by rejection for m0 = 3.
  Vec sample_inside(Rng& rng) const;
  /// Uniform point on the unit sphere of span N; `inside` reports membership.
  Vec sample_span(Rng& rng, bool& inside) const;

  NormalCone reflected() const;
};

/// Normal cone of the face faces(k)[index] of P.
NormalCone normal_cone(const ConvexPolytope& P, int k, int index);

/// Solid angle of the cone spanned by unit vectors in R^3 (cyclically
/// ordered around their mean direction, fan triangulated).
double solid_angle_3d(std::vector<Eigen::Vector3d> rays);

struct ConePiece {
  double weight = 0.0;  // V_j(F)
  NormalCone cone;
};

/// S_j(P, .) as a weighted sum of Hausdorff measures on normal cones.
struct SphericalAreaMeasure {
  int d = 0;
  int order = 0;
  double normalization = 1.0;  // 1 / binom(d-1, j)
  std::vector<ConePiece> pieces;

  bool atomic() const;
  /// Total mass, when every cone angle is known exactly.
  double exact_mass() const;
  SphericalAreaMeasure reflected() const;
};

SphericalAreaMeasure area_measure(const ConvexPolytope& P, int j);

/// int f dS_j(P) with per-piece Monte Carlo (`samples` draws per non-atomic
/// piece; ray pieces are exact).
McEstimate measure_pair(const SphericalAreaMeasure& S, const SphereFunction& f,
                        std::uint64_t samples, Rng& rng);

/// Draws `per_piece` points per piece and calls visit(u, w) so that the sum of
/// w * f(u) over all calls is an unbiased estimate of int f dS for every f.
/// Ray pieces are visited once with their exact weight.
template <class Visit>
void for_each_cone_sample(const SphericalAreaMeasure& S, std::uint64_t per_piece, Rng& rng,
                          Visit&& visit) {
  for (const auto& piece : S.pieces) {
    const NormalCone& cone = piece.cone;
    const double base = S.normalization * piece.weight * omega(cone.linear_dim());
    if (cone.is_ray()) {
      visit(cone.generators.front(), S.normalization * piece.weight);
      continue;
    }
    if (cone.exact_angle()) {
      const double w = base * cone.angle_fraction / static_cast<double>(per_piece);
      for (std::uint64_t i = 0; i < per_piece; ++i) visit(cone.sample_inside(rng), w);
    } else {
      const double w = base / static_cast<double>(per_piece);
      for (std::uint64_t i = 0; i < per_piece; ++i) {
        bool inside = false;
        Vec u = cone.sample_span(rng, inside);
        if (inside) visit(u, w);
      }
    }
  }
}

/// External angle gamma(F, P) of faces(k)[index]: exact when the pointed part
/// of the normal cone has dimension <= 3, otherwise NaN.
double external_angle(const ConvexPolytope& P, int k, int index);

/// Monte Carlo external angle (membership of uniform points of span N).
McEstimate external_angle_mc(const ConvexPolytope& P, int k, int index, std::uint64_t samples,
                             Rng& rng);

/// V_j(P) = sum over j-faces of V_j(F) gamma(F, P). Exact whenever every
/// j-face angle is exact; otherwise estimated with `samples` draws per face.
McEstimate intrinsic_volume_estimate(const ConvexPolytope& P, int j,
                                     std::uint64_t samples = 200000, std::uint64_t seed = 1);
double intrinsic_volume(const ConvexPolytope& P, int j);

}  // namespace areakin
