#pragma once

#include <cstdint>
#include <functional>

#include "areakin/estimate.hpp"
#include "areakin/polytope.hpp"
#include "areakin/random.hpp"
#include "areakin/types.hpp"

namespace areakin {

/// Linear subspace L of R^d given by an orthonormal basis (d x q).
struct SubspaceSample {
  int d = 0;
  Mat basis;
  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Affine flat L + x with x in L^perp, and the weight turning sample
/// averages into mu_q-integrals.
struct FlatSample {
  SubspaceSample L;
  Vec offset;
  double weight = 1.0;
  Flat flat() const { return {offset, L.basis}; }
};

/// Rigid motion x -> rotation * x + translation with its importance weight.
struct MotionSample {
  Mat rotation;
  Vec translation;
  double weight = 1.0;
};

/// Haar rotation (det +1).
Mat sample_rotation(int d, Rng& rng);
/// Haar q-subspace of R^d.
SubspaceSample sample_subspace(int d, int q, Rng& rng);
/// Haar i-subspace of span(E) (E orthonormal, d x j, i <= j).
SubspaceSample sample_subspace_within(const Mat& E, int i, Rng& rng);
/// E + Haar (i - j)-subspace of E^perp.
SubspaceSample sample_subspace_containing(const Mat& E, int i, Rng& rng);

/// Flat meeting the ball B(center, R): L Haar on G(d,q), offset uniform in the
/// (d-q)-ball of radius R around the projection of center, weight
/// kappa_{d-q} R^{d-q}.
FlatSample sample_flat(int d, int q, double R, Rng& rng, const Vec* center = nullptr);

/// Reference ball of a body for sample_flat: vertex centroid and
/// circumradius + 1e-6.
struct ReferenceBall {
  Vec center;
  double radius = 0.0;
};
ReferenceBall reference_ball(const ConvexPolytope& K);

/// Translation box for K cap (rho M + t): centered at c_K - rho c_M with the
/// given half-width. covers_support reports whether the half-width reaches
/// r_K + r_M, which guarantees every hitting translation lies in the box.
struct MotionBox {
  Vec center_K;
  Vec center_M;
  double half_width = 0.0;
  bool covers_support = true;
};
MotionBox motion_box(const ConvexPolytope& K, const ConvexPolytope& M,
                     double half_width_override = 0.0);

MotionSample sample_motion(const MotionBox& box, int d, Rng& rng);
MotionSample sample_motion(const ConvexPolytope& K, const ConvexPolytope& M, Rng& rng);

/// Axis-aligned bounding box of K - M, the support of x -> K cap (M + x).
struct TranslationBox {
  Vec lower;
  Vec upper;
  double volume() const;
};
TranslationBox translation_box(const ConvexPolytope& K, const ConvexPolytope& M);

/// Subspace determinant [L1, L2]: volume of the parallelotope spanned by the
/// two orthonormal bases (dim L1 + dim L2 <= d).
double subspace_bracket(const Mat& L1, const Mat& L2);
/// |<L1, L2>| for subspaces of equal dimension: |det(L1^T L2)|.
double generalized_cosine(const Mat& L1, const Mat& L2);

using GrassmannFunction = std::function<double(const Mat& basis)>;

/// (R_{i,j} f)(E) for E of dimension j: the average of f over the i-subspaces
/// incident to E.
McEstimate radon_point(const GrassmannFunction& f, const Mat& E, int i, std::uint64_t samples,
                       Rng& rng);

}  // namespace areakin
