#pragma once

#include <span>
#include <vector>

#include "areakin/types.hpp"

namespace areakin {

/// Orthonormal basis (d x rank) of the span of vectors in R^d, by pivoted
/// Gram-Schmidt. Rank is decided relative to the largest vector norm.
Mat orthonormal_span(std::span<const Vec> vectors, int d, double tol = kGeomEps);

/// Orthonormal basis of the orthogonal complement of span(columns) in R^d,
/// where `columns` is already orthonormal (d x k).
Mat orthogonal_complement(const Mat& orthonormal, int d);

/// Affine hull of a point set: a base point and an orthonormal basis of the
/// parallel linear subspace.
struct AffineHull {
  Vec origin;
  Mat basis;  // d x dim
  int dim() const { return static_cast<int>(basis.cols()); }
};

AffineHull affine_hull(std::span<const Vec> points, double tol = kGeomEps);

/// Dimension of the affine hull of points[indices].
int affine_rank(std::span<const Vec> points, std::span<const int> indices,
                double tol = kGeomEps);

/// Projection onto the orthogonal complement of an orthonormal basis.
Vec project_out(const Vec& x, const Mat& orthonormal);

}  // namespace areakin
