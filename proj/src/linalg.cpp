#include "areakin/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace areakin {

namespace {

// Greedy pivoted Gram-Schmidt over residuals; two passes of
// reorthogonalization keep the basis orthonormal to machine precision.
Mat pivoted_basis(std::vector<Vec> residuals, int d, double tol) {
  double scale = 0.0;
  for (const auto& r : residuals) scale = std::max(scale, r.norm());
  Mat basis(d, 0);
  if (scale == 0.0) return basis;
  while (basis.cols() < d) {
    int best = -1;
    double best_norm = tol * scale;
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      const double n = residuals[i].norm();
      if (n > best_norm) {
        best_norm = n;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    Vec e = residuals[best] / best_norm;
    for (int pass = 0; pass < 2; ++pass) {
      for (int c = 0; c < basis.cols(); ++c) e -= basis.col(c).dot(e) * basis.col(c);
      e.normalize();
    }
    basis.conservativeResize(d, basis.cols() + 1);
    basis.col(basis.cols() - 1) = e;
    for (auto& r : residuals) r -= e.dot(r) * e;
  }
  return basis;
}

}  // namespace

Mat orthonormal_span(std::span<const Vec> vectors, int d, double tol) {
  return pivoted_basis(std::vector<Vec>(vectors.begin(), vectors.end()), d, tol);
}

Mat orthogonal_complement(const Mat& orthonormal, int d) {
  const int k = static_cast<int>(orthonormal.cols());
  if (k == 0) return Mat::Identity(d, d);
  if (k >= d) return Mat(d, 0);
  Eigen::HouseholderQR<Mat> qr(orthonormal);
  Mat q = qr.householderQ() * Mat::Identity(d, d);
  return q.rightCols(d - k);
}

AffineHull affine_hull(std::span<const Vec> points, double tol) {
  if (points.empty()) throw std::invalid_argument("affine_hull: empty point set");
  const int d = static_cast<int>(points.front().size());
  Vec origin = Vec::Zero(d);
  for (const auto& p : points) origin += p;
  origin /= static_cast<double>(points.size());
  std::vector<Vec> diffs;
  diffs.reserve(points.size());
  for (const auto& p : points) diffs.push_back(p - origin);
  return {origin, pivoted_basis(std::move(diffs), d, tol)};
}

int affine_rank(std::span<const Vec> points, std::span<const int> indices, double tol) {
  if (indices.size() <= 1) return 0;
  const int d = static_cast<int>(points[indices[0]].size());
  std::vector<Vec> diffs;
  diffs.reserve(indices.size() - 1);
  for (std::size_t i = 1; i < indices.size(); ++i)
    diffs.push_back(points[indices[i]] - points[indices[0]]);
  return static_cast<int>(pivoted_basis(std::move(diffs), d, tol).cols());
}

Vec project_out(const Vec& x, const Mat& orthonormal) {
  Vec r = x;
  for (int c = 0; c < orthonormal.cols(); ++c) r -= orthonormal.col(c).dot(x) * orthonormal.col(c);
  return r;
}

}  // namespace areakin
