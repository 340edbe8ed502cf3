#include "areakin/grassmann.hpp"

#include <cmath>
#include <stdexcept>

#include "areakin/constants.hpp"
#include "areakin/linalg.hpp"

namespace areakin {

namespace {

// Q factor of a Gaussian matrix with the signs of R's diagonal absorbed,
// which makes Q Haar distributed on O(rows).
Mat haar_orthogonal(int rows, int cols, Rng& rng) {
  Mat g(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) g(r, c) = rng.gaussian();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(rows, cols);
  const Mat& r = qr.matrixQR();
  for (int c = 0; c < cols; ++c)
    if (r(c, c) < 0) q.col(c) = -q.col(c);
  return q;
}

}  // namespace

Mat sample_rotation(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("sample_rotation: d must be >= 1");
  Mat q = haar_orthogonal(d, d, rng);
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

SubspaceSample sample_subspace(int d, int q, Rng& rng) {
  if (q < 0 || q > d) throw std::invalid_argument("sample_subspace: need 0 <= q <= d");
  if (q == 0) return {d, Mat(d, 0)};
  return {d, haar_orthogonal(d, q, rng)};
}

SubspaceSample sample_subspace_within(const Mat& E, int i, Rng& rng) {
  const int j = static_cast<int>(E.cols());
  if (i < 0 || i > j) throw std::invalid_argument("sample_subspace_within: need i <= dim E");
  if (i == 0) return {static_cast<int>(E.rows()), Mat(E.rows(), 0)};
  return {static_cast<int>(E.rows()), E * haar_orthogonal(j, i, rng)};
}

SubspaceSample sample_subspace_containing(const Mat& E, int i, Rng& rng) {
  const int d = static_cast<int>(E.rows());
  const int j = static_cast<int>(E.cols());
  if (i < j || i > d) throw std::invalid_argument("sample_subspace_containing: need dim E <= i <= d");
  Mat perp = orthogonal_complement(E, d);
  Mat extra = perp * haar_orthogonal(d - j, i - j, rng);
  Mat basis(d, i);
  basis.leftCols(j) = E;
  basis.rightCols(i - j) = extra;
  return {d, basis};
}

FlatSample sample_flat(int d, int q, double R, Rng& rng, const Vec* center) {
  if (q < 1 || q > d - 1) throw std::invalid_argument("sample_flat: need 1 <= q <= d-1");
  if (!(R > 0.0)) throw std::invalid_argument("sample_flat: radius must be positive");
  const Mat frame = haar_orthogonal(d, d, rng);
  FlatSample s;
  s.L = {d, frame.leftCols(q)};
  const Mat perp = frame.rightCols(d - q);
  Vec x = perp * rng.ball_point(d - q, R);
  if (center) x += perp * (perp.transpose() * *center);
  s.offset = x;
  s.weight = kappa(d - q) * std::pow(R, d - q);
  return s;
}

ReferenceBall reference_ball(const ConvexPolytope& K) {
  if (K.is_empty()) throw std::invalid_argument("reference ball of an empty body");
  return {K.center(), K.circumradius() + 1e-6};
}

MotionBox motion_box(const ConvexPolytope& K, const ConvexPolytope& M, double half_width_override) {
  MotionBox box;
  box.center_K = K.center();
  box.center_M = M.center();
  const double needed = K.circumradius() + M.circumradius() + 1e-6;
  if (half_width_override > 0.0) {
    box.half_width = half_width_override;
    box.covers_support = half_width_override >= needed;
  } else {
    box.half_width = needed;
  }
  return box;
}

MotionSample sample_motion(const MotionBox& box, int d, Rng& rng) {
  MotionSample m;
  m.rotation = sample_rotation(d, rng);
  Vec t = box.center_K - m.rotation * box.center_M;
  for (int i = 0; i < d; ++i) t[i] += box.half_width * (2.0 * rng.uniform() - 1.0);
  m.translation = t;
  m.weight = std::pow(2.0 * box.half_width, d);
  return m;
}

MotionSample sample_motion(const ConvexPolytope& K, const ConvexPolytope& M, Rng& rng) {
  return sample_motion(motion_box(K, M), K.ambient_dim(), rng);
}

double TranslationBox::volume() const { return (upper - lower).prod(); }

TranslationBox translation_box(const ConvexPolytope& K, const ConvexPolytope& M) {
  const int d = K.ambient_dim();
  Vec kmin = Vec::Constant(d, std::numeric_limits<double>::infinity()), kmax = -kmin;
  Vec mmin = kmin, mmax = kmax;
  for (const auto& v : K.vertices()) {
    kmin = kmin.cwiseMin(v);
    kmax = kmax.cwiseMax(v);
  }
  for (const auto& v : M.vertices()) {
    mmin = mmin.cwiseMin(v);
    mmax = mmax.cwiseMax(v);
  }
  return {kmin - mmax, kmax - mmin};
}

double subspace_bracket(const Mat& L1, const Mat& L2) {
  const int d = static_cast<int>(L1.rows());
  const int k = static_cast<int>(L1.cols() + L2.cols());
  if (k > d) throw std::invalid_argument("subspace_bracket: dimensions exceed d");
  if (k == 0) return 1.0;
  Mat m(d, k);
  m.leftCols(L1.cols()) = L1;
  m.rightCols(L2.cols()) = L2;
  const double det = (m.transpose() * m).determinant();
  return std::sqrt(std::max(0.0, det));
}

double generalized_cosine(const Mat& L1, const Mat& L2) {
  if (L1.cols() != L2.cols()) throw std::invalid_argument("generalized_cosine: unequal dimensions");
  if (L1.cols() == 0) return 1.0;
  return std::abs((L1.transpose() * L2).determinant());
}

McEstimate radon_point(const GrassmannFunction& f, const Mat& E, int i, std::uint64_t samples,
                       Rng& rng) {
  const int d = static_cast<int>(E.rows());
  const int j = static_cast<int>(E.cols());
  if (i < 1 || i > d - 1 || j < 1 || j > d - 1)
    throw std::invalid_argument("radon_point: need 1 <= i, j <= d-1");
  if (i == j) return {f(E), 0.0, 0, 0};
  RunningStats stats;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const SubspaceSample L = i < j ? sample_subspace_within(E, i, rng)
                                   : sample_subspace_containing(E, i, rng);
    stats.add(f(L.basis));
  }
  return stats.estimate();
}

}  // namespace areakin
