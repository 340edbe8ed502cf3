#include <gtest/gtest.h>

#include <cmath>

#include "areakin/builtins.hpp"
#include "areakin/constants.hpp"
#include "areakin/grassmann.hpp"
#include "areakin/linalg.hpp"
#include "areakin/parallel.hpp"

using namespace areakin;

TEST(Grassmann, RotationsAreSpecialOrthogonal) {
  Rng rng(1);
  for (int d : {2, 3, 5, 8}) {
    const Mat r = sample_rotation(d, rng);
    EXPECT_LT((r.transpose() * r - Mat::Identity(d, d)).norm(), 1e-12);
    EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
  }
}

TEST(Grassmann, RotationMoments) {
  Rng rng(2);
  const int d = 4;
  RunningStats first, second;
  for (int i = 0; i < 100000; ++i) {
    const double c = sample_rotation(d, rng)(0, 0);
    first.add(c);
    second.add(c * c);
  }
  EXPECT_NEAR(first.mean(), 0.0, 4 * first.std_error());
  EXPECT_NEAR(second.mean(), 1.0 / d, 4 * second.std_error());
}

TEST(Grassmann, SubspaceSamplers) {
  Rng rng(3);
  const SubspaceSample L = sample_subspace(5, 2, rng);
  EXPECT_LT((L.basis.transpose() * L.basis - Mat::Identity(2, 2)).norm(), 1e-12);
  const SubspaceSample within = sample_subspace_within(L.basis, 1, rng);
  EXPECT_LT(project_out(within.basis.col(0), L.basis).norm(), 1e-12);
  const SubspaceSample big = sample_subspace_containing(L.basis, 4, rng);
  EXPECT_EQ(big.dim(), 4);
  EXPECT_LT((big.basis.transpose() * big.basis - Mat::Identity(4, 4)).norm(), 1e-12);
  for (int c = 0; c < 2; ++c) EXPECT_LT(project_out(L.basis.col(c), big.basis).norm(), 1e-12);
  EXPECT_THROW(sample_subspace_containing(L.basis, 1, rng), std::invalid_argument);
}

TEST(Grassmann, FlatWeightAndIndicator) {
  Rng rng(4);
  const int d = 3, q = 2;
  RunningStats hit;
  double weight = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const FlatSample E = sample_flat(d, q, 1.0, rng);
    weight = E.weight;
    hit.add(E.offset.norm() <= 0.5 ? 1.0 : 0.0);
  }
  EXPECT_NEAR(weight, 2.0, 1e-15);
  EXPECT_NEAR(hit.mean(), 0.5, 4 * hit.std_error());
  // Offsets are orthogonal to the direction space.
  const FlatSample E = sample_flat(4, 2, 1.5, rng);
  EXPECT_LT((E.L.basis.transpose() * E.offset).norm(), 1e-12);
  EXPECT_NEAR(E.weight, kappa(2) * 1.5 * 1.5, 1e-12);
}

TEST(Grassmann, MotionBoxAndTranslationBox) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  const MotionBox box = motion_box(cube, cube);
  EXPECT_TRUE(box.covers_support);
  EXPECT_NEAR(box.half_width, std::sqrt(3.0) + 1e-6, 1e-9);
  EXPECT_FALSE(motion_box(cube, cube, 0.5).covers_support);

  Rng rng(5);
  const double eps = 0.3;
  MotionBox small = box;
  small.center_K = Vec::Zero(3);
  small.center_M = Vec::Zero(3);
  RunningStats st;
  for (int i = 0; i < 50000; ++i) {
    const MotionSample m = sample_motion(small, 3, rng);
    st.add(m.translation.cwiseAbs().maxCoeff() <= eps ? m.weight : 0.0);
  }
  EXPECT_NEAR(st.mean(), std::pow(2 * eps, 3), 4 * st.std_error());

  const TranslationBox tb = translation_box(cube, make_builtin("box:2,1,1", 3));
  EXPECT_NEAR(tb.volume(), 3.0 * 2.0 * 2.0, 1e-12);
}

TEST(Grassmann, BracketAndCosine) {
  Rng rng(6);
  const SubspaceSample L1 = sample_subspace(4, 2, rng);
  const SubspaceSample L2 = sample_subspace(4, 2, rng);
  const Mat perp = orthogonal_complement(L2.basis, 4);
  EXPECT_NEAR(generalized_cosine(L1.basis, L2.basis), subspace_bracket(L1.basis, perp), 1e-12);
  EXPECT_NEAR(subspace_bracket(L1.basis, orthogonal_complement(L1.basis, 4)), 1.0, 1e-12);
}

TEST(Grassmann, RadonPoint) {
  Rng rng(7);
  Mat E(3, 2);
  E << 1, 0, 0, 1, 0, 0;
  const GrassmannFunction one = [](const Mat&) { return 1.0; };
  EXPECT_DOUBLE_EQ(radon_point(one, E, 1, 100, rng).value, 1.0);
  const GrassmannFunction axis_sq = [](const Mat& L) { return L(0, 0) * L(0, 0); };
  const McEstimate r = radon_point(axis_sq, E, 1, 100000, rng);
  EXPECT_NEAR(r.value, 0.5, 4 * r.std_error);
  Mat line(3, 1);
  line << 1, 0, 0;
  EXPECT_DOUBLE_EQ(radon_point(one, line, 2, 10, rng).value, 1.0);
}

TEST(Parallel, ChunkedRunsAreWorkerIndependent) {
  auto body = [](Rng& rng, std::uint64_t count, StatsVector& st) {
    for (std::uint64_t i = 0; i < count; ++i) st[0].add(rng.gaussian());
  };
  ParallelOptions one{1, 100}, four{4, 100};
  const StatsVector a = run_chunked(10007, 9, 1, 1, one, body);
  const StatsVector b = run_chunked(10007, 9, 1, 1, four, body);
  EXPECT_EQ(a[0].count(), 10007u);
  EXPECT_EQ(a[0].mean(), b[0].mean());
  EXPECT_EQ(a[0].variance(), b[0].variance());
}
