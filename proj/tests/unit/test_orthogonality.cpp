#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "areakin/constants.hpp"
#include "areakin/grassmann.hpp"
#include "areakin/orthogonality.hpp"

using namespace areakin;

namespace {

constexpr double kPi = std::numbers::pi;

HarmonicSpectrum zonal(int d, int s, const Vec& axis) {
  HarmonicSpectrum f(d);
  f.add_zonal(s, axis);
  return f;
}

}  // namespace

TEST(CosineTransform, HemisphereValues) {
  Rng rng(1);
  const Mat full = Mat::Identity(3, 3);
  const Vec v = Vec::Unit(3, 2);
  auto one = [](const Vec&) { return 1.0; };
  const McEstimate half = cosine_transform(one, {full, 0, v}, 1000, rng);
  EXPECT_DOUBLE_EQ(half.value, 0.5);
  EXPECT_DOUBLE_EQ(half.std_error, 0.0);
  const McEstimate quarter = cosine_transform(one, {full, 1, v}, 200000, rng);
  EXPECT_NEAR(quarter.value, 0.25, 4 * quarter.std_error);

  auto odd = [](const Vec& u) { return u[0] + 0.3 * u[1]; };
  const Vec w = Vec(Vec::Ones(3).normalized());
  Rng r1(2), r2(2);
  const double plus = cosine_transform(odd, {full, 0, w}, 1000, r1).value;
  const double minus = cosine_transform(odd, {full, 0, Vec(-w)}, 1000, r2).value;
  EXPECT_NEAR(plus + minus, 0.0, 1e-12);

  EXPECT_THROW(cosine_transform(one, {full, -1, v}, 10, rng), std::invalid_argument);
  Mat plane(3, 2);
  plane << 1, 0, 0, 1, 0, 0;
  EXPECT_THROW(cosine_transform(one, {plane, 0, v}, 10, rng), std::invalid_argument);
}

TEST(CosineTransform, SelfTestGrid) {
  Rng rng(3);
  for (int n : {2, 3, 4})
    for (int p : {0, 1, 2}) {
      const IdentityReport r = sph_integration_selftest(n + 1, 1, p, 100000, rng);
      EXPECT_TRUE(r.pass) << summary_line(r);
      if (p == 0) EXPECT_DOUBLE_EQ(r.lhs.value, 0.5);
    }
}

TEST(Koldobsky, ConstantAndQuadratic) {
  Rng rng(4);
  const IdentityReport c =
      koldobsky_check(3, 1, zonal(3, 0, Vec::Unit(3, 0)), sample_subspace(3, 1, rng).basis, 100, rng);
  EXPECT_NEAR(c.lhs.value, 4 * kPi, 1e-12);
  EXPECT_NEAR(c.rhs.value, 4 * kPi, 1e-12);
  const IdentityReport q = koldobsky_check(3, 2, zonal(3, 2, rng.unit_vec(3)),
                                           sample_subspace(3, 2, rng).basis, 100000, rng);
  EXPECT_TRUE(q.pass) << summary_line(q);
  EXPECT_THROW(koldobsky_check(3, 1, zonal(3, 3, Vec::Unit(3, 0)), Mat::Identity(3, 1), 10, rng),
               std::invalid_argument);
}

TEST(EvenOrthogonality, ConstantIsExactAndQuadraticAgrees) {
  Rng rng(5);
  const IdentityReport c = even_orthogonality_check(3, 2, 1, zonal(3, 0, Vec::Unit(3, 0)),
                                                    sample_subspace(3, 1, rng).basis, 100, rng);
  EXPECT_NEAR(c.lhs.value, 4 * std::pow(kPi, 4), 1e-8);
  EXPECT_EQ(c.z, 0.0);
  const IdentityReport q = even_orthogonality_check(4, 3, 1, zonal(4, 2, rng.unit_vec(4)),
                                                    sample_subspace(4, 2, rng).basis, 100000, rng);
  EXPECT_TRUE(q.pass) << summary_line(q);
  EXPECT_THROW(even_orthogonality_check(3, 2, 2, zonal(3, 0, Vec::Unit(3, 0)), Mat::Identity(3, 0),
                                        10, rng),
               std::invalid_argument);
}

TEST(FJv, ConstantAndEvenFactorization) {
  Rng rng(6);
  const int d = 3, j = 1;
  const Vec v = Vec::Unit(3, 0);
  Mat N(3, 2);
  N << 1, 0, 0, 0.6, 0, 0.8;
  auto one = [](const Vec&) { return 1.0; };
  const McEstimate c = f_jv(one, j, v, N, 200000, rng);
  EXPECT_NEAR(c.value, 0.5 * hemisphere_moment(d - j, j + 1), 4 * c.std_error + 1e-12);

  // Even f: f_j^v(N) = (1/2) (average of f over S cap N) (H_{j+1}^N 1)(v).
  auto even = [](const Vec& u) { return u[2] * u[2]; };
  const McEstimate e = f_jv(even, j, v, N, 400000, rng);
  const double expected = 0.5 * (0.5 * 0.64) * hemisphere_moment(d - j, j + 1);
  EXPECT_NEAR(e.value, expected, 4 * e.std_error);

  EXPECT_THROW(f_jv(one, j, Vec::Unit(3, 1), N, 10, rng), std::invalid_argument);
}

TEST(Asymmetric, ConstantCaseAndCenteredness) {
  const IdentityReport c = asymm_orthogonality_check(3, 1, zonal(3, 0, Vec::Unit(3, 0)),
                                                     Vec::Unit(3, 2), 200000, 1);
  EXPECT_NEAR(c.rhs.value, kPi / 2, 1e-12);
  EXPECT_TRUE(c.pass) << summary_line(c);

  Rng rng(7);
  const HarmonicSpectrum cubic = zonal(3, 3, rng.unit_vec(3));
  const IdentityReport odd = asymm_orthogonality_check(3, 1, cubic, rng.unit_vec(3), 400000, 2);
  EXPECT_TRUE(odd.pass) << summary_line(odd);
  const IdentityReport centered = asymm_centeredness_check(3, 1, cubic, rng.unit_vec(3), 200000, 3);
  EXPECT_TRUE(centered.pass) << summary_line(centered);

  EXPECT_THROW(asymm_orthogonality_check(3, 1, zonal(3, 1, Vec::Unit(3, 0)), Vec::Unit(3, 0), 10, 1),
               std::invalid_argument);
}
