#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "areakin/builtins.hpp"
#include "areakin/constants.hpp"
#include "areakin/kinematics.hpp"

using namespace areakin;

namespace {

constexpr double kPi = std::numbers::pi;

McOptions options(std::uint64_t samples) {
  McOptions o;
  o.samples = samples;
  o.rhs_cone_samples = 50000;
  return o;
}

void expect_all_pass(const std::vector<IdentityReport>& reports) {
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << summary_line(r);
}

}  // namespace

TEST(TestFunctions, ZonalFamilies) {
  const auto fs = zonal_test_functions(3, {0, 2, 3}, 3, 1);
  EXPECT_EQ(fs.size(), 7u);
  EXPECT_EQ(fs.front().name, "const");
  EXPECT_EQ(fs[1].f.degrees(), std::vector<int>{2});
  EXPECT_EQ(zonal_test_functions(3, {2}, 2, 1)[0].f.terms()[0].degree, 2);
  EXPECT_THROW(zonal_test_functions(3, {-1}, 1, 1), std::invalid_argument);
}

TEST(Crofton, ExactRightSides) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  const TestFunction one = constant_test_function(3);
  EXPECT_NEAR(crofton_rhs(cube, 1, 2, one.f, options(10)).value, 3 * kPi * kPi / 4, 1e-10);
  const std::vector<HarmonicSpectrum> fs{one.f};
  EXPECT_NEAR(crofton_lhs(cube, 1, 3, fs, options(10))[0].value, 3 * kPi, 1e-12);

  HarmonicSpectrum quad(3);
  quad.add_zonal(2, Vec::Unit(3, 0), 1.0, 2.0 / 3.0);
  const ConvexPolytope box = make_builtin("box:2,1,1", 3);
  EXPECT_NEAR(crofton_rhs(box, 1, 2, quad, options(10)).value, -kPi * kPi / 24, 1e-10);
  EXPECT_THROW(crofton_rhs(box, 2, 2, quad, options(10)), std::invalid_argument);
}

TEST(Crofton, MonteCarloAgreement) {
  const ConvexPolytope box = make_builtin("box:2,1,1", 3);
  expect_all_pass(crofton_check(box, 1, 2, zonal_test_functions(3, {0, 1, 2}, 1, 5), options(30000)));
  const ConvexPolytope simplex = make_builtin("random-simplex:2", 4);
  expect_all_pass(crofton_check(simplex, 1, 3, zonal_test_functions(4, {0, 2}, 1, 5), options(20000)));
}

TEST(Crofton, DeterministicForFixedSeed) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  const std::vector<HarmonicSpectrum> fs{constant_test_function(3).f};
  McOptions a = options(5000), b = options(5000);
  b.parallel.workers = 3;
  EXPECT_EQ(crofton_lhs(cube, 1, 2, fs, a)[0].value, crofton_lhs(cube, 1, 2, fs, b)[0].value);
}

TEST(Pkf, CubesConstantFunction) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  const TestFunction one = constant_test_function(3);
  EXPECT_NEAR(pkf_rhs(cube, cube, 2, one.f, options(10)).value, 12.0, 1e-10);
  EXPECT_NEAR(pkf_rhs(cube, cube, 1, one.f, options(10)).value, 6 * kPi + 9 * kPi * kPi / 4,
              1e-9);
  expect_all_pass(pkf_check(cube, cube, 2, {one}, options(20000)));
}

TEST(Pkf, SmallBoxIsFlagged) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  const auto reports = pkf_check(cube, cube, 2, {constant_test_function(3)}, options(2000), 0.5);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_FALSE(reports[0].pass);
  EXPECT_FALSE(reports[0].note.empty());
}

TEST(Translative, UnitCubes) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  const TestFunction one = constant_test_function(3);
  EXPECT_NEAR(translative_rhs(cube, cube, one.f, options(10)).value, 12.0, 1e-12);
  expect_all_pass(translative_check(cube, cube, zonal_test_functions(3, {0, 2}, 1, 3), options(20000)));
}

TEST(MeanSection, BoxOrderTwoAndFull) {
  const ConvexPolytope box = make_builtin("box:2,1,1", 3);
  expect_all_pass(mean_section_check(box, 2, Vec::Unit(3, 0),
                                     zonal_test_functions(3, {2}, 1, 4), options(20000)));
  const auto full = mean_section_check(box, 3, Vec::Unit(3, 1), {}, options(5000));
  expect_all_pass(full);
  EXPECT_NEAR(full[0].lhs.value, 1.0, 1e-12);  // support value at e_2, exact for k = d
}

TEST(Inversion, ChainAndEndToEnd) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  const auto reports =
      inversion_corollary_check(cube, 1, 2, {constant_test_function(3)}, options(20000));
  expect_all_pass(reports);
  EXPECT_EQ(reports.front().identity, "inversion-multiplier");
  EXPECT_EQ(reports.front().z, 0.0);
}
