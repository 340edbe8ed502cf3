#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <numbers>

#include "areakin/area_measure.hpp"
#include "areakin/builtins.hpp"
#include "areakin/hull.hpp"
#include "areakin/polytope.hpp"
#include "areakin/polytope_io.hpp"

using namespace areakin;

namespace {

constexpr double kPi = std::numbers::pi;

Vec v3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

// Shoelace area of planar points given in a 2D frame, after angular sort.
double polygon_area(std::vector<Eigen::Vector2d> pts) {
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (const auto& p : pts) c += p;
  c /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a.y() - c.y(), a.x() - c.x()) < std::atan2(b.y() - c.y(), b.x() - c.x());
  });
  double area = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    area += a.x() * b.y() - a.y() * b.x();
  }
  return std::abs(area) / 2.0;
}

}  // namespace

TEST(Polytope, CubeFaceLattice) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  EXPECT_EQ(cube.dim(), 3);
  EXPECT_EQ(cube.faces(0).size(), 8u);
  EXPECT_EQ(cube.faces(1).size(), 12u);
  EXPECT_EQ(cube.faces(2).size(), 6u);
  EXPECT_EQ(cube.facets().size(), 6u);
  EXPECT_NEAR(cube.volume(), 1.0, 1e-12);
}

TEST(Polytope, SimplexAndHullOfCloud) {
  const ConvexPolytope s = make_builtin("simplex", 3);
  EXPECT_EQ(s.facets().size(), 4u);
  EXPECT_NEAR(s.volume(), 1.0 / 6.0, 1e-14);
  std::vector<Vec> pts = make_builtin("cube", 3).vertices();
  pts.push_back(v3(0.5, 0.5, 0.5));
  pts.push_back(v3(0.2, 0.9, 0.1));
  pts.push_back(v3(1.0, 1.0, 1.0));
  const ConvexPolytope hull = ConvexPolytope::from_points(pts);
  EXPECT_EQ(hull.vertices().size(), 8u);
}

TEST(Polytope, CoplanarPointsGiveLowerDimensionalBody) {
  std::vector<Vec> pts{v3(0, 0, 0.3), v3(1, 0, 0.3), v3(1, 1, 0.3), v3(0, 1, 0.3)};
  const ConvexPolytope sq = ConvexPolytope::from_points(pts);
  EXPECT_EQ(sq.dim(), 2);
  EXPECT_EQ(sq.normal_space().cols(), 1);
  EXPECT_NEAR(std::abs(sq.normal_space()(2, 0)), 1.0, 1e-12);
  EXPECT_NEAR(intrinsic_volume(sq, 2), 1.0, 1e-12);
  EXPECT_NEAR(intrinsic_volume(sq, 1), 2.0, 1e-12);
  EXPECT_NEAR(intrinsic_volume(sq, 0), 1.0, 1e-12);
}

TEST(Polytope, IntrinsicVolumes) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  const double expected_cube[] = {1, 3, 3, 1};
  for (int j = 0; j <= 3; ++j) EXPECT_NEAR(intrinsic_volume(cube, j), expected_cube[j], 1e-10);
  const ConvexPolytope box = make_builtin("box:2,1,1", 3);
  EXPECT_NEAR(intrinsic_volume(box, 3), 2.0, 1e-12);
  EXPECT_NEAR(intrinsic_volume(box, 2), 5.0, 1e-10);
  EXPECT_NEAR(intrinsic_volume(box, 1), 4.0, 1e-10);
  const ConvexPolytope c4 = make_builtin("cube", 4);
  const double expected_c4[] = {1, 4, 6, 4, 1};
  for (int j = 0; j <= 4; ++j) EXPECT_NEAR(intrinsic_volume(c4, j), expected_c4[j], 1e-10);
}

TEST(Polytope, BallApproximation) {
  const ConvexPolytope ball = make_builtin("ball-approx:600", 3);
  EXPECT_NEAR(intrinsic_volume(ball, 2) / (2 * kPi), 1.0, 0.02);
}

TEST(Polytope, SupportFunction) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  EXPECT_NEAR(support_function(cube, v3(1, 0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(support_function(cube, v3(-1, 0, 0)), 0.0, 1e-15);
  const ConvexPolytope s = make_builtin("simplex", 3);
  EXPECT_NEAR(support_function(s, v3(1, 1, 1) / std::sqrt(3.0)), 1.0 / std::sqrt(3.0), 1e-15);
}

TEST(Intersection, FlatSections) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  Mat plane(3, 2);
  plane << 1, 0, 0, 1, 0, 0;
  const ConvexPolytope sq = intersect_flat(cube, {v3(0, 0, 0.5), plane});
  EXPECT_EQ(sq.dim(), 2);
  EXPECT_NEAR(intrinsic_volume(sq, 2), 1.0, 1e-12);
  EXPECT_TRUE(intersect_flat(cube, {v3(0, 0, 2), plane}).is_empty());

  // Hexagon through the center with normal (1,1,1): compare against the
  // planar hull of the six edge crossings.
  Mat tilted(3, 2);
  tilted.col(0) = v3(1, -1, 0) / std::sqrt(2.0);
  tilted.col(1) = v3(1, 1, -2) / std::sqrt(6.0);
  const Vec c = v3(0.5, 0.5, 0.5);
  const ConvexPolytope hex = intersect_flat(cube, {c, tilted});
  ASSERT_EQ(hex.vertices().size(), 6u);
  std::vector<Eigen::Vector2d> planar;
  for (const Vec& v : hex.vertices()) {
    const Vec local = tilted.transpose() * (v - c);
    planar.emplace_back(local[0], local[1]);
  }
  EXPECT_NEAR(intrinsic_volume(hex, 2), polygon_area(planar), 1e-12);
  EXPECT_NEAR(intrinsic_volume(hex, 2), 3.0 * std::sqrt(3.0) / 4.0, 1e-12);
}

TEST(Intersection, MovedCubes) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  const Mat id = Mat::Identity(3, 3);
  EXPECT_NEAR(intersect_moved(cube, id, Vec::Zero(3), cube).volume(), 1.0, 1e-12);
  EXPECT_TRUE(intersect_moved(cube, id, v3(2, 0, 0), cube).is_empty());
  const ConvexPolytope half = intersect_moved(cube, id, v3(0.5, 0, 0), cube);
  EXPECT_NEAR(half.volume(), 0.5, 1e-12);
  EXPECT_NEAR(support_function(half, v3(-1, 0, 0)), -0.5, 1e-12);
}

TEST(Hull, HalfspaceVertices) {
  std::vector<Halfspace> hs;
  for (int i = 0; i < 3; ++i) {
    hs.push_back({Vec::Unit(3, i), 1.0});
    hs.push_back({-Vec::Unit(3, i), 0.0});
  }
  hs.push_back({v3(1, 1, 1), 2.5});
  const auto verts = halfspace_vertices(hs, 3);
  EXPECT_EQ(verts.size(), 10u);  // cube with one corner cut off
}

TEST(Builtins, CatalogAndErrors) {
  const auto list = list_builtins();
  EXPECT_TRUE(std::any_of(list.begin(), list.end(), [](const auto& b) { return b.name == "cube"; }));
  EXPECT_THROW(make_builtin("box:1,2", 3), std::invalid_argument);
  EXPECT_THROW(make_builtin("nope", 3), std::invalid_argument);
  const ConvexPolytope a = make_builtin("random-simplex:5", 4);
  const ConvexPolytope b = make_builtin("random-simplex:5", 4);
  EXPECT_EQ(polytope_hash(a), polytope_hash(b));
  EXPECT_GE(a.volume(), 1e-3);
}

TEST(PolytopeIo, JsonRoundTrip) {
  const ConvexPolytope box = make_builtin("box:2,1,1", 3);
  const ConvexPolytope back = polytope_from_json(polytope_to_json(box));
  EXPECT_EQ(polytope_hash(box), polytope_hash(back));
  const std::string path = ::testing::TempDir() + "box.json";
  write_polytope_file(path, box);
  EXPECT_NEAR(load_body(path, 3).volume(), 2.0, 1e-12);
  std::remove(path.c_str());
  EXPECT_ANY_THROW(polytope_from_json("{\"d\": 3}"));
  EXPECT_ANY_THROW(polytope_from_json("not json"));
}

TEST(AreaMeasure, CubeFacetsAndEdges) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  const SphericalAreaMeasure s2 = area_measure(cube, 2);
  EXPECT_TRUE(s2.atomic());
  EXPECT_EQ(s2.pieces.size(), 6u);
  EXPECT_NEAR(s2.exact_mass(), 6.0, 1e-12);
  const SphericalAreaMeasure s1 = area_measure(cube, 1);
  EXPECT_EQ(s1.pieces.size(), 12u);
  EXPECT_FALSE(s1.atomic());
  EXPECT_NEAR(s1.exact_mass(), 3 * kPi, 1e-12);
  Rng rng(1);
  const McEstimate m = measure_pair(s1, [](const Vec&) { return 1.0; }, 1000, rng);
  EXPECT_NEAR(m.value, 3 * kPi, 1e-12);
}

TEST(AreaMeasure, AtomicPairings) {
  Rng rng(2);
  auto quad = [](const Vec& u) { return u[0] * u[0] - 1.0 / 3.0; };
  const McEstimate cube = measure_pair(area_measure(make_builtin("cube", 3), 2), quad, 10, rng);
  EXPECT_NEAR(cube.value, 0.0, 1e-14);
  const ConvexPolytope box = make_builtin("box:2,1,1", 3);
  const SphericalAreaMeasure s = area_measure(box, 2);
  EXPECT_NEAR(measure_pair(s, quad, 10, rng).value, -4.0 / 3.0, 1e-14);
  EXPECT_NEAR(measure_pair(s.reflected(), [](const Vec& u) { return u[0]; }, 10, rng).value, 0.0,
              1e-14);
}

TEST(AreaMeasure, MassIdentityExactAngles) {
  for (const char* name : {"cube", "box:2,1,1", "simplex"}) {
    const ConvexPolytope P = make_builtin(name, 3);
    for (int j = 0; j < 3; ++j)
      EXPECT_NEAR(area_measure(P, j).exact_mass(),
                  3 * kappa(3 - j) / binomial(3, j) * intrinsic_volume(P, j), 1e-10)
          << name << " j=" << j;
  }
}

TEST(AreaMeasure, ExternalAngles) {
  const ConvexPolytope cube = make_builtin("cube", 3);
  EXPECT_NEAR(external_angle(cube, 0, 0), 1.0 / 8.0, 1e-12);
  EXPECT_NEAR(external_angle(cube, 1, 0), 1.0 / 4.0, 1e-12);
  EXPECT_NEAR(external_angle(cube, 2, 0), 1.0 / 2.0, 1e-12);
  const ConvexPolytope c4 = make_builtin("cube", 4);
  EXPECT_TRUE(std::isnan(external_angle(c4, 0, 0)));
  Rng rng(3);
  const McEstimate mc = external_angle_mc(c4, 0, 0, 200000, rng);
  EXPECT_NEAR(mc.value, 1.0 / 16.0, 4 * mc.std_error);
}

TEST(AreaMeasure, ConeSamplesStayInside) {
  const ConvexPolytope s = make_builtin("random-simplex:3", 3);
  Rng rng(4);
  for (std::size_t i = 0; i < s.faces(0).size(); ++i) {
    const NormalCone c = normal_cone(s, 0, static_cast<int>(i));
    for (int n = 0; n < 50; ++n) EXPECT_TRUE(c.contains(c.sample_inside(rng), 1e-9));
  }
}
