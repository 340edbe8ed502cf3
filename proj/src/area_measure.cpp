#include "areakin/area_measure.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "areakin/linalg.hpp"

namespace areakin {

namespace {

using Neighbors = std::vector<std::vector<int>>;

Neighbors vertex_neighbors(const ConvexPolytope& P) {
  Neighbors nb(P.vertices().size());
  for (const auto& e : P.faces(1)) {
    nb[e.vertices[0]].push_back(e.vertices[1]);
    nb[e.vertices[1]].push_back(e.vertices[0]);
  }
  return nb;
}

Vec gaussian_combination(const Mat& basis, Rng& rng) {
  Vec x = Vec::Zero(basis.rows());
  for (int c = 0; c < basis.cols(); ++c) x += rng.gaussian() * basis.col(c);
  return x;
}

NormalCone build_cone(const ConvexPolytope& P, int k, int index, const Neighbors& nb) {
  const Face& F = P.faces(k).at(index);
  const int d = P.ambient_dim();
  NormalCone cone;
  cone.d = d;
  for (int g : F.facets) cone.generators.push_back(P.facets()[g].normal);
  cone.lineality = P.normal_space();
  cone.pointed_basis = orthonormal_span(cone.generators, d);
  const int m0 = cone.pointed_dim();
  if (m0 != P.dim() - k) throw std::logic_error("normal cone: inconsistent face incidence");

  for (int v : F.vertices)
    for (int u : nb[v]) {
      if (std::binary_search(F.vertices.begin(), F.vertices.end(), u)) continue;
      Vec c = P.vertices()[u] - P.vertices()[v];
      cone.constraints.push_back(c / c.norm());
    }

  switch (m0) {
    case 0:
      cone.angle_fraction = 1.0;
      break;
    case 1:
      cone.angle_fraction = 0.5;
      break;
    case 2: {
      std::size_t a = 0, b = 0;
      double best = 2.0;
      for (std::size_t i = 0; i < cone.generators.size(); ++i)
        for (std::size_t j = i + 1; j < cone.generators.size(); ++j) {
          const double c = cone.generators[i].dot(cone.generators[j]);
          if (c < best) {
            best = c;
            a = i;
            b = j;
          }
        }
      const Vec& ga = cone.generators[a];
      const Vec& gb = cone.generators[b];
      cone.arc_start = ga;
      Vec perp = gb - ga.dot(gb) * ga;
      cone.arc_normal = perp / perp.norm();
      cone.arc_width = std::atan2(gb.dot(cone.arc_normal), gb.dot(ga));
      cone.angle_fraction = cone.arc_width / (2.0 * std::numbers::pi);
      break;
    }
    case 3: {
      std::vector<Eigen::Vector3d> rays;
      for (const auto& g : cone.generators) {
        Vec c = cone.pointed_basis.transpose() * g;
        rays.emplace_back(c[0], c[1], c[2]);
      }
      cone.angle_fraction = solid_angle_3d(std::move(rays)) / (4.0 * std::numbers::pi);
      break;
    }
    default:
      break;
  }
  return cone;
}

}  // namespace

double solid_angle_3d(std::vector<Eigen::Vector3d> rays) {
  if (rays.size() < 3) return 0.0;
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (auto& r : rays) {
    r.normalize();
    c += r;
  }
  c.normalize();
  Eigen::Vector3d e1 = c.unitOrthogonal();
  Eigen::Vector3d e2 = c.cross(e1);
  std::sort(rays.begin(), rays.end(), [&](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return std::atan2(a.dot(e2), a.dot(e1)) < std::atan2(b.dot(e2), b.dot(e1));
  });
  double total = 0.0;
  const Eigen::Vector3d& a = rays[0];
  for (std::size_t i = 1; i + 1 < rays.size(); ++i) {
    const Eigen::Vector3d& b = rays[i];
    const Eigen::Vector3d& d = rays[i + 1];
    const double triple = std::abs(a.dot(b.cross(d)));
    total += 2.0 * std::atan2(triple, 1.0 + a.dot(b) + b.dot(d) + d.dot(a));
  }
  return total;
}

bool NormalCone::contains(const Vec& x, double tol) const {
  const double scale = std::max(1.0, x.norm());
  for (const auto& c : constraints)
    if (c.dot(x) > tol * scale) return false;
  Vec r = project_out(project_out(x, pointed_basis), lineality);
  return r.norm() <= tol * scale;
}

Vec NormalCone::sample_inside(Rng& rng) const {
  const int m0 = pointed_dim();
  for (int attempt = 0; attempt < 10000000; ++attempt) {
    Vec x = gaussian_combination(lineality, rng);
    if (m0 == 1) {
      x += std::abs(rng.gaussian()) * generators.front();
    } else if (m0 == 2) {
      const double r = std::hypot(rng.gaussian(), rng.gaussian());
      const double t = rng.uniform() * arc_width;
      x += r * (std::cos(t) * arc_start + std::sin(t) * arc_normal);
    } else if (m0 >= 3) {
      Vec y = gaussian_combination(pointed_basis, rng);
      bool inside = true;
      for (const auto& c : constraints)
        if (c.dot(y) > 0.0) {
          inside = false;
          break;
        }
      if (!inside) continue;
      x += y;
    }
    const double n = x.norm();
    if (n > 0.0) return x / n;
  }
  throw std::runtime_error("normal cone sampling failed");
}

Vec NormalCone::sample_span(Rng& rng, bool& inside) const {
  for (;;) {
    Vec y = gaussian_combination(pointed_basis, rng);
    Vec x = y + gaussian_combination(lineality, rng);
    const double n = x.norm();
    if (n == 0.0) continue;
    inside = true;
    for (const auto& c : constraints)
      if (c.dot(y) > 0.0) {
        inside = false;
        break;
      }
    return x / n;
  }
}

NormalCone NormalCone::reflected() const {
  NormalCone r = *this;
  r.pointed_basis = -pointed_basis;
  r.lineality = -lineality;
  for (auto& g : r.generators) g = -g;
  for (auto& c : r.constraints) c = -c;
  if (arc_start.size() > 0) {
    r.arc_start = -arc_start;
    r.arc_normal = -arc_normal;
  }
  return r;
}

NormalCone normal_cone(const ConvexPolytope& P, int k, int index) {
  return build_cone(P, k, index, vertex_neighbors(P));
}

bool SphericalAreaMeasure::atomic() const {
  return std::all_of(pieces.begin(), pieces.end(),
                     [](const ConePiece& p) { return p.cone.is_ray(); });
}

double SphericalAreaMeasure::exact_mass() const {
  double mass = 0.0;
  for (const auto& p : pieces) {
    if (!p.cone.exact_angle()) return std::numeric_limits<double>::quiet_NaN();
    mass += p.weight * omega(p.cone.linear_dim()) * p.cone.angle_fraction;
  }
  return normalization * mass;
}

SphericalAreaMeasure SphericalAreaMeasure::reflected() const {
  SphericalAreaMeasure r = *this;
  for (auto& p : r.pieces) p.cone = p.cone.reflected();
  return r;
}

SphericalAreaMeasure area_measure(const ConvexPolytope& P, int j) {
  const int d = P.ambient_dim();
  if (j < 0 || j > d - 1) throw std::invalid_argument("area measure: order must be in 0..d-1");
  SphericalAreaMeasure S;
  S.d = d;
  S.order = j;
  S.normalization = 1.0 / binomial(d - 1, j);
  if (P.is_empty() || P.dim() < j) return S;
  const Neighbors nb = vertex_neighbors(P);
  const auto& faces = P.faces(j);
  S.pieces.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i)
    S.pieces.push_back({faces[i].volume, build_cone(P, j, static_cast<int>(i), nb)});
  return S;
}

McEstimate measure_pair(const SphericalAreaMeasure& S, const SphereFunction& f,
                        std::uint64_t samples, Rng& rng) {
  double value = 0.0, variance = 0.0;
  std::uint64_t drawn = 0;
  for (const auto& piece : S.pieces) {
    const NormalCone& cone = piece.cone;
    if (cone.is_ray()) {
      value += S.normalization * piece.weight * f(cone.generators.front());
      continue;
    }
    double scale = S.normalization * piece.weight * omega(cone.linear_dim());
    RunningStats stats;
    if (cone.exact_angle()) {
      scale *= cone.angle_fraction;
      for (std::uint64_t i = 0; i < samples; ++i) stats.add(f(cone.sample_inside(rng)));
    } else {
      for (std::uint64_t i = 0; i < samples; ++i) {
        bool inside = false;
        Vec u = cone.sample_span(rng, inside);
        stats.add(inside ? f(u) : 0.0);
      }
    }
    drawn += samples;
    const McEstimate e = stats.estimate(scale);
    value += e.value;
    variance += e.std_error * e.std_error;
  }
  return {value, std::sqrt(variance), drawn, 0};
}

double external_angle(const ConvexPolytope& P, int k, int index) {
  return normal_cone(P, k, index).angle_fraction;
}

McEstimate external_angle_mc(const ConvexPolytope& P, int k, int index, std::uint64_t samples,
                             Rng& rng) {
  const NormalCone cone = normal_cone(P, k, index);
  RunningStats stats;
  for (std::uint64_t i = 0; i < samples; ++i) {
    bool inside = false;
    cone.sample_span(rng, inside);
    stats.add(inside ? 1.0 : 0.0);
  }
  return stats.estimate();
}

McEstimate intrinsic_volume_estimate(const ConvexPolytope& P, int j, std::uint64_t samples,
                                     std::uint64_t seed) {
  if (P.is_empty() || j > P.dim()) return {0.0, 0.0, 0, seed};
  if (j < 0) throw std::invalid_argument("intrinsic volume: negative order");
  if (j == P.dim()) return {P.volume(), 0.0, 0, seed};
  if (j == 0) return {1.0, 0.0, 0, seed};
  const Neighbors nb = vertex_neighbors(P);
  const auto& faces = P.faces(j);
  double value = 0.0, variance = 0.0;
  std::uint64_t drawn = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const NormalCone cone = build_cone(P, j, static_cast<int>(i), nb);
    if (cone.exact_angle()) {
      value += faces[i].volume * cone.angle_fraction;
      continue;
    }
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(j), i));
    RunningStats stats;
    for (std::uint64_t s = 0; s < samples; ++s) {
      bool inside = false;
      cone.sample_span(rng, inside);
      stats.add(inside ? 1.0 : 0.0);
    }
    const McEstimate e = stats.estimate(faces[i].volume);
    value += e.value;
    variance += e.std_error * e.std_error;
    drawn += samples;
  }
  return {value, std::sqrt(variance), drawn, seed};
}

double intrinsic_volume(const ConvexPolytope& P, int j) {
  return intrinsic_volume_estimate(P, j).value;
}

}  // namespace areakin
