#include "areakin/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "areakin/constants.hpp"
#include "areakin/linalg.hpp"

namespace areakin {

namespace {

// Subsets above this count switch the hull to the incremental algorithm.
constexpr double kBruteForceLimit = 20000.0;

bool binomial_fits(std::size_t n, int p) {
  return binomial(static_cast<int>(n), p) <= kBruteForceLimit;
}

double coordinate_scale(std::span<const Vec> pts) {
  double s = 1.0;
  for (const auto& x : pts) s = std::max(s, x.cwiseAbs().maxCoeff());
  return s;
}

// Distinct points (first occurrence wins) and their input indices.
std::vector<Vec> dedupe(std::span<const Vec> pts, double tol, std::vector<int>& source) {
  std::vector<Vec> out;
  out.reserve(pts.size());
  source.clear();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dup = false;
    for (const auto& y : out) {
      if ((pts[i] - y).cwiseAbs().maxCoeff() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      out.push_back(pts[i]);
      source.push_back(static_cast<int>(i));
    }
  }
  return out;
}

template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k > n || k <= 0) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Unit normal of the hyperplane through p affinely independent points in
// R^p, or an empty vector if they are dependent.
Vec hyperplane_normal(std::span<const Vec> pts, std::span<const int> idx, int p) {
  std::vector<Vec> diffs;
  diffs.reserve(idx.size() - 1);
  for (std::size_t k = 1; k < idx.size(); ++k) diffs.push_back(pts[idx[k]] - pts[idx[0]]);
  if (p == 2) {
    Vec n(2);
    n << -diffs[0][1], diffs[0][0];
    const double len = n.norm();
    if (len <= kGeomEps * diffs[0].cwiseAbs().maxCoeff() || len == 0.0) return Vec(0);
    return n / len;
  }
  if (p == 3) {
    Eigen::Vector3d a = diffs[0].head<3>(), b = diffs[1].head<3>();
    Eigen::Vector3d c = a.cross(b);
    const double len = c.norm();
    if (len <= kGeomEps * a.norm() * b.norm() || len == 0.0) return Vec(0);
    Vec n(3);
    n = c / len;
    return n;
  }
  Mat basis = orthonormal_span(diffs, p);
  if (basis.cols() != p - 1) return Vec(0);
  return orthogonal_complement(basis, p).col(0);
}

HullResult finalize(const std::vector<Vec>& pts, const std::vector<int>& source,
                    const std::vector<Halfspace>& planes, int p, double tol) {
  const int n = static_cast<int>(pts.size());
  std::map<std::vector<int>, int> seen;
  std::vector<Halfspace> facets;
  std::vector<std::vector<int>> tight_sets;
  for (const auto& h : planes) {
    std::vector<int> tight;
    for (int i = 0; i < n; ++i)
      if (std::abs(h.normal.dot(pts[i]) - h.offset) <= tol) tight.push_back(i);
    if (static_cast<int>(tight.size()) < p) continue;
    if (!seen.emplace(tight, static_cast<int>(facets.size())).second) continue;
    facets.push_back(h);
    tight_sets.push_back(std::move(tight));
  }

  std::vector<std::vector<int>> point_facets(n);
  for (std::size_t f = 0; f < tight_sets.size(); ++f)
    for (int i : tight_sets[f]) point_facets[i].push_back(static_cast<int>(f));

  std::vector<int> new_index(n, -1);
  HullResult out;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(point_facets[i].size()) < p) continue;
    std::vector<Vec> normals;
    for (int f : point_facets[i]) normals.push_back(facets[f].normal);
    if (orthonormal_span(normals, p, 1e-7).cols() < p) continue;
    new_index[i] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(pts[i]);
    out.source.push_back(source[i]);
  }
  for (std::size_t f = 0; f < facets.size(); ++f) {
    std::vector<int> verts;
    for (int i : tight_sets[f])
      if (new_index[i] >= 0) verts.push_back(new_index[i]);
    out.facets.push_back(facets[f]);
    out.facet_vertices.push_back(std::move(verts));
  }
  return out;
}

std::vector<Halfspace> brute_force_planes(const std::vector<Vec>& pts, int p, double tol) {
  std::vector<Halfspace> planes;
  const int n = static_cast<int>(pts.size());
  for_each_combination(n, p, [&](const std::vector<int>& idx) {
    Vec normal = hyperplane_normal(pts, idx, p);
    if (normal.size() == 0) return;
    const double b = normal.dot(pts[idx[0]]);
    bool any_above = false, any_below = false;
    for (int i = 0; i < n && !(any_above && any_below); ++i) {
      const double s = normal.dot(pts[i]) - b;
      if (s > tol) any_above = true;
      if (s < -tol) any_below = true;
    }
    if (any_above && any_below) return;
    if (any_above) planes.push_back({-normal, -b});
    else planes.push_back({normal, b});
  });
  return planes;
}

std::vector<Halfspace> incremental_planes(const std::vector<Vec>& pts, int p, double tol) {
  const int n = static_cast<int>(pts.size());

  std::vector<int> simplex{0};
  std::vector<Vec> dirs;
  while (static_cast<int>(simplex.size()) < p + 1) {
    Mat basis = orthonormal_span(dirs, p);
    int best = -1;
    double best_dist = tol;
    for (int i = 0; i < n; ++i) {
      const double dist = project_out(pts[i] - pts[simplex[0]], basis).norm();
      if (dist > best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    if (best < 0) throw std::invalid_argument("convex hull: points do not span the space");
    simplex.push_back(best);
    dirs.push_back(pts[best] - pts[simplex[0]]);
  }
  Vec center = Vec::Zero(p);
  for (int i : simplex) center += pts[i];
  center /= static_cast<double>(p + 1);

  struct Facet {
    std::vector<int> verts;
    Halfspace plane;
    bool alive = true;
  };
  std::vector<Facet> facets;
  auto add_facet = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    Vec normal = hyperplane_normal(pts, verts, p);
    if (normal.size() == 0) return;
    double b = normal.dot(pts[verts[0]]);
    if (normal.dot(center) > b) {
      normal = -normal;
      b = -b;
    }
    facets.push_back({std::move(verts), {normal, b}, true});
  };
  for (int drop = 0; drop <= p; ++drop) {
    std::vector<int> verts;
    for (int k = 0; k <= p; ++k)
      if (k != drop) verts.push_back(simplex[k]);
    add_facet(std::move(verts));
  }

  std::vector<bool> in_simplex(n, false);
  for (int i : simplex) in_simplex[i] = true;
  for (int i = 0; i < n; ++i) {
    if (in_simplex[i]) continue;
    std::map<std::vector<int>, int> ridge_count;
    bool any = false;
    for (auto& f : facets) {
      if (!f.alive) continue;
      if (f.plane.normal.dot(pts[i]) - f.plane.offset <= tol) continue;
      any = true;
      f.alive = false;
      for (int drop = 0; drop < p; ++drop) {
        std::vector<int> ridge;
        ridge.reserve(p - 1);
        for (int k = 0; k < p; ++k)
          if (k != drop) ridge.push_back(f.verts[k]);
        ++ridge_count[ridge];
      }
    }
    if (!any) continue;
    for (auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(i);
      add_facet(std::move(verts));
    }
    if (facets.size() > 4096) {
      std::erase_if(facets, [](const Facet& f) { return !f.alive; });
    }
  }

  std::vector<Halfspace> planes;
  for (const auto& f : facets)
    if (f.alive) planes.push_back(f.plane);
  return planes;
}

std::vector<Halfspace> polygon_planes(const std::vector<Vec>& pts, double tol) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return pts[a][0] < pts[b][0] || (pts[a][0] == pts[b][0] && pts[a][1] < pts[b][1]);
  });
  auto cross = [&](int o, int a, int b) {
    return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
           (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
  };
  std::vector<int> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], order[i]) <= tol) --k;
    hull[k++] = order[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], order[i]) <= tol) --k;
    hull[k++] = order[i];
  }
  hull.resize(k - 1);
  std::vector<Halfspace> planes;
  for (std::size_t e = 0; e < hull.size(); ++e) {
    const Vec& a = pts[hull[e]];
    const Vec& b = pts[hull[(e + 1) % hull.size()]];
    Vec normal(2);
    normal << b[1] - a[1], a[0] - b[0];
    const double len = normal.norm();
    if (len == 0.0) continue;
    normal /= len;
    planes.push_back({normal, normal.dot(a)});
  }
  return planes;
}

Halfspace normalized(const Halfspace& h) {
  const double len = h.normal.norm();
  return {h.normal / len, h.offset / len};
}

bool solve_square(const Mat& a, const Vec& b, Vec& y) {
  const int p = static_cast<int>(a.rows());
  if (p == 2) {
    const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (std::abs(det) < 1e-10) return false;
    y.resize(2);
    y[0] = (b[0] * a(1, 1) - a(0, 1) * b[1]) / det;
    y[1] = (a(0, 0) * b[1] - b[0] * a(1, 0)) / det;
    return true;
  }
  if (p == 3) {
    Eigen::Vector3d r0 = a.row(0).transpose(), r1 = a.row(1).transpose(),
                    r2 = a.row(2).transpose();
    Eigen::Vector3d c12 = r1.cross(r2), c20 = r2.cross(r0), c01 = r0.cross(r1);
    const double det = r0.dot(c12);
    if (std::abs(det) < 1e-10) return false;
    y.resize(3);
    y = (b[0] * c12 + b[1] * c20 + b[2] * c01) / det;
    return true;
  }
  Eigen::PartialPivLU<Mat> lu(a);
  if (std::abs(lu.determinant()) < 1e-10) return false;
  y = lu.solve(b);
  return true;
}

}  // namespace

HullResult convex_hull_full(std::span<const Vec> points) {
  if (points.empty()) throw std::invalid_argument("convex hull: no points");
  const int p = static_cast<int>(points.front().size());
  const double tol = kGeomEps * coordinate_scale(points);
  std::vector<int> source;
  std::vector<Vec> pts = dedupe(points, tol, source);
  if (static_cast<int>(pts.size()) < p + 1)
    throw std::invalid_argument("convex hull: points do not span the space");

  std::vector<Halfspace> planes;
  if (p == 1) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                        [](const Vec& a, const Vec& b) { return a[0] < b[0]; });
    Vec minus(1), plus(1);
    minus << -1.0;
    plus << 1.0;
    planes = {{minus, -(*lo)[0]}, {plus, (*hi)[0]}};
  } else if (p == 2) {
    planes = polygon_planes(pts, tol);
  } else if (binomial_fits(pts.size(), p)) {
    planes = brute_force_planes(pts, p, tol);
  } else {
    planes = incremental_planes(pts, p, tol);
  }
  return finalize(pts, source, planes, p, tol);
}

std::vector<Vec> halfspace_vertices(std::span<const Halfspace> halfspaces, int p) {
  double scale = 1.0;
  std::vector<Halfspace> hs;
  hs.reserve(halfspaces.size());
  for (const auto& h : halfspaces) {
    const double len = h.normal.norm();
    if (len < 1e-12) {
      if (h.offset < -kGeomEps) return {};
      continue;
    }
    hs.push_back(normalized(h));
    scale = std::max(scale, std::abs(hs.back().offset));
  }
  const double tol = kGeomEps * scale;
  const int m = static_cast<int>(hs.size());

  std::vector<Vec> candidates;
  if (p == 1) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& h : hs) {
      if (h.normal[0] > 0) hi = std::min(hi, h.offset / h.normal[0]);
      else lo = std::max(lo, h.offset / h.normal[0]);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw std::invalid_argument("halfspace intersection is unbounded");
    if (lo > hi + tol) return {};
    Vec a(1), b(1);
    a << lo;
    b << hi;
    candidates.push_back(a);
    if (hi - lo > tol) candidates.push_back(b);
    return candidates;
  }

  Mat a(p, p);
  Vec rhs(p), y(p);
  for_each_combination(m, p, [&](const std::vector<int>& idx) {
    for (int r = 0; r < p; ++r) {
      a.row(r) = hs[idx[r]].normal.transpose();
      rhs[r] = hs[idx[r]].offset;
    }
    if (!solve_square(a, rhs, y)) return;
    const double ytol = tol * std::max(1.0, y.cwiseAbs().maxCoeff());
    for (const auto& h : hs)
      if (h.normal.dot(y) > h.offset + ytol) return;
    for (const auto& c : candidates)
      if ((c - y).cwiseAbs().maxCoeff() <= ytol) return;
    candidates.push_back(y);
  });
  return candidates;
}

HullResult facets_from_halfspaces(std::vector<Vec> vertices,
                                  std::span<const Halfspace> halfspaces) {
  HullResult out;
  if (vertices.empty()) return out;
  const int p = static_cast<int>(vertices.front().size());
  const double tol = kGeomEps * coordinate_scale(vertices);
  std::map<std::vector<int>, int> seen;
  for (const auto& raw : halfspaces) {
    if (raw.normal.norm() < 1e-12) continue;
    Halfspace h = normalized(raw);
    std::vector<int> tight;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
      if (std::abs(h.normal.dot(vertices[i]) - h.offset) <= tol) tight.push_back(i);
    if (static_cast<int>(tight.size()) < p) continue;
    if (seen.count(tight)) continue;
    if (affine_rank(vertices, tight) != p - 1) continue;
    seen.emplace(tight, 0);
    out.facets.push_back(h);
    out.facet_vertices.push_back(std::move(tight));
  }
  out.source.resize(vertices.size());
  std::iota(out.source.begin(), out.source.end(), 0);
  out.vertices = std::move(vertices);
  return out;
}

}  // namespace areakin
