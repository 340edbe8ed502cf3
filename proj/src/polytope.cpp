#include "areakin/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "areakin/linalg.hpp"

namespace areakin {

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Mat span_of(const std::vector<Vec>& verts, const std::vector<int>& idx, int d) {
  std::vector<Vec> diffs;
  diffs.reserve(idx.size());
  for (std::size_t k = 1; k < idx.size(); ++k) diffs.push_back(verts[idx[k]] - verts[idx[0]]);
  return orthonormal_span(diffs, d);
}

// Face lattice by descending from facets: the (k-1)-faces of a k-face F are
// the sets F cap G of full rank, G ranging over facets not containing F.
std::vector<std::vector<Face>> build_lattice(const std::vector<Vec>& verts, int p,
                                             const std::vector<std::vector<int>>& facet_vertices) {
  const int n = static_cast<int>(verts.size());
  std::vector<std::vector<Face>> faces(p + 1);
  std::vector<std::vector<int>> incidence(n);
  for (std::size_t g = 0; g < facet_vertices.size(); ++g)
    for (int v : facet_vertices[g]) incidence[v].push_back(static_cast<int>(g));

  for (int v = 0; v < n; ++v) faces[0].push_back({0, {v}, incidence[v], {}, 1.0});
  if (p == 0) return faces;

  Face top{p, {}, {}, {}, 0.0};
  for (int v = 0; v < n; ++v) top.vertices.push_back(v);
  if (p == 1) {
    top.subfaces = top.vertices;
  } else {
    for (std::size_t g = 0; g < facet_vertices.size(); ++g) {
      faces[p - 1].push_back({p - 1, facet_vertices[g], {static_cast<int>(g)}, {}, 0.0});
      top.subfaces.push_back(static_cast<int>(g));
    }
  }
  faces[p].push_back(std::move(top));

  for (int k = p - 1; k >= 1; --k) {
    if (k == 1) {
      for (auto& edge : faces[1]) edge.subfaces = edge.vertices;
      break;
    }
    std::map<std::vector<int>, int> index;
    for (auto& F : faces[k]) {
      std::vector<int> candidates;
      for (int v : F.vertices)
        candidates.insert(candidates.end(), incidence[v].begin(), incidence[v].end());
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (int g : candidates) {
        if (std::binary_search(F.facets.begin(), F.facets.end(), g)) continue;
        std::vector<int> s = sorted_intersection(F.vertices, facet_vertices[g]);
        if (static_cast<int>(s.size()) < k) continue;
        auto it = index.find(s);
        int child;
        if (it != index.end()) {
          child = it->second;
        } else {
          if (affine_rank(verts, s) != k - 1) {
            index.emplace(s, -1);
            continue;
          }
          std::vector<int> containing = incidence[s[0]];
          for (std::size_t i = 1; i < s.size(); ++i)
            containing = sorted_intersection(containing, incidence[s[i]]);
          child = static_cast<int>(faces[k - 1].size());
          index.emplace(s, child);
          faces[k - 1].push_back({k - 1, s, std::move(containing), {}, 0.0});
        }
        if (child < 0) continue;
        if (std::find(F.subfaces.begin(), F.subfaces.end(), child) == F.subfaces.end())
          F.subfaces.push_back(child);
      }
    }
  }
  return faces;
}

// Pyramid decomposition over the subfaces, from a relative interior point.
void compute_volumes(std::vector<std::vector<Face>>& faces, const std::vector<Vec>& verts,
                     int d) {
  const int p = static_cast<int>(faces.size()) - 1;
  if (p >= 1)
    for (auto& e : faces[1]) e.volume = (verts[e.vertices[1]] - verts[e.vertices[0]]).norm();
  std::vector<Mat> bases;
  for (int k = 2; k <= p; ++k) {
    const auto& lower = faces[k - 1];
    bases.assign(lower.size(), Mat());
    std::vector<bool> have(lower.size(), false);
    for (auto& F : faces[k]) {
      Vec c = Vec::Zero(d);
      for (int v : F.vertices) c += verts[v];
      c /= static_cast<double>(F.vertices.size());
      double vol = 0.0;
      for (int s : F.subfaces) {
        if (!have[s]) {
          bases[s] = span_of(verts, lower[s].vertices, d);
          have[s] = true;
        }
        const double h = project_out(c - verts[lower[s].vertices[0]], bases[s]).norm();
        vol += h * lower[s].volume;
      }
      F.volume = vol / k;
    }
  }
}

}  // namespace

ConvexPolytope assemble_polytope(int d, Vec origin, Mat basis, std::vector<Vec> vertices,
                                 std::vector<Halfspace> facets,
                                 std::vector<std::vector<int>> facet_vertices) {
  ConvexPolytope P;
  P.d_ = d;
  const int p = static_cast<int>(basis.cols());
  P.faces_ = build_lattice(vertices, p, facet_vertices);
  compute_volumes(P.faces_, vertices, d);
  P.origin_ = std::move(origin);
  P.basis_ = std::move(basis);
  P.center_ = Vec::Zero(d);
  for (const auto& v : vertices) P.center_ += v;
  P.center_ /= static_cast<double>(vertices.size());
  for (const auto& v : vertices) P.radius_ = std::max(P.radius_, (v - P.center_).norm());
  P.vertices_ = std::move(vertices);
  P.facets_ = std::move(facets);
  return P;
}

ConvexPolytope ConvexPolytope::empty(int d) {
  ConvexPolytope P;
  P.d_ = d;
  P.origin_ = Vec::Zero(d);
  P.basis_ = Mat(d, 0);
  P.center_ = Vec::Zero(d);
  return P;
}

ConvexPolytope ConvexPolytope::from_points(std::span<const Vec> points) {
  if (points.empty()) throw std::invalid_argument("polytope: no points");
  const int d = static_cast<int>(points.front().size());
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("polytope: unsupported dimension");
  for (const auto& x : points) {
    if (x.size() != d) throw std::invalid_argument("polytope: inconsistent point dimension");
    if (!x.allFinite()) throw std::invalid_argument("polytope: non-finite coordinate");
  }
  AffineHull aff = affine_hull(points);
  const int p = aff.dim();
  if (p == 0) {
    return assemble_polytope(d, points.front(), Mat(d, 0), {points.front()}, {}, {});
  }
  std::vector<Vec> local;
  local.reserve(points.size());
  for (const auto& x : points) local.push_back(aff.basis.transpose() * (x - aff.origin));
  HullResult hull = convex_hull_full(local);

  std::vector<Vec> verts;
  verts.reserve(hull.source.size());
  for (int s : hull.source) verts.push_back(points[s]);
  std::vector<Halfspace> facets;
  facets.reserve(hull.facets.size());
  for (const auto& h : hull.facets) {
    Vec normal = aff.basis * h.normal;
    facets.push_back({normal, h.offset + normal.dot(aff.origin)});
  }
  return assemble_polytope(d, aff.origin, aff.basis, std::move(verts), std::move(facets),
                           std::move(hull.facet_vertices));
}

Mat ConvexPolytope::normal_space() const { return orthogonal_complement(basis_, d_); }

const std::vector<Face>& ConvexPolytope::faces(int k) const {
  static const std::vector<Face> kNone;
  if (k < 0 || k >= static_cast<int>(faces_.size())) return kNone;
  return faces_[k];
}

std::vector<Halfspace> ConvexPolytope::halfspaces() const {
  std::vector<Halfspace> hs = facets_;
  const Mat perp = normal_space();
  for (int c = 0; c < perp.cols(); ++c) {
    const Vec w = perp.col(c);
    const double b = w.dot(origin_);
    hs.push_back({w, b});
    hs.push_back({-w, -b});
  }
  return hs;
}

double ConvexPolytope::volume() const {
  if (is_empty()) return 0.0;
  return faces_.back().front().volume;
}

ConvexPolytope ConvexPolytope::transformed(const Mat& rot, const Vec& t) const {
  ConvexPolytope P = *this;
  if (is_empty()) return P;
  P.origin_ = rot * origin_ + t;
  P.basis_ = rot * basis_;
  P.center_ = rot * center_ + t;
  for (auto& v : P.vertices_) v = rot * v + t;
  for (auto& h : P.facets_) {
    h.normal = rot * h.normal;
    h.offset += h.normal.dot(t);
  }
  return P;
}

ConvexPolytope ConvexPolytope::reflected() const {
  return transformed(-Mat::Identity(d_, d_), Vec::Zero(d_));
}

ConvexPolytope ConvexPolytope::translated(const Vec& t) const {
  return transformed(Mat::Identity(d_, d_), t);
}

bool ConvexPolytope::contains(const Vec& x, double tol) const {
  if (is_empty()) return false;
  for (const auto& h : facets_)
    if (h.normal.dot(x) > h.offset + tol) return false;
  return project_out(x - origin_, basis_).norm() <= tol;
}

ConvexPolytope intersect_halfspaces(int d, std::span<const Halfspace> halfspaces,
                                    const Flat* flat) {
  const int q = flat ? flat->dim() : d;
  const Vec x0 = flat ? flat->offset : Vec(Vec::Zero(d));
  const Mat B = flat ? flat->basis : Mat(Mat::Identity(d, d));

  std::vector<Halfspace> local;
  local.reserve(halfspaces.size());
  for (const auto& h : halfspaces)
    local.push_back({B.transpose() * h.normal, h.offset - h.normal.dot(x0)});

  if (q == 0) {
    for (const auto& h : local)
      if (h.offset < -kGeomEps) return ConvexPolytope::empty(d);
    return ConvexPolytope::from_points(std::span<const Vec>(&x0, 1));
  }

  std::vector<Vec> verts = halfspace_vertices(local, q);
  if (verts.empty()) return ConvexPolytope::empty(d);

  std::vector<Vec> ambient;
  ambient.reserve(verts.size());
  for (const auto& y : verts) ambient.push_back(x0 + B * y);

  if (static_cast<int>(verts.size()) <= q || affine_hull(verts).dim() < q)
    return ConvexPolytope::from_points(ambient);

  HullResult hull = facets_from_halfspaces(std::move(verts), local);
  std::vector<Halfspace> facets;
  facets.reserve(hull.facets.size());
  for (const auto& h : hull.facets) {
    Vec normal = B * h.normal;
    facets.push_back({normal, h.offset + normal.dot(x0)});
  }
  return assemble_polytope(d, x0, B, std::move(ambient), std::move(facets),
                           std::move(hull.facet_vertices));
}

ConvexPolytope intersect_flat(const ConvexPolytope& K, const Flat& flat) {
  const int d = K.ambient_dim();
  if (K.is_empty()) return ConvexPolytope::empty(d);
  const double dist = project_out(K.center() - flat.offset, flat.basis).norm();
  if (dist > K.circumradius() + kGeomEps) return ConvexPolytope::empty(d);
  const std::vector<Halfspace> hs = K.halfspaces();
  return intersect_halfspaces(d, hs, &flat);
}

ConvexPolytope intersect_moved(const ConvexPolytope& K, const Mat& rot, const Vec& t,
                               const ConvexPolytope& M) {
  const int d = K.ambient_dim();
  if (K.is_empty() || M.is_empty()) return ConvexPolytope::empty(d);
  const Vec moved_center = rot * M.center() + t;
  if ((moved_center - K.center()).norm() > K.circumradius() + M.circumradius() + kGeomEps)
    return ConvexPolytope::empty(d);

  std::vector<Vec> moved;
  moved.reserve(M.vertices().size());
  for (const auto& v : M.vertices()) moved.push_back(rot * v + t);
  for (const auto& h : K.facets()) {
    bool separated = true;
    for (const auto& v : moved)
      if (h.normal.dot(v) <= h.offset + kGeomEps) {
        separated = false;
        break;
      }
    if (separated) return ConvexPolytope::empty(d);
  }

  std::vector<Halfspace> hs = K.halfspaces();
  for (const auto& h : M.halfspaces()) {
    Vec normal = rot * h.normal;
    hs.push_back({normal, h.offset + normal.dot(t)});
  }
  return intersect_halfspaces(d, hs);
}

double support_function(const ConvexPolytope& P, const Vec& u) {
  if (P.is_empty()) throw std::invalid_argument("support function of an empty polytope");
  double h = -std::numeric_limits<double>::infinity();
  for (const auto& v : P.vertices()) h = std::max(h, v.dot(u));
  return h;
}

Mat face_basis(const ConvexPolytope& P, const Face& F) {
  return span_of(P.vertices(), F.vertices, P.ambient_dim());
}

std::uint64_t polytope_hash(const ConvexPolytope& P) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const void* data, std::size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  const int d = P.ambient_dim();
  mix(&d, sizeof d);
  for (const auto& v : P.vertices())
    for (int i = 0; i < v.size(); ++i) {
      const double x = v[i];
      mix(&x, sizeof x);
    }
  return h;
}

}  // namespace areakin
