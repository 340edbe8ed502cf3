#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "areakin/hull.hpp"
#include "areakin/types.hpp"

namespace areakin {

/// Affine subspace offset + span(basis), basis orthonormal (d x q) and
/// offset orthogonal to it.
struct Flat {
  Vec offset;
  Mat basis;
  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Face of a polytope, stored in the polytope's face lattice.
struct Face {
  int dim = 0;
  std::vector<int> vertices;  // indices into ConvexPolytope::vertices(), sorted
  std::vector<int> facets;    // relative facets containing the face, sorted
  std::vector<int> subfaces;  // indices into faces(dim - 1)
  double volume = 0.0;        // dim-dimensional volume (1 for vertices)
};

/// Convex polytope of any dimension p <= d in R^d, with its affine hull,
/// relative facets and full face lattice.
class ConvexPolytope {
 public:
  ConvexPolytope() = default;

  /// Convex hull of finitely many points (any affine dimension).
  static ConvexPolytope from_points(std::span<const Vec> points);
  static ConvexPolytope empty(int d);

  bool is_empty() const { return vertices_.empty(); }
  int ambient_dim() const { return d_; }
  /// Affine dimension; -1 when empty.
  int dim() const { return is_empty() ? -1 : static_cast<int>(basis_.cols()); }

  const std::vector<Vec>& vertices() const { return vertices_; }
  /// Facets relative to the affine hull: unit normals in L(P).
  const std::vector<Halfspace>& facets() const { return facets_; }
  const Vec& hull_origin() const { return origin_; }
  /// Orthonormal basis of L(P), the linear space parallel to aff(P).
  const Mat& hull_basis() const { return basis_; }
  /// Orthonormal basis of L(P)^perp.
  Mat normal_space() const;

  /// Faces of dimension k (empty for k outside 0..dim()). faces(dim()) holds
  /// P itself.
  const std::vector<Face>& faces(int k) const;

  /// Full inequality description in R^d: the relative facets plus a pair of
  /// opposite halfspaces for each direction of L(P)^perp.
  std::vector<Halfspace> halfspaces() const;

  /// dim()-dimensional volume.
  double volume() const;

  ConvexPolytope reflected() const;
  ConvexPolytope translated(const Vec& t) const;
  /// rot * P + t for an orthogonal matrix rot.
  ConvexPolytope transformed(const Mat& rot, const Vec& t) const;

  bool contains(const Vec& x, double tol = 1e-9) const;
  /// Average of the vertices (a relative interior point).
  const Vec& center() const { return center_; }
  /// max |v - center()| over the vertices.
  double circumradius() const { return radius_; }

 private:
  friend ConvexPolytope assemble_polytope(int d, Vec origin, Mat basis,
                                          std::vector<Vec> vertices,
                                          std::vector<Halfspace> facets,
                                          std::vector<std::vector<int>> facet_vertices);

  int d_ = 0;
  Vec origin_;
  Mat basis_;
  std::vector<Vec> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<Face>> faces_;
  Vec center_;
  double radius_ = 0.0;
};

/// Builds a polytope from hull data already computed in ambient coordinates.
ConvexPolytope assemble_polytope(int d, Vec origin, Mat basis, std::vector<Vec> vertices,
                                 std::vector<Halfspace> facets,
                                 std::vector<std::vector<int>> facet_vertices);

/// K cap {x in R^d : <a_i, x> <= b_i} restricted to a flat (the whole space
/// when `flat` is null).
ConvexPolytope intersect_halfspaces(int d, std::span<const Halfspace> halfspaces,
                                    const Flat* flat = nullptr);

ConvexPolytope intersect_flat(const ConvexPolytope& K, const Flat& flat);
/// K cap (rot * M + t).
ConvexPolytope intersect_moved(const ConvexPolytope& K, const Mat& rot, const Vec& t,
                               const ConvexPolytope& M);

double support_function(const ConvexPolytope& P, const Vec& u);

/// Orthonormal basis of the linear space parallel to aff(F).
Mat face_basis(const ConvexPolytope& P, const Face& F);

/// Fingerprint of the vertex list (FNV-1a over the coordinate bits).
std::uint64_t polytope_hash(const ConvexPolytope& P);

}  // namespace areakin
