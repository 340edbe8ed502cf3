#pragma once

#include <span>
#include <vector>

#include "areakin/types.hpp"

namespace areakin {

/// Closed halfspace {x : <normal, x> <= offset}.
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

/// Full-dimensional convex hull in R^p: extreme points, facet hyperplanes
/// with unit outward normals, and the vertex indices on each facet.
struct HullResult {
  std::vector<Vec> vertices;
  std::vector<Halfspace> facets;
  std::vector<std::vector<int>> facet_vertices;  // sorted
  std::vector<int> source;  // index of each vertex in the input point list
};

/// Hull of points spanning R^p (p = point dimension, p >= 1). Vertices keep
/// the order of their first occurrence in `points`.
HullResult convex_hull_full(std::span<const Vec> points);

/// Vertices of {y in R^p : <a_i, y> <= b_i}. The halfspace set must describe a
/// bounded set. Points are deduplicated within the geometric tolerance.
std::vector<Vec> halfspace_vertices(std::span<const Halfspace> halfspaces, int p);

/// Facets of a full-dimensional polytope given its vertices and a
/// halfspace description: keeps the halfspaces whose tight vertex set has
/// affine rank p-1, one per distinct vertex set.
HullResult facets_from_halfspaces(std::vector<Vec> vertices,
                                  std::span<const Halfspace> halfspaces);

}  // namespace areakin
