#pragma once

#include <string>

#include "areakin/polytope.hpp"

namespace areakin {

/// {"d": int, "vertices": [[x, ...], ...]} with shortest round-trip decimals.
std::string polytope_to_json(const ConvexPolytope& P);
ConvexPolytope polytope_from_json(const std::string& text);

void write_polytope_file(const std::string& path, const ConvexPolytope& P);
ConvexPolytope read_polytope_file(const std::string& path);

}  // namespace areakin
