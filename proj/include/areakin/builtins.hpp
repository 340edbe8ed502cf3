#pragma once

#include <string>
#include <vector>

#include "areakin/polytope.hpp"

namespace areakin {

struct BuiltinInfo {
  std::string name;
  std::string parameters;
  std::string description;
};

/// Catalog of named test bodies.
std::vector<BuiltinInfo> list_builtins();

/// Builds a named body in R^d: "cube", "box:a,b,...", "simplex",
/// "random-simplex:seed", "ball-approx:n". A box fixes d by its side count.
ConvexPolytope make_builtin(const std::string& spec, int d);

/// "builtin:<name>" or a path to a polytope JSON file.
ConvexPolytope load_body(const std::string& spec, int d);

}  // namespace areakin
