#include "areakin/polytope_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace areakin {

std::string polytope_to_json(const ConvexPolytope& P) {
  nlohmann::json j;
  j["d"] = P.ambient_dim();
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : P.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i) row.push_back(v[i]);
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  return j.dump();
}

ConvexPolytope polytope_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("polytope JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("vertices"))
    throw std::invalid_argument("polytope JSON: need fields \"d\" and \"vertices\"");
  if (!j["d"].is_number_integer()) throw std::invalid_argument("polytope JSON: d must be an integer");
  const int d = j["d"].get<int>();
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("polytope JSON: unsupported dimension");
  const auto& rows = j["vertices"];
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("polytope JSON: vertices must be a nonempty array");
  std::vector<Vec> pts;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw std::invalid_argument("polytope JSON: every vertex needs d coordinates");
    Vec x(d);
    for (int i = 0; i < d; ++i) {
      if (!row[i].is_number()) throw std::invalid_argument("polytope JSON: non-numeric coordinate");
      x[i] = row[i].get<double>();
    }
    pts.push_back(x);
  }
  return ConvexPolytope::from_points(pts);
}

void write_polytope_file(const std::string& path, const ConvexPolytope& P) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << polytope_to_json(P) << '\n';
}

ConvexPolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return polytope_from_json(ss.str());
}

}  // namespace areakin
