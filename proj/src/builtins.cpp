#include "areakin/builtins.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "areakin/polytope_io.hpp"
#include "areakin/random.hpp"

namespace areakin {

namespace {

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number in builtin parameters: " + item);
    }
    if (used != item.size()) throw std::invalid_argument("bad number in builtin parameters: " + item);
    out.push_back(x);
  }
  return out;
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": " + text);
  }
  if (used != text.size()) throw std::invalid_argument("bad " + what + ": " + text);
  return v;
}

ConvexPolytope make_box(const std::vector<double>& sides) {
  const int d = static_cast<int>(sides.size());
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vec x(d);
    for (int i = 0; i < d; ++i) x[i] = (mask >> i & 1) ? sides[i] : 0.0;
    pts.push_back(x);
  }
  return ConvexPolytope::from_points(pts);
}

double simplex_volume(const std::vector<Vec>& pts) {
  const int d = static_cast<int>(pts.front().size());
  Mat m(d, d);
  for (int i = 0; i < d; ++i) m.col(i) = pts[i + 1] - pts[0];
  return std::abs(m.determinant()) / std::tgamma(d + 1.0);
}

// Fibonacci lattice on S^2; uniform random points in other dimensions.
std::vector<Vec> sphere_points(int d, std::uint64_t n) {
  std::vector<Vec> pts;
  if (d == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::uint64_t i = 0; i < n; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(n);
      const double r = std::sqrt(1.0 - z * z);
      const double t = golden * static_cast<double>(i);
      Vec x(3);
      x << r * std::cos(t), r * std::sin(t), z;
      pts.push_back(x);
    }
  } else {
    Rng rng(derive_seed(n, 0xba11));
    for (std::uint64_t i = 0; i < n; ++i) pts.push_back(rng.unit_vec(d));
  }
  return pts;
}

}  // namespace

std::vector<BuiltinInfo> list_builtins() {
  return {
      {"cube", "", "unit cube [0,1]^d"},
      {"box", "a,b,...", "box [0,a]x[0,b]x...; the number of sides sets d"},
      {"simplex", "", "conv{0, e_1, ..., e_d}"},
      {"random-simplex", "seed", "d+1 seeded uniform points of [0,1]^d (volume >= 1e-3)"},
      {"ball-approx", "n", "hull of n points on the unit sphere (Fibonacci lattice for d = 3)"},
  };
}

ConvexPolytope make_builtin(const std::string& spec, int d) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("builtin: unsupported dimension");

  if (name == "cube") {
    if (!args.empty()) throw std::invalid_argument("cube takes no parameters");
    return make_box(std::vector<double>(d, 1.0));
  }
  if (name == "box") {
    std::vector<double> sides = parse_numbers(args);
    if (static_cast<int>(sides.size()) != d)
      throw std::invalid_argument("box: number of sides must equal d");
    for (double s : sides)
      if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("box: sides must be positive");
    return make_box(sides);
  }
  if (name == "simplex") {
    if (!args.empty()) throw std::invalid_argument("simplex takes no parameters");
    std::vector<Vec> pts{Vec::Zero(d)};
    for (int i = 0; i < d; ++i) pts.push_back(Vec::Unit(d, i));
    return ConvexPolytope::from_points(pts);
  }
  if (name == "random-simplex") {
    const std::uint64_t seed = parse_count(args, "random-simplex seed");
    Rng rng(derive_seed(seed, 0x51e7));
    for (;;) {
      std::vector<Vec> pts;
      for (int i = 0; i <= d; ++i) {
        Vec x(d);
        for (int k = 0; k < d; ++k) x[k] = rng.uniform();
        pts.push_back(x);
      }
      if (simplex_volume(pts) >= 1e-3) return ConvexPolytope::from_points(pts);
    }
  }
  if (name == "ball-approx") {
    const std::uint64_t n = parse_count(args, "ball-approx point count");
    if (n < static_cast<std::uint64_t>(d + 1) || n > 100000)
      throw std::invalid_argument("ball-approx: point count out of range");
    return ConvexPolytope::from_points(sphere_points(d, n));
  }
  throw std::invalid_argument("unknown builtin body: " + spec);
}

ConvexPolytope load_body(const std::string& spec, int d) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) return make_builtin(spec.substr(prefix.size()), d);
  ConvexPolytope P = read_polytope_file(spec);
  if (P.ambient_dim() != d)
    throw std::invalid_argument("body file dimension does not match --d");
  return P;
}

}  // namespace areakin
