#include "areakin/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace areakin {

namespace {

// JSON has no infinity; non-finite numbers are written as strings.
nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

void IdentityReport::score(double threshold) {
  z = z_score(lhs.value, lhs.std_error, rhs.value, rhs.std_error);
  pass = std::isfinite(lhs.value) && std::isfinite(rhs.value) && z <= threshold;
}

void IdentityReport::score_at_least(double threshold) {
  const double se = std::sqrt(lhs.std_error * lhs.std_error + rhs.std_error * rhs.std_error);
  const double deficit = rhs.value - lhs.value;
  if (deficit <= 0.0) z = 0.0;
  else z = se > 0.0 ? deficit / se : std::numeric_limits<double>::infinity();
  pass = z <= threshold;
}

bool RunReport::pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const IdentityReport& r) { return r.pass; });
}

std::string RunReport::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["seed"] = seed;
  j["body_hash"] = body_hash;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json row;
    row["identity"] = r.identity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) {
      if (std::isfinite(v) && v == std::round(v) && std::abs(v) < 1e15)
        params[k] = static_cast<std::int64_t>(v);
      else
        params[k] = number(v);
    }
    row["params"] = params;
    row["f"] = r.f;
    row["lhs"] = number(r.lhs.value);
    row["stderr"] = number(r.lhs.std_error);
    row["rhs"] = number(r.rhs.value);
    row["rhs_stderr"] = number(r.rhs.std_error);
    row["z"] = number(r.z);
    row["pass"] = r.pass;
    row["samples"] = r.samples;
    row["seed"] = r.seed;
    if (include_timing) row["wall_time_s"] = r.wall_time_s;
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  j["results"] = std::move(rows);
  j["pass"] = pass();
  return j.dump(2);
}

std::string summary_line(const IdentityReport& r) {
  std::string params;
  for (const auto& [k, v] : r.params) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%s=%g", params.empty() ? "" : ",", k.c_str(), v);
    params += buf;
  }
  char line[512];
  std::snprintf(line, sizeof line, "%s %-22s [%s] f=%s lhs=%.8g+-%.2g rhs=%.8g+-%.2g z=%.2f",
                r.pass ? "PASS" : "FAIL", r.identity.c_str(), params.c_str(), r.f.c_str(),
                r.lhs.value, r.lhs.std_error, r.rhs.value, r.rhs.std_error, r.z);
  return line;
}

}  // namespace areakin
