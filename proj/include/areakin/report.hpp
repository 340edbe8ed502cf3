#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "areakin/estimate.hpp"

namespace areakin {

/// Outcome of one two-sided identity evaluation.
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, double>> params;
  std::string f;
  McEstimate lhs;
  McEstimate rhs;  // std_error 0 when exact
  double z = 0.0;
  bool pass = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
  std::string note;

  /// z = |lhs - rhs| / combined stderr; pass iff z <= threshold.
  void score(double threshold);
  /// One-sided check lhs >= rhs: z counts standard errors below rhs.
  void score_at_least(double threshold);
};

/// Report file contents: {"schema": 1, "command", "seed", "body_hash",
/// "results": [...], "pass"}.
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::uint64_t body_hash = 0;
  std::vector<IdentityReport> results;

  bool pass() const;
  std::string to_json(bool include_timing = true) const;
};

/// One line per result for terminal output.
std::string summary_line(const IdentityReport& r);

}  // namespace areakin
