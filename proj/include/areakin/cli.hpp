#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "areakin/report.hpp"

namespace areakin {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitConfig = 2 };

struct RunConfig {
  std::string identity;  // crofton, pkf, translative, meansection, koldobsky,
                         // even-orth, asymm-orth, selftest, suite
  int d = 3;
  int j = 1;
  int q = 2;
  int k = 2;
  int p = -1;  // selftest exponent; -1 runs the grid 0..2
  std::string body = "builtin:cube";
  std::string body_m;  // second body; defaults to `body`
  std::vector<int> degrees{0};
  int axes = 1;
  std::vector<double> direction;  // meansection; defaults to e_1
  int repeats = 5;                // random H, L or v per test function
  double half_width = 0.0;        // pkf translation box override
  std::uint64_t samples = 100000;
  std::uint64_t cone_samples = 200000;
  std::uint64_t seed = 42;
  double threshold = 4.0;
  int workers = 0;
  bool quick = false;
  bool timing = true;  // include wall_time_s in the report
  std::string output;  // report path; empty writes nothing
};

/// Validates the configuration and runs the selected checks. Throws
/// std::invalid_argument (or another std::logic_error) on configuration
/// errors.
RunReport execute(const RunConfig& config, std::ostream* log = nullptr);

/// execute() plus report output and exit-code mapping: 0 when every result
/// passes, 1 on a statistical failure, 2 on a configuration error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Command-line front end: `check <identity> [flags]` and `list-builtins`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace areakin
