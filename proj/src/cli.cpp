#include "areakin/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include "areakin/builtins.hpp"
#include "areakin/grassmann.hpp"
#include "areakin/kinematics.hpp"
#include "areakin/orthogonality.hpp"
#include "areakin/polytope.hpp"
#include "areakin/random.hpp"

namespace areakin {

namespace {

enum Stream : std::uint64_t { kOrthogonality = 72 };

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

struct Runner {
  const RunConfig& cfg;
  std::ostream* log;
  RunReport report;
  std::uint64_t check_index = 0;

  McOptions mc(std::uint64_t samples) const {
    McOptions o;
    o.samples = samples;
    o.seed = cfg.seed;
    o.rhs_cone_samples = cfg.cone_samples;
    o.threshold = cfg.threshold;
    o.parallel.workers = cfg.workers;
    return o;
  }

  // Fresh generator for the next randomized check, independent of how many
  // draws earlier checks consumed.
  Rng next_rng() { return Rng(derive_seed(cfg.seed, kOrthogonality, check_index++)); }

  void add(std::vector<IdentityReport> rs) {
    for (auto& r : rs) {
      const bool box_too_small = r.identity == "pkf" && !r.note.empty();
      r.pass = !box_too_small && std::isfinite(r.lhs.value) && std::isfinite(r.rhs.value) &&
               r.z <= cfg.threshold;
      if (log) *log << summary_line(r) << '\n';
      report.results.push_back(std::move(r));
    }
  }
  void add(IdentityReport r) { add(std::vector<IdentityReport>{std::move(r)}); }

  void hash_body(const ConvexPolytope& P) {
    report.body_hash = report.body_hash * 1099511628211ULL ^ polytope_hash(P);
  }

  std::vector<TestFunction> functions(int d, const std::vector<int>& degrees, int axes) const {
    return zonal_test_functions(d, degrees, axes, cfg.seed);
  }

  void crofton(const std::string& body, int d, int j, int q, const std::vector<int>& degrees,
               int axes, std::uint64_t samples) {
    require(1 <= j && j < q && q <= d, "crofton needs 1 <= j < q <= d");
    const ConvexPolytope K = load_body(body, d);
    hash_body(K);
    add(crofton_check(K, j, q, functions(d, degrees, axes), mc(samples)));
  }

  void inversion(const std::string& body, int d, int j, int q, const std::vector<int>& degrees,
                 int axes, std::uint64_t samples) {
    require(1 <= j && j < q && q <= d, "inversion needs 1 <= j < q <= d");
    const ConvexPolytope K = load_body(body, d);
    hash_body(K);
    add(inversion_corollary_check(K, j, q, functions(d, degrees, axes), mc(samples)));
  }

  void pkf(const std::string& bk, const std::string& bm, int d, int j,
           const std::vector<int>& degrees, int axes, std::uint64_t samples) {
    require(1 <= j && j <= d - 1, "pkf needs 1 <= j <= d-1");
    const ConvexPolytope K = load_body(bk, d);
    const ConvexPolytope M = load_body(bm, d);
    hash_body(K);
    hash_body(M);
    add(pkf_check(K, M, j, functions(d, degrees, axes), mc(samples), cfg.half_width));
  }

  void translative(const std::string& bk, const std::string& bm, int d,
                   const std::vector<int>& degrees, int axes, std::uint64_t samples) {
    const ConvexPolytope K = load_body(bk, d);
    const ConvexPolytope M = load_body(bm, d);
    hash_body(K);
    hash_body(M);
    add(translative_check(K, M, functions(d, degrees, axes), mc(samples)));
  }

  void meansection(const std::string& body, int d, int k, const std::vector<double>& dir,
                   const std::vector<int>& degrees, int axes, std::uint64_t samples) {
    require(2 <= k && k <= d, "meansection needs 2 <= k <= d");
    Vec u = Vec::Unit(d, 0);
    if (!dir.empty()) {
      require(static_cast<int>(dir.size()) == d, "direction must have d components");
      for (int i = 0; i < d; ++i) u[i] = dir[i];
      require(u.norm() > 0.0, "direction must be nonzero");
    }
    const ConvexPolytope K = load_body(body, d);
    hash_body(K);
    add(mean_section_check(K, k, u, functions(d, degrees, axes), mc(samples)));
  }

  // Test function of degree s with a random axis (the constant for s = 0).
  HarmonicSpectrum random_zonal(int d, int s, Rng& rng) const {
    HarmonicSpectrum f(d);
    f.add_zonal(s, s == 0 ? Vec(Vec::Unit(d, 0)) : rng.unit_vec(d));
    return f;
  }

  void koldobsky(int d, int k, const std::vector<int>& degrees, std::uint64_t samples) {
    require(1 <= k && k <= d - 1, "koldobsky needs 1 <= k <= d-1");
    for (int s : degrees) require(s % 2 == 0, "koldobsky needs even degrees");
    for (int s : degrees)
      for (int r = 0; r < cfg.repeats; ++r) {
        Rng rng = next_rng();
        const HarmonicSpectrum f = random_zonal(d, s, rng);
        add(koldobsky_check(d, k, f, sample_subspace(d, k, rng).basis, samples, rng));
      }
  }

  void even_orth(int d, int q, int j, const std::vector<int>& degrees, std::uint64_t samples) {
    require(1 <= j && j < q && q < d, "even-orth needs 1 <= j < q < d");
    for (int s : degrees) require(s % 2 == 0, "even-orth needs even degrees");
    for (int s : degrees)
      for (int r = 0; r < cfg.repeats; ++r) {
        Rng rng = next_rng();
        const HarmonicSpectrum g = random_zonal(d, s, rng);
        add(even_orthogonality_check(d, q, j, g, sample_subspace(d, q - j, rng).basis, samples,
                                     rng));
      }
  }

  void asymm(int d, int j, const std::vector<int>& degrees, std::uint64_t samples) {
    require(1 <= j && j <= d - 1, "asymm-orth needs 1 <= j <= d-1");
    for (int s : degrees) require(s != 1, "asymm-orth needs centered functions (no degree 1)");
    for (int s : degrees)
      for (int r = 0; r < cfg.repeats; ++r) {
        const std::uint64_t index = check_index;
        Rng rng = next_rng();
        const HarmonicSpectrum f = random_zonal(d, s, rng);
        const Vec v = rng.unit_vec(d);
        add(asymm_orthogonality_check(d, j, f, v, samples, derive_seed(cfg.seed, index),
                                      {cfg.workers}));
        if (s % 2 == 1)
          add(asymm_centeredness_check(d, j, f, rng.unit_vec(d), samples,
                                       derive_seed(cfg.seed, index, 1), {cfg.workers}));
      }
  }

  void selftest(const std::vector<int>& exponents, std::uint64_t samples) {
    for (int n : {2, 3, 4})
      for (int p : exponents) {
        Rng rng = next_rng();
        add(sph_integration_selftest(n + 1, 1, p, samples, rng));
      }
  }

  void suite() {
    const std::uint64_t flats = cfg.quick ? 20000 : cfg.samples;
    const std::uint64_t points = cfg.quick ? 20000 : cfg.samples;
    const std::uint64_t asymm_samples = cfg.quick ? 200000 : 10 * cfg.samples;
    selftest({0, 1, 2}, points);
    crofton("builtin:box:2,1,1", 3, 1, 2, {0, 1, 2, 3, 4}, 1, flats);
    crofton("builtin:cube", 4, 2, 3, {0, 2, 3}, 1, flats);
    inversion("builtin:box:2,1,1", 3, 1, 2, {0, 2}, 1, flats);
    pkf("builtin:cube", "builtin:cube", 3, 2, {0, 2}, 1, flats);
    translative("builtin:cube", "builtin:cube", 3, {0, 2}, 1, flats);
    meansection("builtin:box:2,1,1", 3, 2, {}, {2}, 1, flats);
    koldobsky(3, 1, {0, 2}, points);
    koldobsky(3, 2, {0, 2}, points);
    even_orth(3, 2, 1, {0, 2}, points);
    even_orth(4, 3, 1, {0, 2}, points);
    asymm(3, 1, {0, 3}, asymm_samples);
  }
};

const std::vector<std::string>& identities() {
  static const std::vector<std::string> names{"crofton",   "pkf",       "translative",
                                              "meansection", "koldobsky", "even-orth",
                                              "asymm-orth", "selftest",  "suite"};
  return names;
}

}  // namespace

RunReport execute(const RunConfig& cfg, std::ostream* log) {
  const auto& ids = identities();
  require(std::find(ids.begin(), ids.end(), cfg.identity) != ids.end(),
          "unknown identity '" + cfg.identity + "'");
  require(3 <= cfg.d && cfg.d <= kMaxDim, "d must be in 3..8");
  require(cfg.samples >= 2, "samples must be >= 2");
  require(cfg.cone_samples >= 2, "cone-samples must be >= 2");
  require(cfg.threshold > 0.0, "threshold must be positive");
  require(cfg.axes >= 1, "axes must be >= 1");
  require(cfg.repeats >= 1, "repeats must be >= 1");
  require(cfg.workers >= 0, "workers must be >= 0");
  require(!cfg.degrees.empty(), "at least one degree is required");
  for (int s : cfg.degrees) require(0 <= s && s <= 40, "degrees must be in 0..40");

  Runner run{cfg, log, {}, 0};
  run.report.command = cfg.identity;
  run.report.seed = cfg.seed;
  const std::string& bm = cfg.body_m.empty() ? cfg.body : cfg.body_m;
  const auto& id = cfg.identity;
  if (id == "crofton") {
    run.crofton(cfg.body, cfg.d, cfg.j, cfg.q, cfg.degrees, cfg.axes, cfg.samples);
  } else if (id == "pkf") {
    run.pkf(cfg.body, bm, cfg.d, cfg.j, cfg.degrees, cfg.axes, cfg.samples);
  } else if (id == "translative") {
    run.translative(cfg.body, bm, cfg.d, cfg.degrees, cfg.axes, cfg.samples);
  } else if (id == "meansection") {
    run.meansection(cfg.body, cfg.d, cfg.k, cfg.direction, cfg.degrees, cfg.axes, cfg.samples);
  } else if (id == "koldobsky") {
    run.koldobsky(cfg.d, cfg.k, cfg.degrees, cfg.samples);
  } else if (id == "even-orth") {
    run.even_orth(cfg.d, cfg.q, cfg.j, cfg.degrees, cfg.samples);
  } else if (id == "asymm-orth") {
    run.asymm(cfg.d, cfg.j, cfg.degrees, cfg.samples);
  } else if (id == "selftest") {
    require(cfg.p >= -1, "p must be >= 0");
    run.selftest(cfg.p < 0 ? std::vector<int>{0, 1, 2} : std::vector<int>{cfg.p}, cfg.samples);
  } else {
    run.suite();
  }
  return std::move(run.report);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunReport report;
  try {
    report = execute(cfg, &out);
  } catch (const std::logic_error& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::runtime_error& e) {
    err << "input error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "cannot write report to " << cfg.output << '\n';
      return kExitConfig;
    }
    file << report.to_json(cfg.timing) << '\n';
  }
  const bool ok = report.pass();
  out << (ok ? "all " : "FAILED: ") << report.results.size() << " results, threshold "
      << cfg.threshold << '\n';
  return ok ? kExitPass : kExitFail;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monte Carlo verification of kinematic and orthogonality identities for area "
               "measures of convex polytopes",
               "areakin"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* check = app.add_subcommand("check", "Run one identity check or the suite");
  check->add_option("identity", cfg.identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember(identities()));
  check->add_option("--d", cfg.d, "Ambient dimension");
  check->add_option("--j", cfg.j, "Area measure order / index j");
  check->add_option("--q", cfg.q, "Flat dimension q");
  check->add_option("--k", cfg.k, "Subspace dimension k");
  check->add_option("--p", cfg.p, "Selftest exponent (default: 0,1,2)");
  check->add_option("--body,--body-k", cfg.body, "Body K: builtin:<name> or JSON path");
  check->add_option("--body-m", cfg.body_m, "Body M (defaults to K)");
  check->add_option("--degrees", cfg.degrees, "Test function degrees")->delimiter(',');
  check->add_option("--axes", cfg.axes, "Random axes per nonzero degree");
  check->add_option("--direction", cfg.direction, "Mean section direction")->delimiter(',');
  check->add_option("--repeats", cfg.repeats, "Random subspaces or poles per test function");
  check->add_option("--half-width", cfg.half_width, "PKF translation box half-width");
  check->add_option("--samples", cfg.samples, "Monte Carlo samples");
  check->add_option("--cone-samples", cfg.cone_samples, "Cone samples per piece (right sides)");
  check->add_option("--seed", cfg.seed, "Master seed");
  check->add_option("--threshold", cfg.threshold, "z-score threshold");
  check->add_option("--workers", cfg.workers, "Worker threads (0: hardware concurrency)");
  check->add_option("--output,-o", cfg.output, "Report JSON path");
  check->add_flag("--quick", cfg.quick, "Reduced sample sizes for the suite");
  bool no_timing = false;
  check->add_flag("--no-timing", no_timing, "Omit wall_time_s from the report");

  auto* list = app.add_subcommand("list-builtins", "List builtin bodies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitConfig;
  }

  if (list->parsed()) {
    for (const auto& b : list_builtins())
      out << b.name << (b.parameters.empty() ? "" : ":" + b.parameters) << "  " << b.description
          << '\n';
    return kExitPass;
  }
  cfg.timing = !no_timing;
  return run(cfg, out, err);
}

}  // namespace areakin
