#include "areakin/kinematics.hpp"

#include <chrono>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "areakin/constants.hpp"
#include "areakin/grassmann.hpp"

namespace areakin {

namespace {

enum Stream : std::uint64_t {
  kCroftonLhs = 11,
  kCroftonRhs,
  kPkfLhs,
  kPkfRhs,
  kTranslativeLhs,
  kTranslativeRhs,
  kMeanSupportA,
  kMeanSupportB,
  kMeanRelation,
  kAxes,
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::vector<HarmonicSpectrum> spectra(const std::vector<TestFunction>& fs) {
  std::vector<HarmonicSpectrum> out;
  out.reserve(fs.size());
  for (const auto& t : fs) out.push_back(t.f);
  return out;
}

// Adds one unbiased draw of w * <f_i, S> for each f_i to acc.
void accumulate_pairings(const SphericalAreaMeasure& S, std::span<const HarmonicSpectrum> fs,
                         Rng& rng, double weight, std::vector<double>& acc) {
  for_each_cone_sample(S, 1, rng, [&](const Vec& u, double w) {
    for (std::size_t i = 0; i < fs.size(); ++i) acc[i] += weight * w * fs[i](u);
  });
}

std::vector<McEstimate> finish(const StatsVector& stats, std::uint64_t seed) {
  std::vector<McEstimate> out;
  for (const auto& s : stats) out.push_back(s.estimate(1.0, seed));
  return out;
}

// <g, S_m(-K)> where g = sum_s coef(s) f_s.
McEstimate reflected_pairing(const ConvexPolytope& K, int m, const HarmonicSpectrum& f,
                             const std::function<double(int)>& coef, std::uint64_t samples,
                             Rng& rng) {
  HarmonicSpectrum g = apply_multiplier(f, DegreeMultiplier(coef));
  return measure_pair(area_measure(K.reflected(), m), g, samples, rng);
}

McEstimate scaled(McEstimate e, double c) {
  e.value *= c;
  e.std_error *= std::abs(c);
  return e;
}

McEstimate sum(const McEstimate& a, const McEstimate& b) {
  return {a.value + b.value, std::hypot(a.std_error, b.std_error), a.samples + b.samples,
          a.seed};
}

// a * b for independent estimates (first-order error propagation).
McEstimate product(const McEstimate& a, const McEstimate& b) {
  return {a.value * b.value, std::hypot(a.value * b.std_error, b.value * a.std_error),
          a.samples + b.samples, a.seed};
}

std::vector<IdentityReport> make_reports(const std::string& identity,
                                         std::vector<std::pair<std::string, double>> params,
                                         const std::vector<TestFunction>& fs,
                                         const std::vector<McEstimate>& lhs,
                                         const std::vector<McEstimate>& rhs,
                                         const McOptions& opt, double wall) {
  std::vector<IdentityReport> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    IdentityReport r;
    r.identity = identity;
    r.params = params;
    r.f = fs[i].name;
    r.lhs = lhs[i];
    r.rhs = rhs[i];
    r.samples = opt.samples;
    r.seed = opt.seed;
    r.wall_time_s = wall;
    r.score(opt.threshold);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TestFunction constant_test_function(int d) {
  HarmonicSpectrum f(d);
  f.add_zonal(0, Vec::Unit(d, 0));
  return {"const", f};
}

std::vector<TestFunction> zonal_test_functions(int d, const std::vector<int>& degrees, int axes,
                                               std::uint64_t seed) {
  std::vector<TestFunction> out;
  Rng rng(derive_seed(seed, kAxes));
  for (int s : degrees) {
    if (s < 0) throw std::invalid_argument("test function degree must be >= 0");
    if (s == 0) {
      out.push_back(constant_test_function(d));
      continue;
    }
    for (int a = 0; a < axes; ++a) {
      HarmonicSpectrum f(d);
      f.add_zonal(s, rng.unit_vec(d));
      out.push_back({"zonal:s=" + std::to_string(s) + ",axis=" + std::to_string(a), f});
    }
  }
  return out;
}

std::vector<McEstimate> crofton_lhs(const ConvexPolytope& K, int j, int q,
                                    std::span<const HarmonicSpectrum> fs, const McOptions& opt) {
  const int d = K.ambient_dim();
  require(1 <= j && j < q && q <= d, "crofton: need 1 <= j < q <= d");
  if (q == d) {
    const SphericalAreaMeasure S = area_measure(K, j);
    std::vector<McEstimate> out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      Rng rng(derive_seed(opt.seed, kCroftonRhs, i));
      const HarmonicSpectrum& f = fs[i];
      out.push_back(measure_pair(S, [&f](const Vec& u) { return f(u); }, opt.rhs_cone_samples,
                                 rng));
    }
    return out;
  }
  const ReferenceBall ball = reference_ball(K);
  const StatsVector stats = run_chunked(
      opt.samples, opt.seed, kCroftonLhs, fs.size(), opt.parallel,
      [&](Rng& rng, std::uint64_t count, StatsVector& st) {
        std::vector<double> acc(fs.size());
        for (std::uint64_t n = 0; n < count; ++n) {
          std::fill(acc.begin(), acc.end(), 0.0);
          const FlatSample E = sample_flat(d, q, ball.radius, rng, &ball.center);
          const ConvexPolytope X = intersect_flat(K, E.flat());
          if (X.dim() == q) accumulate_pairings(area_measure(X, j), fs, rng, E.weight, acc);
          for (std::size_t i = 0; i < fs.size(); ++i) st[i].add(acc[i]);
        }
      });
  return finish(stats, opt.seed);
}

McEstimate crofton_rhs(const ConvexPolytope& K, int j, int q, const HarmonicSpectrum& f,
                       const McOptions& opt) {
  const int d = K.ambient_dim();
  require(1 <= j && j < q && q <= d, "crofton: need 1 <= j < q <= d");
  Rng rng(derive_seed(opt.seed, kCroftonRhs, 0));
  const double a = a_coeff(d, j, q);
  return reflected_pairing(
      K, d + j - q, f, [=](int s) { return a * composed_multiplier(d, j, q, s); },
      opt.rhs_cone_samples, rng);
}

std::vector<IdentityReport> crofton_check(const ConvexPolytope& K, int j, int q,
                                          const std::vector<TestFunction>& fs,
                                          const McOptions& opt) {
  const auto t0 = Clock::now();
  const std::vector<HarmonicSpectrum> fv = spectra(fs);
  std::vector<McEstimate> lhs = crofton_lhs(K, j, q, fv, opt);
  std::vector<McEstimate> rhs;
  for (const auto& f : fv) rhs.push_back(crofton_rhs(K, j, q, f, opt));
  const int d = K.ambient_dim();
  return make_reports("crofton", {{"d", d}, {"j", j}, {"q", q}}, fs, lhs, rhs, opt,
                      seconds_since(t0));
}

std::vector<McEstimate> pkf_lhs(const ConvexPolytope& K, const ConvexPolytope& M, int j,
                                std::span<const HarmonicSpectrum> fs, const McOptions& opt,
                                double half_width, bool* covers) {
  const int d = K.ambient_dim();
  require(M.ambient_dim() == d, "pkf: bodies must share the ambient dimension");
  require(1 <= j && j <= d - 1, "pkf: need 1 <= j <= d-1");
  const MotionBox box = motion_box(K, M, half_width);
  if (covers) *covers = box.covers_support;
  const StatsVector stats = run_chunked(
      opt.samples, opt.seed, kPkfLhs, fs.size(), opt.parallel,
      [&](Rng& rng, std::uint64_t count, StatsVector& st) {
        std::vector<double> acc(fs.size());
        for (std::uint64_t n = 0; n < count; ++n) {
          std::fill(acc.begin(), acc.end(), 0.0);
          const MotionSample g = sample_motion(box, d, rng);
          const ConvexPolytope X = intersect_moved(K, g.rotation, g.translation, M);
          if (X.dim() >= j) accumulate_pairings(area_measure(X, j), fs, rng, g.weight, acc);
          for (std::size_t i = 0; i < fs.size(); ++i) st[i].add(acc[i]);
        }
      });
  return finish(stats, opt.seed);
}

McEstimate pkf_rhs(const ConvexPolytope& K, const ConvexPolytope& M, int j,
                   const HarmonicSpectrum& f, const McOptions& opt) {
  const int d = K.ambient_dim();
  require(M.ambient_dim() == d, "pkf: bodies must share the ambient dimension");
  require(1 <= j && j <= d - 1, "pkf: need 1 <= j <= d-1");
  Rng rng(derive_seed(opt.seed, kPkfRhs, 0));

  const McEstimate vj_m = intrinsic_volume_estimate(M, j, opt.rhs_cone_samples, opt.seed);
  McEstimate total = scaled(vj_m, omega(d - j) / binomial(d - 1, j) *
                                      intrinsic_volume(K, d) * f.sphere_mean());
  for (int k = j + 1; k <= d - 1; ++k) {
    const double a = a_coeff(d, j, k);
    const McEstimate pairing = reflected_pairing(
        K, d + j - k, f, [=](int s) { return a * composed_multiplier(d, j, k, s); },
        opt.rhs_cone_samples, rng);
    const McEstimate vk_m = intrinsic_volume_estimate(M, k, opt.rhs_cone_samples, opt.seed);
    total = sum(total, product(pairing, vk_m));
  }
  const McEstimate last =
      measure_pair(area_measure(K, j), f, opt.rhs_cone_samples, rng);
  return sum(total, scaled(last, M.dim() == d ? M.volume() : 0.0));
}

std::vector<IdentityReport> pkf_check(const ConvexPolytope& K, const ConvexPolytope& M, int j,
                                      const std::vector<TestFunction>& fs, const McOptions& opt,
                                      double half_width) {
  const auto t0 = Clock::now();
  const std::vector<HarmonicSpectrum> fv = spectra(fs);
  bool covers = true;
  std::vector<McEstimate> lhs = pkf_lhs(K, M, j, fv, opt, half_width, &covers);
  std::vector<McEstimate> rhs;
  for (const auto& f : fv) rhs.push_back(pkf_rhs(K, M, j, f, opt));
  auto reports = make_reports("pkf", {{"d", K.ambient_dim()}, {"j", j}}, fs, lhs, rhs, opt,
                              seconds_since(t0));
  if (!covers)
    for (auto& r : reports) {
      r.note = "translation box does not contain every hitting motion";
      r.pass = false;
    }
  return reports;
}

std::vector<McEstimate> translative_lhs(const ConvexPolytope& K, const ConvexPolytope& M,
                                        std::span<const HarmonicSpectrum> fs,
                                        const McOptions& opt) {
  const int d = K.ambient_dim();
  require(M.ambient_dim() == d && d >= 2, "translative: bodies must share dimension d >= 2");
  const TranslationBox box = translation_box(K, M);
  const double volume = box.volume();
  const Mat id = Mat::Identity(d, d);
  const StatsVector stats = run_chunked(
      opt.samples, opt.seed, kTranslativeLhs, fs.size(), opt.parallel,
      [&](Rng& rng, std::uint64_t count, StatsVector& st) {
        std::vector<double> acc(fs.size());
        Vec t(d);
        for (std::uint64_t n = 0; n < count; ++n) {
          std::fill(acc.begin(), acc.end(), 0.0);
          for (int i = 0; i < d; ++i) t[i] = box.lower[i] + rng.uniform() * (box.upper[i] - box.lower[i]);
          const ConvexPolytope X = intersect_moved(K, id, t, M);
          if (X.dim() >= d - 1) accumulate_pairings(area_measure(X, d - 1), fs, rng, volume, acc);
          for (std::size_t i = 0; i < fs.size(); ++i) st[i].add(acc[i]);
        }
      });
  return finish(stats, opt.seed);
}

McEstimate translative_rhs(const ConvexPolytope& K, const ConvexPolytope& M,
                           const HarmonicSpectrum& f, const McOptions& opt) {
  const int d = K.ambient_dim();
  Rng rng(derive_seed(opt.seed, kTranslativeRhs, 0));
  const double vk = K.dim() == d ? K.volume() : 0.0;
  const double vm = M.dim() == d ? M.volume() : 0.0;
  const McEstimate pm = measure_pair(area_measure(M, d - 1), f, opt.rhs_cone_samples, rng);
  const McEstimate pk = measure_pair(area_measure(K, d - 1), f, opt.rhs_cone_samples, rng);
  return sum(scaled(pm, vk), scaled(pk, vm));
}

std::vector<IdentityReport> translative_check(const ConvexPolytope& K, const ConvexPolytope& M,
                                              const std::vector<TestFunction>& fs,
                                              const McOptions& opt) {
  const auto t0 = Clock::now();
  const std::vector<HarmonicSpectrum> fv = spectra(fs);
  std::vector<McEstimate> lhs = translative_lhs(K, M, fv, opt);
  std::vector<McEstimate> rhs;
  for (const auto& f : fv) rhs.push_back(translative_rhs(K, M, f, opt));
  return make_reports("translative", {{"d", K.ambient_dim()}}, fs, lhs, rhs, opt,
                      seconds_since(t0));
}

std::vector<IdentityReport> mean_section_check(const ConvexPolytope& K, int k, const Vec& u,
                                               const std::vector<TestFunction>& fs,
                                               const McOptions& opt) {
  const int d = K.ambient_dim();
  require(2 <= k && k <= d, "meansection: need 2 <= k <= d");
  const auto t0 = Clock::now();
  const Vec dir = u.normalized();
  std::vector<std::pair<std::string, double>> params{{"d", d}, {"k", k}};
  std::vector<IdentityReport> out;
  auto base = [&](const std::string& identity, const std::string& f) {
    IdentityReport r;
    r.identity = identity;
    r.params = params;
    r.f = f;
    r.samples = opt.samples;
    r.seed = opt.seed;
    return r;
  };

  // Support function of M_k(K) at +u and -u, twice with independent streams.
  auto support_integral = [&](std::uint64_t stream) {
    if (k == d) {
      return std::vector<McEstimate>{{support_function(K, dir), 0.0, 0, opt.seed},
                                     {support_function(K, -dir), 0.0, 0, opt.seed}};
    }
    const ReferenceBall ball = reference_ball(K);
    const StatsVector st = run_chunked(
        opt.samples, opt.seed, stream, 2, opt.parallel,
        [&](Rng& rng, std::uint64_t count, StatsVector& s) {
          for (std::uint64_t n = 0; n < count; ++n) {
            const FlatSample E = sample_flat(d, k, ball.radius, rng, &ball.center);
            const ConvexPolytope X = intersect_flat(K, E.flat());
            const bool hit = X.dim() == k;
            s[0].add(hit ? E.weight * support_function(X, dir) : 0.0);
            s[1].add(hit ? E.weight * support_function(X, -dir) : 0.0);
          }
        });
    return finish(st, opt.seed);
  };
  const auto ha = support_integral(kMeanSupportA);
  if (k < d) {
    const auto hb = support_integral(kMeanSupportB);
    IdentityReport r = base("meansection-support", "h(u)");
    r.lhs = ha[0];
    r.rhs = hb[0];
    r.note = "two independent seeds";
    r.score(opt.threshold);
    out.push_back(r);
  } else {
    IdentityReport r = base("meansection-support", "h(u)");
    r.lhs = ha[0];
    r.rhs = {support_function(K, dir), 0.0, 0, opt.seed};
    r.note = "k = d: single flat";
    r.score(opt.threshold);
    out.push_back(r);
  }
  {
    IdentityReport r = base("meansection-width", "h(u)+h(-u)");
    r.lhs = sum(ha[0], ha[1]);
    r.rhs = {0.0, 0.0, 0, opt.seed};
    r.score_at_least(opt.threshold);
    out.push_back(r);
  }

  // First area measures: the mass reduction and the multiplier relation.
  std::vector<TestFunction> all{constant_test_function(d)};
  for (const auto& t : fs)
    if (t.name != all.front().name) all.push_back(t);
  std::vector<HarmonicSpectrum> images;
  const DegreeMultiplier T = DegreeMultiplier::composed(d, d - 1, d + 1 - k);
  for (const auto& t : all) images.push_back(apply_multiplier(t.f, T));
  images.push_back(all.front().f);
  McOptions rel = opt;
  rel.seed = derive_seed(opt.seed, kMeanRelation);
  const std::vector<McEstimate> s1 = crofton_lhs(K, 1, k, images, rel);

  {
    IdentityReport r = base("meansection-mass", "const");
    r.lhs = s1.back();
    const double v = intrinsic_volume(K, d + 1 - k);
    const double mass_factor = omega(d - 1) / binomial(d - 1, 1);
    r.rhs = {mass_factor * classical_crofton_constant(d, 1, k) * v, 0.0, 0, opt.seed};
    r.score(opt.threshold);
    out.push_back(r);
  }
  const double c = c_meansec(d, k);
  for (std::size_t i = 0; i < all.size(); ++i) {
    IdentityReport r = base("meansection-relation", all[i].name);
    r.lhs = scaled(s1[i], c);
    Rng rng(derive_seed(opt.seed, kMeanRelation, i + 1));
    r.rhs = measure_pair(area_measure(K.reflected(), d + 1 - k), all[i].f, opt.rhs_cone_samples,
                         rng);
    r.score(opt.threshold);
    out.push_back(r);
  }
  const double wall = seconds_since(t0);
  for (auto& r : out) r.wall_time_s = wall;
  return out;
}

std::vector<IdentityReport> inversion_corollary_check(const ConvexPolytope& K, int j, int q,
                                                      const std::vector<TestFunction>& fs,
                                                      const McOptions& opt) {
  const int d = K.ambient_dim();
  require(1 <= j && j < q && q <= d, "inversion: need 1 <= j < q <= d");
  const auto t0 = Clock::now();
  const int m = d + j - q;
  std::vector<std::pair<std::string, double>> params{{"d", d}, {"j", j}, {"q", q}};
  std::vector<IdentityReport> out;

  // Multiplier chain, degree by degree: I_m I_{d-j} composed with a I_j I_{q-j} I^*.
  const double a = a_coeff(d, j, q);
  const double a_prime = a_prime_coeff(d, j, q);
  std::vector<int> degrees;
  for (const auto& t : fs)
    for (int s : t.f.degrees())
      if (std::find(degrees.begin(), degrees.end(), s) == degrees.end()) degrees.push_back(s);
  std::sort(degrees.begin(), degrees.end());
  const DegreeMultiplier T = DegreeMultiplier::composed(d, m, d - j);
  for (int s : degrees) {
    IdentityReport r;
    r.identity = "inversion-multiplier";
    r.params = params;
    r.params.push_back({"s", s});
    r.f = "degree " + std::to_string(s);
    // I^* applied twice is the identity; the chain therefore carries no sign.
    r.lhs = {T(s) * a * composed_multiplier(d, j, q, s), 0.0, 0, opt.seed};
    r.rhs = {a_prime, 0.0, 0, opt.seed};
    r.seed = opt.seed;
    r.score(opt.threshold);
    out.push_back(r);
  }

  std::vector<HarmonicSpectrum> images;
  for (const auto& t : fs) images.push_back(apply_multiplier(t.f, T));
  const std::vector<McEstimate> lhs = crofton_lhs(K, j, q, images, opt);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    IdentityReport r;
    r.identity = "inversion";
    r.params = params;
    r.f = fs[i].name;
    r.lhs = lhs[i];
    Rng rng(derive_seed(opt.seed, kCroftonRhs, 100 + i));
    r.rhs = scaled(measure_pair(area_measure(K.reflected(), m), fs[i].f, opt.rhs_cone_samples, rng),
                   a_prime);
    r.samples = opt.samples;
    r.seed = opt.seed;
    r.score(opt.threshold);
    out.push_back(r);
  }
  const double wall = seconds_since(t0);
  for (auto& r : out) r.wall_time_s = wall;
  return out;
}

}  // namespace areakin
