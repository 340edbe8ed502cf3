#include "areakin/orthogonality.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "areakin/constants.hpp"
#include "areakin/grassmann.hpp"
#include "areakin/linalg.hpp"
#include "areakin/parallel.hpp"

namespace areakin {

namespace {

enum Stream : std::uint64_t { kAsymmetric = 31, kCentered };

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Vec uniform_in(const Mat& N, Rng& rng) { return N * rng.unit_vec(static_cast<int>(N.cols())); }

// Folds w into the closed hemisphere around v.
Vec fold(const Vec& w, const Vec& v) { return w.dot(v) < 0.0 ? Vec(-w) : w; }

bool in_subspace(const Vec& v, const Mat& N) {
  return (v - N * (N.transpose() * v)).norm() <= 1e-9 * std::max(1.0, v.norm());
}

McEstimate exact(double x, std::uint64_t seed = 0) { return {x, 0.0, 0, seed}; }

IdentityReport make_report(std::string identity,
                           std::vector<std::pair<std::string, double>> params, std::string f,
                           McEstimate lhs, McEstimate rhs, std::uint64_t samples,
                           std::uint64_t seed, double wall) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.f = std::move(f);
  r.lhs = lhs;
  r.rhs = rhs;
  r.samples = samples;
  r.seed = seed;
  r.wall_time_s = wall;
  r.score(4.0);
  return r;
}

// One draw of the left side of the asymmetric relation at v: N is v plus a
// random (n-1)-subspace of v^perp, w in the v-hemisphere of N, theta in the
// w-hemisphere of N.
double asymm_draw(const HarmonicSpectrum& phi, int j, int n, const Vec& v, Rng& rng) {
  Mat e(v.size(), 1);
  e.col(0) = v;
  const SubspaceSample N = sample_subspace_containing(e, n, rng);
  const Vec w = fold(uniform_in(N.basis, rng), v);
  const Vec theta = fold(uniform_in(N.basis, rng), w);
  return 0.25 * std::pow(v.dot(w), j + 1) * phi(theta);
}

HarmonicSpectrum asymm_image(int d, int j, const HarmonicSpectrum& f) {
  require(1 <= j && j <= d - 1, "asymmetric relation: need 1 <= j <= d-1");
  require(f.dim() == d, "asymmetric relation: dimension mismatch");
  require(!f.has_degree(1), "asymmetric relation: f must be centered (no degree-1 part)");
  return apply_multiplier(f, DegreeMultiplier::reduced_lambda(d, d - j));
}

}  // namespace

McEstimate cosine_transform(const SphereFunction& f, const CosineTransformSpec& spec,
                            std::uint64_t samples, Rng& rng) {
  require(spec.p >= 0, "cosine_transform: exponent must be >= 0");
  require(spec.N.cols() >= 1, "cosine_transform: subspace must have dim >= 1");
  require(in_subspace(spec.v, spec.N), "cosine_transform: pole must lie in N");
  require(samples > 0, "cosine_transform: need samples > 0");
  RunningStats st;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Vec w = fold(uniform_in(spec.N, rng), spec.v);
    st.add(0.5 * std::pow(spec.v.dot(w), spec.p) * f(w));
  }
  return st.estimate();
}

IdentityReport sph_integration_selftest(int d, int j, int p, std::uint64_t samples, Rng& rng) {
  require(1 <= j && j <= d - 1, "selftest: need 1 <= j <= d-1");
  const auto t0 = Clock::now();
  const int n = d - j;
  CosineTransformSpec spec{sample_subspace(d, n, rng).basis, p, Vec()};
  spec.v = uniform_in(spec.N, rng);
  const McEstimate lhs = cosine_transform([](const Vec&) { return 1.0; }, spec, samples, rng);
  return make_report("sph-integration", {{"d", d}, {"j", j}, {"p", p}}, "<u,v>^p", lhs,
                     exact(hemisphere_moment(n, p)), samples, 0, seconds_since(t0));
}

IdentityReport koldobsky_check(int d, int k, const HarmonicSpectrum& f, const Mat& H,
                               std::uint64_t samples, Rng& rng) {
  require(1 <= k && k <= d - 1, "koldobsky: need 1 <= k <= d-1");
  require(f.dim() == d && H.rows() == d && H.cols() == k, "koldobsky: dimension mismatch");
  require(!f.has_odd_degree(), "koldobsky: f must be even");
  const auto t0 = Clock::now();
  const HarmonicSpectrum g = apply_multiplier(f, DegreeMultiplier::even_lambda(d, d - k));
  const Mat Hperp = orthogonal_complement(H, d);
  auto as_fn = [](const HarmonicSpectrum& h) { return [&h](const Vec& u) { return h(u); }; };
  const McEstimate lhs = subsphere_average(as_fn(g), Hperp, samples, rng);
  McEstimate rhs = subsphere_average(as_fn(f), H, samples, rng);
  const double c = koldobsky_constant(d, k);
  rhs.value *= c;
  rhs.std_error *= c;
  return make_report("koldobsky", {{"d", d}, {"k", k}}, f.describe(), lhs, rhs, samples, 0,
                     seconds_since(t0));
}

IdentityReport even_orthogonality_check(int d, int q, int j, const HarmonicSpectrum& g,
                                        const Mat& L, std::uint64_t samples, Rng& rng) {
  require(1 <= j && j < q && q < d, "even orthogonality: need 1 <= j < q < d");
  require(g.dim() == d && L.rows() == d && L.cols() == q - j,
          "even orthogonality: dimension mismatch");
  require(!g.has_odd_degree(), "even orthogonality: g must be even");
  const auto t0 = Clock::now();
  const HarmonicSpectrum image = apply_multiplier(g, DegreeMultiplier::composed(d, q - j, j));
  const McEstimate lhs =
      subsphere_average([&image](const Vec& u) { return image(u); }, L, samples, rng);

  constexpr std::uint64_t kInner = 8;
  const std::uint64_t outer = std::max<std::uint64_t>(2, samples / kInner);
  RunningStats st;
  for (std::uint64_t o = 0; o < outer; ++o) {
    const SubspaceSample N = sample_subspace_containing(L, d - j, rng);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < kInner; ++i) acc += g(uniform_in(N.basis, rng));
    st.add(acc / kInner);
  }
  const double c = even_orthogonality_constant(d, q, j);
  const McEstimate rhs = st.estimate(c);
  return make_report("even-orthogonality", {{"d", d}, {"q", q}, {"j", j}}, g.describe(), lhs,
                     rhs, samples, 0, seconds_since(t0));
}

McEstimate f_jv(const SphereFunction& f, int j, const Vec& v, const Mat& N,
                std::uint64_t samples, Rng& rng) {
  require(j >= 0, "f_jv: need j >= 0");
  require(in_subspace(v, N), "f_jv: v must lie in N");
  require(samples > 0, "f_jv: need samples > 0");
  RunningStats st;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Vec w = fold(uniform_in(N, rng), v);
    const Vec theta = fold(uniform_in(N, rng), w);
    st.add(0.25 * std::pow(v.dot(w), j + 1) * f(theta));
  }
  return st.estimate();
}

IdentityReport asymm_orthogonality_check(int d, int j, const HarmonicSpectrum& f, const Vec& v,
                                         std::uint64_t samples, std::uint64_t seed,
                                         const ParallelOptions& parallel) {
  const HarmonicSpectrum phi = asymm_image(d, j, f);
  const auto t0 = Clock::now();
  const Vec pole = v.normalized();
  const StatsVector st = run_chunked(samples, seed, kAsymmetric, 1, parallel,
                                     [&](Rng& rng, std::uint64_t count, StatsVector& s) {
                                       for (std::uint64_t i = 0; i < count; ++i)
                                         s[0].add(asymm_draw(phi, j, d - j, pole, rng));
                                     });
  const HarmonicSpectrum rhs_image =
      apply_multiplier(f, DegreeMultiplier::reduced_lambda(d, 1));
  const double rhs = asymmetric_constant(d, j) * rhs_image(pole);
  return make_report("asymmetric-orthogonality", {{"d", d}, {"j", j}}, f.describe(),
                     st[0].estimate(1.0, seed), exact(rhs, seed), samples, seed,
                     seconds_since(t0));
}

IdentityReport asymm_centeredness_check(int d, int j, const HarmonicSpectrum& f, const Vec& a,
                                        std::uint64_t samples, std::uint64_t seed,
                                        const ParallelOptions& parallel) {
  const HarmonicSpectrum phi = asymm_image(d, j, f);
  const auto t0 = Clock::now();
  const Vec axis = a.normalized();
  const StatsVector st = run_chunked(samples, seed, kCentered, 1, parallel,
                                     [&](Rng& rng, std::uint64_t count, StatsVector& s) {
                                       for (std::uint64_t i = 0; i < count; ++i) {
                                         const Vec v = rng.unit_vec(d);
                                         s[0].add(axis.dot(v) * asymm_draw(phi, j, d - j, v, rng));
                                       }
                                     });
  return make_report("asymmetric-centeredness", {{"d", d}, {"j", j}}, f.describe(),
                     st[0].estimate(1.0, seed), exact(0.0, seed), samples, seed,
                     seconds_since(t0));
}

}  // namespace areakin
