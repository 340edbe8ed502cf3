#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "areakin/area_measure.hpp"
#include "areakin/harmonics.hpp"
#include "areakin/parallel.hpp"
#include "areakin/polytope.hpp"
#include "areakin/report.hpp"

namespace areakin {

/// Named test function with a known harmonic expansion.
struct TestFunction {
  std::string name;
  HarmonicSpectrum f;
};

TestFunction constant_test_function(int d);
/// Zonal harmonics C_s^{(d-2)/2}(<a, u>): one constant for s = 0 and
/// `axes` seeded random axes for every other listed degree.
std::vector<TestFunction> zonal_test_functions(int d, const std::vector<int>& degrees, int axes,
                                               std::uint64_t seed);

struct McOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  std::uint64_t rhs_cone_samples = 200000;  // per piece, for Monte Carlo right sides
  double threshold = 4.0;
  ParallelOptions parallel;
};

/// int <f, S_j(K cap E)> mu_q(dE) for several f on shared flats. For q = d
/// the direct pairing <f, S_j(K)>.
std::vector<McEstimate> crofton_lhs(const ConvexPolytope& K, int j, int q,
                                    std::span<const HarmonicSpectrum> fs, const McOptions& opt);
/// a(d,j,q) sum_s (-1)^s b_s(d,j,q) <f_s, S_{d+j-q}(-K)>.
McEstimate crofton_rhs(const ConvexPolytope& K, int j, int q, const HarmonicSpectrum& f,
                       const McOptions& opt);
std::vector<IdentityReport> crofton_check(const ConvexPolytope& K, int j, int q,
                                          const std::vector<TestFunction>& fs,
                                          const McOptions& opt);

/// Motion integral of <f, S_j(K cap gM)>. A positive half-width overrides the
/// translation box; `covers` reports whether the box still holds every
/// hitting translation.
std::vector<McEstimate> pkf_lhs(const ConvexPolytope& K, const ConvexPolytope& M, int j,
                                std::span<const HarmonicSpectrum> fs, const McOptions& opt,
                                double half_width = 0.0, bool* covers = nullptr);
McEstimate pkf_rhs(const ConvexPolytope& K, const ConvexPolytope& M, int j,
                   const HarmonicSpectrum& f, const McOptions& opt);
std::vector<IdentityReport> pkf_check(const ConvexPolytope& K, const ConvexPolytope& M, int j,
                                      const std::vector<TestFunction>& fs, const McOptions& opt,
                                      double half_width = 0.0);

/// Translation integral of <f, S_{d-1}(K cap (M + x))> over R^d.
std::vector<McEstimate> translative_lhs(const ConvexPolytope& K, const ConvexPolytope& M,
                                        std::span<const HarmonicSpectrum> fs,
                                        const McOptions& opt);
/// V_d(K) <f, S_{d-1}(M)> + <f, S_{d-1}(K)> V_d(M).
McEstimate translative_rhs(const ConvexPolytope& K, const ConvexPolytope& M,
                           const HarmonicSpectrum& f, const McOptions& opt);
std::vector<IdentityReport> translative_check(const ConvexPolytope& K, const ConvexPolytope& M,
                                              const std::vector<TestFunction>& fs,
                                              const McOptions& opt);

/// Mean section body checks at order k in direction u: support-function
/// self-consistency over two seeds, width nonnegativity, the mass reduction
/// to the classical Crofton formula, and the first-area-measure relation
/// <f, S_{d+1-k}(-K)> = c(d,k) <I_{d-1} I_{d+1-k} f, S_1(M_k K)> for each f.
std::vector<IdentityReport> mean_section_check(const ConvexPolytope& K, int k, const Vec& u,
                                               const std::vector<TestFunction>& fs,
                                               const McOptions& opt);

/// Inverted Crofton form: the multiplier chain at each degree (exact) and
/// crofton_lhs of I_{d+j-q} I_{d-j} f against a'(d,j,q) <f, S_{d+j-q}(-K)>.
std::vector<IdentityReport> inversion_corollary_check(const ConvexPolytope& K, int j, int q,
                                                      const std::vector<TestFunction>& fs,
                                                      const McOptions& opt);

}  // namespace areakin
