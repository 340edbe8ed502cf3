#pragma once

#include <cstdint>

#include "areakin/estimate.hpp"
#include "areakin/harmonics.hpp"
#include "areakin/parallel.hpp"
#include "areakin/random.hpp"
#include "areakin/report.hpp"
#include "areakin/types.hpp"

namespace areakin {

/// Hemisphere transform within a subspace N: w ranges over S^{d-1} cap N
/// with <v, w> > 0, weighted by <v, w>^p.
struct CosineTransformSpec {
  Mat N;  // orthonormal basis, d x n
  int p = 0;
  Vec v;  // unit, in N
};

/// int_{S cap N cap v^+} <v,w>^p f(w) sigma_N(dw), sigma_N a probability
/// measure. Samples of the full subsphere are folded into the hemisphere
/// by w -> -w, so f = 1, p = 0 gives exactly 1/2.
McEstimate cosine_transform(const SphereFunction& f, const CosineTransformSpec& spec,
                            std::uint64_t samples, Rng& rng);

/// Hemisphere moment of <u,v>^p in a random (d-j)-subspace against the
/// closed form.
IdentityReport sph_integration_selftest(int d, int j, int p, std::uint64_t samples, Rng& rng);

/// Average of I_{d-k} f over the great subsphere of H^perp against c_{d,k}
/// times the average of f over the subsphere of H (H: d x k orthonormal).
/// f must be even.
IdentityReport koldobsky_check(int d, int k, const HarmonicSpectrum& f, const Mat& H,
                               std::uint64_t samples, Rng& rng);

/// Average of I_{q-j} I_j g over S cap L (L: d x (q-j)) against c_{d,q,j}
/// times the average over (d-j)-subspaces N containing L of the average of g
/// over S cap N. `samples` inner points are split into sqrt-sized outer and
/// inner loops for the right side.
IdentityReport even_orthogonality_check(int d, int q, int j, const HarmonicSpectrum& g,
                                        const Mat& L, std::uint64_t samples, Rng& rng);

/// (H_{j+1}^N H_0^N f)(v): both hemisphere integrals in N, v in N.
McEstimate f_jv(const SphereFunction& f, int j, const Vec& v, const Mat& N,
                std::uint64_t samples, Rng& rng);

/// Average over N containing v of f_jv(I_{d-j} f) against
/// b(d,j) (I_1 f)(v), with the i^s phases removed degree by degree.
/// f must have no degree-1 part. Runs deterministically in chunks.
IdentityReport asymm_orthogonality_check(int d, int j, const HarmonicSpectrum& f, const Vec& v,
                                         std::uint64_t samples, std::uint64_t seed,
                                         const ParallelOptions& parallel = {});

/// Pairing of the left side of the asymmetric relation, as a function of
/// v, with the linear function <a, v>; zero when f is centered.
IdentityReport asymm_centeredness_check(int d, int j, const HarmonicSpectrum& f, const Vec& a,
                                        std::uint64_t samples, std::uint64_t seed,
                                        const ParallelOptions& parallel = {});

}  // namespace areakin
