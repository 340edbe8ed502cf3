#pragma once

#include <vector>

namespace areakin {

/// A multiplier of the form i^i_power * magnitude.
///
/// Odd harmonic degrees carry an imaginary phase. Storing the phase apart
/// from the real Gamma ratio keeps every composition of two multipliers
/// exactly real.
struct MultiplierValue {
  int i_power = 0;         // 0..3
  double magnitude = 0.0;  // real, reduced (phase removed)

  bool is_real() const { return i_power % 2 == 0; }
  /// Real value; throws std::domain_error for a purely imaginary multiplier.
  double real_value() const;
  /// Coefficient of i; throws std::domain_error for a real multiplier.
  double imag_value() const;
};

MultiplierValue operator*(MultiplierValue a, MultiplierValue b);

/// Unit-ball volumes and sphere measures for one ambient dimension.
struct DimensionalConstants {
  int d = 0;
  std::vector<double> kappa;  // kappa[n], n = 0..d
  std::vector<double> omega;  // omega[n], n = 1..d (omega[0] unused, 0)
};

DimensionalConstants make_dimensional_constants(int d);

/// Volume of the unit ball in R^n.
double kappa(int n);
/// Surface measure of S^{n-1}, i.e. 2 pi^{n/2} / Gamma(n/2).
double omega(int n);
double binomial(int n, int k);

/// exp(sum lgamma(num) - sum lgamma(den)); identical arguments cancel
/// exactly before evaluation. All arguments must be positive.
double gamma_ratio(std::vector<double> num, std::vector<double> den);

/// Multiplier of I_p on degree-n harmonics in R^d, 1 <= p <= d-1.
MultiplierValue lambda_multiplier(int d, int p, int n);

/// b_s(d,j,q) for 1 <= j < q <= d.
double b_multiplier(int d, int j, int q, int s);

/// Real multiplier of I_j I_{q-j} on degree s: (-1)^s b_s(d,j,q).
double composed_multiplier(int d, int j, int q, int s);

/// Crofton coefficient a(d,j,q), 1 <= j < q <= d.
double a_coeff(int d, int j, int q);

/// a'(d,j,q) = a(d,j,q) (2 pi)^{2d}, the constant of the inverted Crofton form.
double a_prime_coeff(int d, int j, int q);

/// Mean section body constant c(d,k), 2 <= k <= d.
double c_meansec(int d, int k);

/// c_{d,k} of the spherical Koldobsky relation, 1 <= k <= d-1.
double koldobsky_constant(int d, int k);

/// c~_{d,k} of the Grassmannian form R_{d-k,1} R_{1,d-k} f = c~ I_1 I_k f.
double koldobsky_tilde_constant(int d, int k);

/// c_{d,q,j} of the generalized even relation, 1 <= j < q < d.
double even_orthogonality_constant(int d, int q, int j);

/// b(d,j) of the asymmetric relation, 1 <= j <= d-1.
double asymmetric_constant(int d, int j);

/// Integral of <u,v>^p over the hemisphere {u in S^{n-1}: <u,v> > 0} of an
/// n-dimensional subspace against its probability measure, p > -1.
double hemisphere_moment(int n, double p);

/// Classical Crofton constant: int V_j(K cap E) mu_q(dE) = c * V_{d+j-q}(K).
double classical_crofton_constant(int d, int j, int q);

}  // namespace areakin
