#include "areakin/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace areakin {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// c_j^k = k! kappa_k / (j! kappa_j)
double flag_constant(int j, int k) {
  return std::exp(std::lgamma(k + 1.0) - std::lgamma(j + 1.0)) * kappa(k) / kappa(j);
}

}  // namespace

double MultiplierValue::real_value() const {
  if (!is_real()) throw std::domain_error("multiplier is purely imaginary");
  return i_power == 0 ? magnitude : -magnitude;
}

double MultiplierValue::imag_value() const {
  if (is_real()) throw std::domain_error("multiplier is real");
  return i_power == 1 ? magnitude : -magnitude;
}

MultiplierValue operator*(MultiplierValue a, MultiplierValue b) {
  return {(a.i_power + b.i_power) % 4, a.magnitude * b.magnitude};
}

double kappa(int n) {
  require(n >= 0, "kappa: n must be >= 0");
  return std::pow(kPi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

double omega(int n) {
  require(n >= 1, "omega: n must be >= 1");
  return 2.0 * std::pow(kPi, n / 2.0) / std::tgamma(n / 2.0);
}

double binomial(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, "binomial: need 0 <= k <= n");
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

DimensionalConstants make_dimensional_constants(int d) {
  require(d >= 1, "dimension must be >= 1");
  DimensionalConstants c;
  c.d = d;
  c.kappa.resize(d + 1);
  c.omega.assign(d + 1, 0.0);
  for (int n = 0; n <= d; ++n) c.kappa[n] = kappa(n);
  for (int n = 1; n <= d; ++n) c.omega[n] = omega(n);
  return c;
}

double gamma_ratio(std::vector<double> num, std::vector<double> den) {
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  std::vector<double> n_left, d_left;
  std::set_difference(num.begin(), num.end(), den.begin(), den.end(),
                      std::back_inserter(n_left));
  std::set_difference(den.begin(), den.end(), num.begin(), num.end(),
                      std::back_inserter(d_left));
  double log_sum = 0.0;
  for (double x : n_left) {
    require(x > 0.0, "gamma_ratio: non-positive argument");
    log_sum += std::lgamma(x);
  }
  for (double x : d_left) {
    require(x > 0.0, "gamma_ratio: non-positive argument");
    log_sum -= std::lgamma(x);
  }
  return std::exp(log_sum);
}

MultiplierValue lambda_multiplier(int d, int p, int n) {
  require(d >= 2, "lambda_multiplier: d must be >= 2");
  require(p >= 1 && p <= d - 1, "lambda_multiplier: p must lie in 1..d-1");
  require(n >= 0, "lambda_multiplier: degree must be >= 0");
  const double mag = std::pow(kPi, d / 2.0) * std::ldexp(1.0, p) *
                     gamma_ratio({(n + p) / 2.0}, {(n + d - p) / 2.0});
  return {n % 4, mag};
}

double b_multiplier(int d, int j, int q, int s) {
  require(1 <= j && j < q && q <= d, "b_multiplier: need 1 <= j < q <= d");
  require(s >= 0, "b_multiplier: degree must be >= 0");
  return std::ldexp(1.0, q) * std::pow(kPi, d) *
         gamma_ratio({(s + j) / 2.0, (s + q - j) / 2.0},
                     {(s + d - j) / 2.0, (s + d - q + j) / 2.0});
}

double composed_multiplier(int d, int j, int q, int s) {
  const double b = b_multiplier(d, j, q, s);
  return s % 2 == 0 ? b : -b;
}

double a_coeff(int d, int j, int q) {
  require(1 <= j && j < q && q <= d, "a_coeff: need 1 <= j < q <= d");
  return j / (std::ldexp(1.0, d) * std::pow(kPi, (d + q) / 2.0) * (d + j - q)) *
         gamma_ratio({(q + 1) / 2.0, double(d - j)}, {(d + 1) / 2.0, double(q - j)});
}

double a_prime_coeff(int d, int j, int q) {
  return a_coeff(d, j, q) * std::pow(2.0 * kPi, 2 * d);
}

double c_meansec(int d, int k) {
  require(2 <= k && k <= d, "c_meansec: need 2 <= k <= d");
  return double(d - 1) * (d + 1 - k) /
         ((k - 1) * std::ldexp(1.0, 2 * d - k) * std::pow(kPi, (3 * d - k) / 2.0)) *
         gamma_ratio({k / 2.0}, {d / 2.0});
}

double koldobsky_constant(int d, int k) {
  require(1 <= k && k <= d - 1, "koldobsky_constant: need 1 <= k <= d-1");
  return std::pow(kPi, d / 2.0) * std::ldexp(1.0, d - k) *
         gamma_ratio({(d - k) / 2.0}, {k / 2.0});
}

double koldobsky_tilde_constant(int d, int k) {
  require(1 <= k && k <= d - 1, "koldobsky_tilde_constant: need 1 <= k <= d-1");
  return std::ldexp(1.0, -(k + 1)) / std::pow(kPi, d) *
         gamma_ratio({(d - k) / 2.0, (d - 1) / 2.0}, {k / 2.0, 0.5});
}

double even_orthogonality_constant(int d, int q, int j) {
  require(1 <= j && j < q && q < d, "even_orthogonality_constant: need 1 <= j < q < d");
  return std::ldexp(1.0, q) * std::pow(kPi, d) *
         gamma_ratio({j / 2.0, (q - j) / 2.0}, {(d - j) / 2.0, (d - q + j) / 2.0});
}

double asymmetric_constant(int d, int j) {
  require(1 <= j && j <= d - 1, "asymmetric_constant: need 1 <= j <= d-1");
  const double g = std::tgamma((d - j) / 2.0);
  return j * std::ldexp(1.0, d - j - 3) / (kPi * (d - 1)) * g * g;
}

double hemisphere_moment(int n, double p) {
  require(n >= 1, "hemisphere_moment: subspace dimension must be >= 1");
  require(p > -1.0, "hemisphere_moment: need p > -1");
  return 1.0 / (2.0 * std::sqrt(kPi)) * gamma_ratio({n / 2.0, (p + 1) / 2.0}, {(n + p) / 2.0});
}

double classical_crofton_constant(int d, int j, int q) {
  require(0 <= j && j <= q && q <= d, "classical_crofton_constant: need 0 <= j <= q <= d");
  return flag_constant(j, q) * flag_constant(d, d + j - q);
}

}  // namespace areakin
