#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "areakin/constants.hpp"

using namespace areakin;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Constants, BallAndSphereTables) {
  EXPECT_DOUBLE_EQ(kappa(0), 1.0);
  EXPECT_DOUBLE_EQ(kappa(1), 2.0);
  EXPECT_NEAR(kappa(2), kPi, 1e-15);
  EXPECT_NEAR(kappa(3), 4.0 * kPi / 3.0, 1e-14);
  EXPECT_NEAR(omega(3), 4.0 * kPi, 1e-14);
  for (int n = 1; n <= 8; ++n) EXPECT_NEAR(omega(n), n * kappa(n), 1e-12 * omega(n));
  const DimensionalConstants c = make_dimensional_constants(5);
  EXPECT_EQ(c.kappa.size(), 6u);
  EXPECT_NEAR(c.omega[5], 2.0 * std::pow(kPi, 2.5) / std::tgamma(2.5), 1e-12);
}

TEST(Constants, Binomial) {
  EXPECT_DOUBLE_EQ(binomial(5, 2), 10.0);
  EXPECT_DOUBLE_EQ(binomial(8, 0), 1.0);
  EXPECT_THROW(binomial(3, 4), std::invalid_argument);
}

TEST(Constants, LambdaExamples) {
  const MultiplierValue a = lambda_multiplier(3, 1, 0);
  EXPECT_EQ(a.i_power, 0);
  EXPECT_NEAR(a.magnitude, 2.0 * kPi * kPi, 1e-12);
  EXPECT_NEAR(lambda_multiplier(3, 2, 0).real_value(), 4.0 * kPi, 1e-12);
  const MultiplierValue odd = lambda_multiplier(4, 2, 1);
  EXPECT_FALSE(odd.is_real());
  EXPECT_THROW(odd.real_value(), std::domain_error);
  EXPECT_NO_THROW(odd.imag_value());
  EXPECT_THROW(lambda_multiplier(3, 0, 1), std::invalid_argument);
  EXPECT_THROW(lambda_multiplier(3, 3, 1), std::invalid_argument);
}

TEST(Constants, LambdaLargeDegreeIsFinite) {
  for (int n : {100, 500, 1000}) EXPECT_TRUE(std::isfinite(lambda_multiplier(8, 3, n).magnitude));
}

TEST(Constants, InversionSampled) {
  for (int d : {3, 5, 8})
    for (int p = 1; p < d; ++p)
      for (int n : {0, 1, 7, 40}) {
        const double v = (lambda_multiplier(d, p, n) * lambda_multiplier(d, d - p, n)).real_value();
        const double expected = std::pow(2.0 * kPi, d) * (n % 2 ? -1.0 : 1.0);
        EXPECT_NEAR(v / expected, 1.0, 1e-10) << d << " " << p << " " << n;
      }
}

TEST(Constants, ComposedMultiplierExamples) {
  EXPECT_NEAR(composed_multiplier(3, 1, 2, 2), std::pow(kPi, 4), 1e-9);
  EXPECT_NEAR(composed_multiplier(3, 1, 2, 0), 4.0 * std::pow(kPi, 4), 1e-9);
  for (int s = 0; s < 6; ++s) {
    const double expected = (s % 2 ? -1.0 : 1.0) * std::pow(2.0 * kPi, 4);
    EXPECT_NEAR(composed_multiplier(4, 1, 4, s) / expected, 1.0, 1e-12);
  }
  // Phases combine to a real value equal to the product of the two lambdas.
  const double prod = (lambda_multiplier(5, 2, 3) * lambda_multiplier(5, 1, 3)).real_value();
  EXPECT_NEAR(composed_multiplier(5, 2, 3, 3) / prod, 1.0, 1e-12);
}

TEST(Constants, CroftonCoefficients) {
  EXPECT_NEAR(a_coeff(3, 1, 2), 1.0 / (32.0 * kPi * kPi), 1e-15);
  for (int d = 3; d <= 8; ++d)
    for (int j = 1; j < d; ++j) {
      EXPECT_NEAR(a_coeff(d, j, d) * std::pow(2.0 * kPi, d), 1.0, 1e-12);
      EXPECT_NEAR(a_prime_coeff(d, j, d), a_coeff(d, j, d) * std::pow(2.0 * kPi, 2 * d),
                  1e-9 * a_prime_coeff(d, j, d));
    }
  EXPECT_THROW(a_coeff(3, 2, 2), std::invalid_argument);
}

TEST(Constants, MeanSectionConstant) {
  EXPECT_NEAR(c_meansec(3, 3), 1.0 / (8.0 * std::pow(kPi, 3)), 1e-15);
  EXPECT_GT(c_meansec(4, 2), 0.0);
  EXPECT_THROW(c_meansec(3, 1), std::invalid_argument);
}

TEST(Constants, OrthogonalityConstants) {
  EXPECT_NEAR(koldobsky_constant(3, 1), 4.0 * kPi, 1e-12);
  for (int d = 3; d <= 6; ++d)
    for (int k = 1; k < d; ++k)
      EXPECT_NEAR(koldobsky_constant(d, k), lambda_multiplier(d, d - k, 0).real_value(),
                  1e-10 * koldobsky_constant(d, k));
  EXPECT_NEAR(even_orthogonality_constant(3, 2, 1), 4.0 * std::pow(kPi, 4), 1e-9);
  for (auto [d, q, j] : {std::tuple{3, 2, 1}, {4, 3, 1}, {4, 3, 2}, {6, 4, 1}}) {
    const double chain = (lambda_multiplier(d, q - j, 0) * lambda_multiplier(d, j, 0)).real_value();
    EXPECT_NEAR(even_orthogonality_constant(d, q, j) / chain, 1.0, 1e-12);
  }
  EXPECT_NEAR(asymmetric_constant(3, 1) * lambda_multiplier(3, 1, 0).magnitude, kPi / 2.0, 1e-12);
}

TEST(Constants, HemisphereMoments) {
  for (int n : {1, 2, 3, 4, 7}) EXPECT_DOUBLE_EQ(hemisphere_moment(n, 0.0), 0.5);
  EXPECT_NEAR(hemisphere_moment(3, 1), 0.25, 1e-15);
  EXPECT_NEAR(hemisphere_moment(3, 2), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(hemisphere_moment(2, 1), 1.0 / kPi, 1e-15);
  EXPECT_THROW(hemisphere_moment(3, -1.0), std::invalid_argument);
}

TEST(Constants, ClassicalCrofton) {
  EXPECT_NEAR(classical_crofton_constant(3, 1, 2), kPi / 4.0, 1e-14);
  EXPECT_NEAR(classical_crofton_constant(4, 2, 4), 1.0, 1e-14);
  // The s = 0 Crofton reduction reproduces the classical constant.
  for (auto [d, j, q] : {std::tuple{3, 1, 2}, {4, 1, 3}, {4, 2, 3}, {4, 1, 2}, {5, 2, 4}}) {
    const int m = d + j - q;
    const double mass_j = d * kappa(d - j) / binomial(d, j);
    const double mass_m = d * kappa(d - m) / binomial(d, m);
    const double via_a = a_coeff(d, j, q) * composed_multiplier(d, j, q, 0) * mass_m / mass_j;
    EXPECT_NEAR(via_a / classical_crofton_constant(d, j, q), 1.0, 1e-12) << d << j << q;
  }
}

TEST(Constants, GammaRatioCancels) {
  EXPECT_DOUBLE_EQ(gamma_ratio({400.5, 2.0}, {400.5}), 1.0);
  EXPECT_NEAR(gamma_ratio({0.5}, {1.0}), std::sqrt(kPi), 1e-14);
  EXPECT_THROW(gamma_ratio({-1.0}, {}), std::invalid_argument);
}
