#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polyfisher/errors.hpp"
#include "polyfisher/gamma.hpp"

using namespace polyfisher;

namespace {
constexpr double kPi = std::numbers::pi;

// |Gamma(1 + ix)|^2 = pi x / sinh(pi x)
double oracle_lambda_one(double x) {
  return x == 0.0 ? 1.0 : kPi * x / std::sinh(kPi * x);
}

// |Gamma(1/2 + ix)|^2 = pi / cosh(pi x)
double oracle_lambda_half(double x) { return kPi / std::cosh(kPi * x); }
} // namespace

TEST_CASE("abs_gamma_sq on the real axis") {
  CHECK(abs_gamma_sq(2.0, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(abs_gamma_sq(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  // Gamma(1/2)^2 = pi
  CHECK(abs_gamma_sq(0.5, 0.0) == doctest::Approx(kPi).epsilon(1e-13));
  for (double lambda : {0.05, 0.3, 1.7, 8.0, 25.0}) {
    const double expected = 2.0 * std::lgamma(lambda);
    CHECK(std::fabs(log_abs_gamma_sq(lambda, 0.0) - expected) <=
          1e-12 * std::fmax(1.0, std::fabs(expected)));
  }
}

TEST_CASE("abs_gamma_sq matches the sinh identity at lambda = 1") {
  CHECK(abs_gamma_sq(1.0, 1.0) ==
        doctest::Approx(oracle_lambda_one(1.0)).epsilon(1e-12));
  for (double x = -30.0; x <= 30.0; x += 0.25) {
    const double expected = oracle_lambda_one(x);
    CHECK(std::fabs(abs_gamma_sq(1.0, x) - expected) <= 1e-10 * expected);
  }
}

TEST_CASE("abs_gamma_sq matches the cosh identity at lambda = 1/2") {
  CHECK(abs_gamma_sq(0.5, 2.0) ==
        doctest::Approx(oracle_lambda_half(2.0)).epsilon(1e-12));
  for (double x = -30.0; x <= 30.0; x += 0.25) {
    const double expected = oracle_lambda_half(x);
    CHECK(std::fabs(abs_gamma_sq(0.5, x) - expected) <= 1e-10 * expected);
  }
}

TEST_CASE("abs_gamma_sq is even in x") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> lam_dist(0.05, 8.0);
  std::uniform_real_distribution<double> x_dist(0.0, 30.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double lambda = lam_dist(rng);
    const double x = x_dist(rng);
    const double plus = log_abs_gamma_sq(lambda, x);
    const double minus = log_abs_gamma_sq(lambda, -x);
    CHECK(std::fabs(plus - minus) <= 1e-13 * std::fmax(1.0, std::fabs(plus)));
  }
}

TEST_CASE("abs_gamma_sq satisfies the shift recurrence") {
  // |Gamma(lambda + 1 + ix)|^2 = (lambda^2 + x^2) |Gamma(lambda + ix)|^2
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> lam_dist(0.05, 6.0);
  std::uniform_real_distribution<double> x_dist(-20.0, 20.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double lambda = lam_dist(rng);
    const double x = x_dist(rng);
    const double lhs = log_abs_gamma_sq(lambda + 1.0, x);
    const double rhs =
        std::log(lambda * lambda + x * x) + log_abs_gamma_sq(lambda, x);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::fmax(1.0, std::fabs(rhs)));
  }
}

TEST_CASE("log_gamma rejects the closed left half plane") {
  CHECK_THROWS_AS(log_gamma({0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(log_gamma({-1.5, 0.0}), DomainError);
  CHECK_THROWS_AS(abs_gamma_sq(0.0, 1.0), DomainError);
}
