#include <doctest.h>

#include <cmath>
#include <random>

#include "polyfisher/errors.hpp"
#include "polyfisher/hypergeom.hpp"

using namespace polyfisher;

namespace {

// Meixner-style substitution for 0 < c_m < 1.
ZMap meixner_map(double beta, double c_m) {
  return {1.0 - 1.0 / c_m, 1.0 / (c_m * c_m), beta};
}

// Krawtchouk-style substitution, c = -N.
ZMap krawtchouk_map(double p, int N) {
  return {1.0 / p, -1.0 / (p * p), static_cast<double>(-N)};
}

} // namespace

TEST_CASE("2F1 series trivial values") {
  CHECK(series_2f1_terminating(0, 5.2, 3.0, 0.7) == 1.0);
  CHECK(series_2f1_terminating(4, 0.0, 3.0, 0.7) == 1.0); // (-0)_k kills k >= 1
  // Meixner M_1 at beta = 1, c_M = 0.5: 1 + x z / c = 1 + 2(-1)/1 = -1
  CHECK(series_2f1_terminating(1, 2.0, 1.0, -1.0) == doctest::Approx(-1.0));
}

TEST_CASE("2F0 series trivial values") {
  CHECK(series_2f0_terminating(0, 3.0, -0.5) == 1.0);
  // Charlier C_1(x; a) = 1 - x/a: at x = 3, a = 1 this is -2
  CHECK(series_2f0_terminating(1, 3.0, -1.0) == doctest::Approx(-2.0));
  CHECK(series_2f0_terminating(2, 0.0, -2.0) == 1.0);
}

TEST_CASE("2F1 series zero denominator before termination") {
  // c = -1 reaches a zero factor at k = 2 while terms are still nonzero
  CHECK_THROWS_AS(series_2f1_terminating(3, 2.5, -1.0, 0.5), DomainError);
  // same c is harmless when the numerator terminates first (x = 0)
  CHECK(series_2f1_terminating(3, 0.0, -1.0, 0.5) == 1.0);
}

TEST_CASE("2F1 recurrence start and degree zero") {
  const ZMap map = meixner_map(2.0, 0.4);
  const PolyEval p0 = recurrence_2f1(0, 3.7, map);
  REQUIRE(p0.values.size() == 1);
  CHECK(p0.values[0] == 1.0);
  // P_1 bootstrapped from the m = 0 step must equal 1 + x z / c
  const PolyEval p1 = recurrence_2f1(1, 3.7, map);
  CHECK(p1.values[1] ==
        doctest::Approx(1.0 + 3.7 * map.z / *map.c).epsilon(1e-14));
}

TEST_CASE("2F1 recurrence at x = 0 gives all ones exactly") {
  const ZMap map{-1.0, 1.0, 2.0}; // c = 2, z = -1: integer arithmetic
  const PolyEval p = recurrence_2f1(3, 0.0, map);
  for (double v : p.values)
    CHECK(v == 1.0);
}

TEST_CASE("2F0 recurrence trivial values") {
  CHECK(recurrence_2f0(0, 1.0, -1.0).values[0] == 1.0);
  const PolyEval p = recurrence_2f0(2, 0.0, -0.25);
  CHECK(p.values[0] == 1.0);
  CHECK(p.values[1] == 1.0);
  CHECK(p.values[2] == 1.0);
}

TEST_CASE("2F1 recurrence division by m + c = 0") {
  // c = -2 with n = 3 hits m + c = 0 at m = 2
  CHECK_THROWS_AS(recurrence_2f1(3, 1.5, krawtchouk_map(0.5, 2)), DomainError);
  // n <= N stays legal
  CHECK_NOTHROW(recurrence_2f1(2, 1.5, krawtchouk_map(0.5, 2)));
  CHECK_THROWS_AS(recurrence_2f1(2, 1.5, ZMap{0.5, 1.0, std::nullopt}),
                  DomainError);
}

TEST_CASE("series and recurrence agree across the parameter space") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> x_dist(0.0, 15.0);
  std::uniform_real_distribution<double> beta_dist(0.3, 5.0);
  std::uniform_real_distribution<double> cm_dist(0.05, 0.95);
  std::uniform_real_distribution<double> p_dist(0.05, 0.95);
  std::uniform_real_distribution<double> a_dist(0.2, 6.0);
  std::uniform_int_distribution<int> n_dist(0, 15);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = n_dist(rng);
    const double x = x_dist(rng);

    const ZMap meix = meixner_map(beta_dist(rng), cm_dist(rng));
    const double s1 = series_2f1_terminating(n, x, *meix.c, meix.z);
    const double r1 = recurrence_2f1(n, x, meix).values[size_t(n)];
    CHECK(std::fabs(s1 - r1) <= 1e-10 * std::fmax(1.0, std::fabs(s1)));

    const ZMap kraw = krawtchouk_map(p_dist(rng), 16 + (trial % 30));
    const double s2 = series_2f1_terminating(n, x, *kraw.c, kraw.z);
    const double r2 = recurrence_2f1(n, x, kraw).values[size_t(n)];
    CHECK(std::fabs(s2 - r2) <= 1e-10 * std::fmax(1.0, std::fabs(s2)));

    const double z0 = -1.0 / a_dist(rng);
    const double s3 = series_2f0_terminating(n, x, z0);
    const double r3 = recurrence_2f0(n, x, z0).values[size_t(n)];
    CHECK(std::fabs(s3 - r3) <= 1e-10 * std::fmax(1.0, std::fabs(s3)));
  }
}

TEST_CASE("argument-zero collapse P_n(0) = 1 for both evaluators") {
  const ZMap meix = meixner_map(1.5, 0.4);
  const PolyEval rec = recurrence_2f1(15, 0.0, meix);
  const PolyEval rec0 = recurrence_2f0(15, 0.0, -1.0 / 2.0);
  for (int n = 0; n <= 15; ++n) {
    CHECK(std::fabs(rec.values[size_t(n)] - 1.0) <= 1e-13);
    CHECK(std::fabs(rec0.values[size_t(n)] - 1.0) <= 1e-13);
    CHECK(series_2f1_terminating(n, 0.0, 1.5, meix.z) == 1.0);
    CHECK(series_2f0_terminating(n, 0.0, -0.5) == 1.0);
  }
}

TEST_CASE("dtheta_poly trivial cases") {
  const ZMap map = meixner_map(1.0, 0.5);
  CHECK(dtheta_poly(0, 2.0, map, recurrence_2f1(0, 2.0, map)) == 0.0);
  // P_1(0) = P_0(0) = 1, so the bracket vanishes
  CHECK(dtheta_poly(1, 0.0, map, recurrence_2f1(1, 0.0, map)) == 0.0);
}

TEST_CASE("dtheta_poly matches a central finite difference in theta") {
  // Charlier a = 1.5 at n = 2, x = 1.3; z(a) = -1/a
  const double a = 1.5, x = 1.3, h = 1e-5;
  const int n = 2;
  const ZMap map{-1.0 / a, 1.0 / (a * a), std::nullopt};
  const double analytic = dtheta_poly(n, x, map, recurrence_2f0(n, x, map.z));
  const double plus = series_2f0_terminating(n, x, -1.0 / (a + h));
  const double minus = series_2f0_terminating(n, x, -1.0 / (a - h));
  const double fd = (plus - minus) / (2.0 * h);
  CHECK(std::fabs(analytic - fd) <= 1e-6 * std::fmax(1.0, std::fabs(analytic)));
}

TEST_CASE("dtheta_poly rejects inconsistent input") {
  const ZMap map = meixner_map(1.0, 0.5);
  const PolyEval p = recurrence_2f1(3, 2.0, map);
  CHECK_THROWS_AS(dtheta_poly(4, 2.0, map, p), DomainError); // degree too low
  CHECK_THROWS_AS(dtheta_poly(2, 1.0, map, p), DomainError); // different x
  CHECK_THROWS_AS(dtheta_poly(2, 2.0, ZMap{0.0, 1.0, 1.0}, p), DomainError);
}
