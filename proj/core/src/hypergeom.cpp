#include "polyfisher/hypergeom.hpp"

#include <cmath>

#include "polyfisher/errors.hpp"

namespace polyfisher {

namespace {

void require_degree(int n, const char* where) {
  if (n < 0)
    throw DomainError(std::string(where) + ": degree must be nonnegative");
}

} // namespace

// Both series accumulate in extended precision: the terms alternate in sign
// for the z < 0 families and cancellation at large x would otherwise eat
// into the 1e-10 equivalence budget.

double series_2f1_terminating(int n, double x, double c, double z) {
  require_degree(n, "series_2f1_terminating");
  long double sum = 1.0L;
  long double term = 1.0L;
  for (int k = 0; k < n; ++k) {
    if (term == 0.0L)
      break; // (-x)_k vanished at an integer x < n; the sum is complete
    const long double denom = static_cast<long double>(c) + k;
    if (denom == 0.0L)
      throw DomainError("series_2f1_terminating: denominator factor (c)_k "
                        "vanishes before the series terminates");
    term *= (k - n) * (k - static_cast<long double>(x)) * z / (denom * (k + 1));
    sum += term;
  }
  return static_cast<double>(sum);
}

double series_2f0_terminating(int n, double x, double z) {
  require_degree(n, "series_2f0_terminating");
  long double sum = 1.0L;
  long double term = 1.0L;
  for (int k = 0; k < n; ++k) {
    if (term == 0.0L)
      break;
    term *= (k - n) * (k - static_cast<long double>(x)) *
            static_cast<long double>(z) / (k + 1);
    sum += term;
  }
  return static_cast<double>(sum);
}

PolyEval recurrence_2f1(int n, double x, const ZMap& map) {
  require_degree(n, "recurrence_2f1");
  if (!map.c)
    throw DomainError("recurrence_2f1: ZMap carries no denominator parameter c");
  const double c = *map.c;
  const double z = map.z;
  PolyEval out{x, n, std::vector<double>(static_cast<size_t>(n) + 1)};
  out.values[0] = 1.0;
  double prev = 0.0; // P_{-1}, entering with coefficient m = 0
  double cur = 1.0;
  for (int m = 0; m < n; ++m) {
    const double denom = m + c;
    if (denom == 0.0)
      throw DomainError("recurrence_2f1: step divides by m + c = 0");
    const double next =
        (-((m - x) * z - 2.0 * m - c) * cur + m * (z - 1.0) * prev) / denom;
    out.values[static_cast<size_t>(m) + 1] = next;
    prev = cur;
    cur = next;
  }
  return out;
}

PolyEval recurrence_2f0(int n, double x, double z) {
  require_degree(n, "recurrence_2f0");
  PolyEval out{x, n, std::vector<double>(static_cast<size_t>(n) + 1)};
  out.values[0] = 1.0;
  double prev = 0.0;
  double cur = 1.0;
  for (int m = 0; m < n; ++m) {
    const double next = -((m - x) * z - 1.0) * cur + m * z * prev;
    out.values[static_cast<size_t>(m) + 1] = next;
    prev = cur;
    cur = next;
  }
  return out;
}

double dtheta_poly(int n, double x, const ZMap& map, const PolyEval& polys) {
  require_degree(n, "dtheta_poly");
  if (n == 0)
    return 0.0;
  if (map.z == 0.0)
    throw DomainError("dtheta_poly: z = 0");
  if (polys.degree < n)
    throw DomainError("dtheta_poly: PolyEval does not reach degree n");
  if (polys.x != x)
    throw DomainError("dtheta_poly: PolyEval was taken at a different x");
  return n * (map.dz / map.z) *
         (polys.values[static_cast<size_t>(n)] -
          polys.values[static_cast<size_t>(n) - 1]);
}

} // namespace polyfisher
