#include "polyfisher/pochhammer.hpp"

#include <cmath>
#include <limits>

#include "polyfisher/errors.hpp"

namespace polyfisher {

double PochhammerValue::value() const {
  if (sign == 0)
    return 0.0;
  return sign * std::exp(log_abs);
}

PochhammerValue pochhammer(double a, int k) {
  if (k < 0)
    throw DomainError("pochhammer: k must be nonnegative");
  if (!std::isfinite(a))
    throw DomainError("pochhammer: a must be finite");
  if (k == 0)
    return {0.0, +1};
  // All factors positive: lgamma is cheaper and just as accurate.
  if (a > 0.0)
    return {std::lgamma(a + k) - std::lgamma(a), +1};
  double log_abs = 0.0;
  int sign = +1;
  for (int j = 0; j < k; ++j) {
    const double factor = a + j;
    if (factor == 0.0)
      return {-std::numeric_limits<double>::infinity(), 0};
    if (factor < 0.0)
      sign = -sign;
    log_abs += std::log(std::fabs(factor));
  }
  return {log_abs, sign};
}

double log_factorial(int n) {
  if (n < 0)
    throw DomainError("log_factorial: n must be nonnegative");
  return std::lgamma(n + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    throw DomainError("log_binomial: need 0 <= k <= n");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

} // namespace polyfisher
