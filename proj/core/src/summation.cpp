#include "polyfisher/summation.hpp"

#include <cmath>
#include <limits>

#include "polyfisher/errors.hpp"

namespace polyfisher {

SumResult truncated_sum(const std::function<double(long)>& term,
                        const TruncationPolicy& policy, double scale) {
  if (!(policy.rel_tol > 0.0) || policy.max_terms <= 0 || policy.small_run <= 0)
    throw DomainError("truncated_sum: invalid policy");
  double sum = 0.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  int run = 0;
  for (long x = 0; x < policy.max_terms; ++x) {
    const double t = term(x);
    sum += t;
    const double mag = std::fabs(t);
    const double threshold =
        policy.rel_tol * std::fmax(std::fabs(sum), std::fabs(scale));
    if (mag < threshold && mag <= prev_mag) {
      if (++run >= policy.small_run)
        return {sum, x + 1, true};
    } else {
      run = 0;
    }
    prev_mag = mag;
  }
  return {sum, policy.max_terms, false};
}

} // namespace polyfisher
