#pragma once

#include <functional>

namespace polyfisher {

/// Error control for infinite sums over x = 0, 1, 2, ...
/// The stop test demands `small_run` consecutive terms that are each below
/// rel_tol times the running scale AND no larger than their predecessor, so
/// a single small term inside an interior dip of the summand does not end
/// the sum early.
struct TruncationPolicy {
  double rel_tol = 1e-12;
  long max_terms = 100000;
  int small_run = 10;
};

struct SumResult {
  double value = 0.0;
  long terms = 0;
  bool converged = false;
};

/// Sums term(0) + term(1) + ... under the policy. `scale` is an optional
/// external magnitude for the tiny-term test; it matters for sums whose
/// true value is near zero (orthogonality cross terms), where the running
/// partial sum cannot serve as its own scale.
SumResult truncated_sum(const std::function<double(long)>& term,
                        const TruncationPolicy& policy, double scale = 0.0);

} // namespace polyfisher
