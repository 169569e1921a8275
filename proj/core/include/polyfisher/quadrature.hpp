#pragma once

#include <functional>

namespace polyfisher {

/// Error control for integrals over the real line of integrands that decay
/// exponentially in both directions. Integration runs on [-X, X]; X starts
/// at initial_half_width and doubles (at most max_doublings times) until the
/// integrand at both endpoints is below panel_rel_tol times the integral's
/// scale.
struct QuadratureConfig {
  double initial_half_width = 40.0;
  int max_doublings = 6;
  double panel_rel_tol = 1e-9;
};

struct QuadResult {
  double value = 0.0;
  long evals = 0;
  bool converged = false;
};

/// Composite adaptive Simpson over [-X, X] with the doubling rule above.
QuadResult integrate_real_line(const std::function<double(double)>& f,
                               const QuadratureConfig& config);

} // namespace polyfisher
