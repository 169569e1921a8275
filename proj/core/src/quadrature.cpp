#include "polyfisher/quadrature.hpp"

#include <cmath>
#include <limits>

#include "polyfisher/errors.hpp"

namespace polyfisher {

namespace {

struct Workspace {
  const std::function<double(double)>& f;
  long evals = 0;
  bool depth_exhausted = false;

  double eval(double x) {
    ++evals;
    return f(x);
  }
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(Workspace& ws, double a, double m, double b, double fa, double fm,
             double fb, double whole, double eps, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = ws.eval(lm);
  const double frm = ws.eval(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * eps)
    return left + right + delta / 15.0;
  if (depth <= 0) {
    ws.depth_exhausted = true;
    return left + right + delta / 15.0;
  }
  return adapt(ws, a, lm, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adapt(ws, m, rm, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

// Coarse composite Simpson pass; also estimates integral of |f| to give
// near-cancelling integrands a usable error scale.
void coarse_scan(Workspace& ws, double lo, double hi, int panels,
                 double& integral, double& abs_integral) {
  const double h = (hi - lo) / panels;
  integral = 0.0;
  abs_integral = 0.0;
  double fa = ws.eval(lo);
  for (int i = 0; i < panels; ++i) {
    const double a = lo + i * h;
    const double b = a + h;
    const double fm = ws.eval(0.5 * (a + b));
    const double fb = ws.eval(b);
    integral += simpson(a, b, fa, fm, fb);
    abs_integral += simpson(a, b, std::fabs(fa), std::fabs(fm), std::fabs(fb));
    fa = fb;
  }
}

constexpr int kCoarsePanels = 128;
constexpr int kSegments = 16;
constexpr int kMaxDepth = 32;

double integrate_fixed_width(Workspace& ws, double half_width, double eps_rel,
                             double& scale_out) {
  double rough = 0.0;
  double rough_abs = 0.0;
  coarse_scan(ws, -half_width, half_width, kCoarsePanels, rough, rough_abs);
  const double scale = std::fmax(std::fabs(rough), rough_abs);
  scale_out = scale;
  const double eps_total =
      std::fmax(eps_rel * scale, std::numeric_limits<double>::min());
  const double h = 2.0 * half_width / kSegments;
  double total = 0.0;
  for (int i = 0; i < kSegments; ++i) {
    const double a = -half_width + i * h;
    const double b = a + h;
    const double m = 0.5 * (a + b);
    const double fa = ws.eval(a);
    const double fm = ws.eval(m);
    const double fb = ws.eval(b);
    const double whole = simpson(a, b, fa, fm, fb);
    total += adapt(ws, a, m, b, fa, fm, fb, whole, eps_total / kSegments,
                   kMaxDepth);
  }
  return total;
}

} // namespace

QuadResult integrate_real_line(const std::function<double(double)>& f,
                               const QuadratureConfig& config) {
  if (!(config.initial_half_width > 0.0) || !(config.panel_rel_tol > 0.0) ||
      config.max_doublings < 0)
    throw DomainError("integrate_real_line: invalid config");
  Workspace ws{f};
  double half_width = config.initial_half_width;
  for (int doubling = 0;; ++doubling) {
    double scale = 0.0;
    const double value = integrate_fixed_width(ws, half_width,
                                               config.panel_rel_tol, scale);
    const double edge = std::fmax(std::fabs(ws.eval(-half_width)),
                                  std::fabs(ws.eval(half_width)));
    const bool tail_done = edge == 0.0 || edge < config.panel_rel_tol * scale;
    if (tail_done)
      return {value, ws.evals, !ws.depth_exhausted};
    if (doubling >= config.max_doublings)
      return {value, ws.evals, false};
    half_width *= 2.0;
    ws.depth_exhausted = false;
  }
}

} // namespace polyfisher
