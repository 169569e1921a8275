#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyfisher/fisher.hpp"

namespace polyfisher {

/// One oracle check: residual against tolerance.
struct CheckResult {
  std::string check;
  FamilySpec family;
  int n = 0;
  std::optional<int> m; ///< second degree index where applicable
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Tolerances follow the oracle error budgets: truncated discrete sums at
/// 1e-8, exact finite (Krawtchouk) sums at 1e-10, quadrature and finite
/// differences at 1e-6.
struct VerifyConfig {
  double tol_discrete = 1e-8;
  double tol_exact = 1e-10;
  double tol_quad = 1e-6;
  double tol_fd = 1e-6;
  double tol_series = 1e-10;
  TruncationPolicy policy{};
  QuadratureConfig quad{};
};

/// | sum_x P_n P_m rho - h_n delta_{nm} | / max(h_n, h_m), by truncated
/// sum, exact finite sum (Krawtchouk) or quadrature (Meixner-Pollaczek).
CheckResult check_orthogonality(const FamilySpec& spec, int n, int m,
                                const VerifyConfig& config = {});

/// | sum_x rho_n(x) - 1 |.
CheckResult check_normalization(const FamilySpec& spec, int n,
                                const VerifyConfig& config = {});

/// Analytic dP_n/dtheta against the symmetric finite difference of the
/// series evaluation in theta. h <= 0 selects the default step
/// 1e-5 * max(1, |theta|). Residual is relative to max(1, |analytic|).
CheckResult check_derivative_fd(const FamilySpec& spec, int n, double x,
                                double h = 0.0,
                                const VerifyConfig& config = {});

/// rel_err of the FisherReport for (spec, n).
CheckResult check_fisher_agreement(const FamilySpec& spec, int n,
                                   const VerifyConfig& config = {});

/// max over xs of |series - recurrence| / max(1, |series|) at degree n.
CheckResult check_series_recurrence(const FamilySpec& spec, int n,
                                    std::span<const double> xs,
                                    const VerifyConfig& config = {});

/// The full default grid over all four families. Deterministic: repeated
/// runs produce bitwise-identical residuals.
std::vector<CheckResult> run_standard_grid(const VerifyConfig& config = {});

/// One JSON object per line:
/// {"check":...,"family":...,"params":{...},"n":...,"m":...,"residual":...,
///  "tol":...,"passed":...}
std::string to_jsonl(const CheckResult& result);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace polyfisher
