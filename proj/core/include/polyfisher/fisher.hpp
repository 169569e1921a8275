#pragma once

#include <string>

#include "polyfisher/families.hpp"
#include "polyfisher/quadrature.hpp"
#include "polyfisher/summation.hpp"

namespace polyfisher {

/// One closed-form-versus-numeric comparison for a (family, degree) pair.
struct FisherReport {
  FamilySpec family;
  int n = 0;
  std::string theta_name; ///< "c_M", "p", "a" or "phi"
  double numeric = 0.0;
  double closed = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0; ///< abs_err / max(1, |closed|)
  long effort = 0;      ///< summand terms or integrand evaluations
  bool converged = false;
};

/// The Fisher information summand [d rho_n / d theta]^2 / rho_n at one
/// support point, evaluated in the bracketed cancellation-free form, so
/// zeros of P_n never divide by zero:
///   2F1 families: (z'/(z(z-1)))^2 rho(x)/h_n [(n+c) P_{n+1} + n(z-1) P_{n-1}]^2
///   2F0 family:   (z'/z^2)^2     rho(x)/h_n [P_{n+1} + n z P_{n-1}]^2
///   Meixner-Pollaczek: rho(x)/(h_n sin^2 phi) [(n+1) P_{n+1} - (n+2 lambda-1) P_{n-1}]^2
double fisher_summand(const FamilySpec& spec, int n, double x);

/// Fisher information by truncated summation (discrete families; exact
/// finite sum for Krawtchouk) or adaptive quadrature (Meixner-Pollaczek).
/// Convergence failure is reported through converged = false, with the best
/// available estimate in numeric. Krawtchouk requires n + 1 <= N because
/// the summand references P_{n+1}.
FisherReport fisher_numeric(const FamilySpec& spec, int n,
                            const TruncationPolicy& policy = {},
                            const QuadratureConfig& quad = {});

/// Per-family closed forms:
///   Meixner           (2n^2 + (2n+1) beta) / (c_M (c_M - 1)^2)
///   Krawtchouk        (2n^2 - (2n+1) N) / (p (p - 1)),  n <= N
///   Charlier          (2n + 1) / a
///   Meixner-Pollaczek 2 (n^2 + (2n+1) lambda) / sin^2(phi)
double fisher_closed(const FamilySpec& spec, int n);

/// Generic closed form from the substitution alone:
///   2F1: (z'/z)^2 (1-z)^{-1} (2n^2 + (2n+1) c)
///   2F0: -(z'/z)^2 (2n+1) / z
/// Must agree with fisher_closed on each family's own ZMap.
double fisher_closed_generic(const ZMap& map, int n);

struct NegBinomial {
  double r;
  double p;
};
struct Binomial {
  int N;
  double p;
};
struct Poisson {
  double lambda;
};

/// Fisher information of the base distributions: r/(p(1-p)^2), N/(p(1-p)),
/// 1/lambda. These are the n = 0 cases of the polynomial families.
double distribution_fisher(const NegBinomial& d);
double distribution_fisher(const Binomial& d);
double distribution_fisher(const Poisson& d);

/// Brute-force score-squared sums of the same quantities, for testing.
SumResult distribution_fisher_sum(const NegBinomial& d,
                                  const TruncationPolicy& policy = {});
SumResult distribution_fisher_sum(const Binomial& d);
SumResult distribution_fisher_sum(const Poisson& d,
                                  const TruncationPolicy& policy = {});

} // namespace polyfisher
