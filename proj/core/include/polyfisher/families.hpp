#pragma once

#include <string_view>
#include <variant>

#include "polyfisher/hypergeom.hpp"

namespace polyfisher {

/// Meixner M_n(x; beta, c_M): beta > 0, 0 < c_M < 1. The Meixner parameter
/// is spelled c_m to keep it apart from the generic 2F1 denominator c.
struct Meixner {
  double beta;
  double c_m;
};

/// Krawtchouk K_n(x; p, N): 0 < p < 1, support {0, ..., N}, degrees n <= N.
struct Krawtchouk {
  double p;
  int N;
};

/// Charlier C_n(x; a): a > 0.
struct Charlier {
  double a;
};

/// Meixner-Pollaczek P_n^(lambda)(x; phi): lambda > 0, 0 < phi < pi,
/// orthogonal on the whole real line.
struct MeixnerPollaczek {
  double lambda;
  double phi;
};

using FamilySpec = std::variant<Meixner, Krawtchouk, Charlier, MeixnerPollaczek>;

/// Throws DomainError unless every parameter is inside its legal range.
void validate(const FamilySpec& spec);

std::string_view family_name(const FamilySpec& spec);

/// Symbol of the parameter the Fisher information differentiates in:
/// "c_M", "p", "a" or "phi". The remaining parameters are shape constants.
std::string_view theta_name(const FamilySpec& spec);

bool is_discrete(const FamilySpec& spec);

/// True when x is a valid support point (nonnegative integers for the
/// discrete families, 0..N for Krawtchouk, any finite real otherwise).
bool in_support(const FamilySpec& spec, double x);

/// The substitution feeding the generic hypergeometric engine. Throws for
/// Meixner-Pollaczek, which does not run through the real 2F1/2F0 forms.
ZMap zmap(const FamilySpec& spec);

/// One point of the normalized density rho_n = P_n^2 rho / h_n.
struct DensityPoint {
  double x;
  double log_rho_n; ///< -inf exactly at zeros of P_n
  double rho_n;
};

/// ln rho(x) of the orthogonality weight. Discrete weights follow the
/// hypergeometric normalization (Krawtchouk: binomial(N,x) (p/(1-p))^x,
/// which equals (c)_x / ((1-z)^x x!) with c = -N, z = 1/p); the
/// Meixner-Pollaczek weight is exp((2 phi - pi) x) |Gamma(lambda+ix)|^2 / (2 pi).
double log_weight(const FamilySpec& spec, double x);

/// ln h_n of the orthogonality norm matching log_weight's normalization.
double log_norm_h(const FamilySpec& spec, int n);

/// P_0(x)..P_degree(x) by the family's three-term recurrence.
PolyEval poly_values(const FamilySpec& spec, int degree, double x);

/// P_n(x) by the terminating series representation. For Meixner-Pollaczek
/// this sums the complex 2F1 form and takes the real part, so it is an
/// independent route from the real recurrence.
double poly_value_series(const FamilySpec& spec, int n, double x);

/// Analytic dP_n/dtheta at x. Discrete families use the generic
/// n (z'/z)(P_n - P_{n-1}) formula; Meixner-Pollaczek uses
/// n cot(phi) P_n - (n + 2 lambda - 1) P_{n-1} / sin(phi).
double dtheta_value(const FamilySpec& spec, int n, double x);

/// rho_n(x) assembled in log space as 2 ln|P_n| + ln rho - ln h_n.
DensityPoint density_rho_n(const FamilySpec& spec, int n, double x);

} // namespace polyfisher
