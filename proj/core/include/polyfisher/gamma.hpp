#pragma once

#include <complex>

namespace polyfisher {

/// ln Gamma(z) for Re(z) > 0 by a Lanczos rational approximation (g = 7,
/// 9 coefficients). The real part is accurate to ~13 significant digits;
/// the imaginary part is continuous in the approximation, not reduced to
/// the principal branch.
std::complex<double> log_gamma(std::complex<double> z);

/// ln |Gamma(lambda + ix)|^2 for lambda > 0. Even in x.
double log_abs_gamma_sq(double lambda, double x);

/// |Gamma(lambda + ix)|^2. Decays like exp(-pi |x|); may underflow to 0
/// for |x| of a few hundred, where the log form stays finite.
double abs_gamma_sq(double lambda, double x);

} // namespace polyfisher
