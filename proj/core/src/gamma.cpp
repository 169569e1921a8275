#include "polyfisher/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "polyfisher/errors.hpp"

namespace polyfisher {

namespace {

// Godfrey's coefficient set for g = 7.
constexpr double kG = 7.0;
constexpr std::array<double, 9> kCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (!(z.real() > 0.0))
    throw DomainError("log_gamma: requires Re(z) > 0");
  // The kernel loses accuracy below Re(z) = 0.5; shift up with
  // Gamma(z) = Gamma(z + 1) / z instead of reflecting.
  if (z.real() < 0.5)
    return log_gamma(z + 1.0) - std::log(z);
  const std::complex<double> w = z - 1.0;
  std::complex<double> series = kCoef[0];
  for (int i = 1; i < static_cast<int>(kCoef.size()); ++i)
    series += kCoef[i] / (w + static_cast<double>(i));
  const std::complex<double> t = w + (kG + 0.5);
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return half_log_two_pi + (w + 0.5) * std::log(t) - t + std::log(series);
}

double log_abs_gamma_sq(double lambda, double x) {
  if (!(lambda > 0.0))
    throw DomainError("log_abs_gamma_sq: requires lambda > 0");
  return 2.0 * log_gamma({lambda, x}).real();
}

double abs_gamma_sq(double lambda, double x) {
  return std::exp(log_abs_gamma_sq(lambda, x));
}

} // namespace polyfisher
