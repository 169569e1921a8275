#include "polyfisher/families.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>

#include "polyfisher/errors.hpp"
#include "polyfisher/gamma.hpp"
#include "polyfisher/pochhammer.hpp"

namespace polyfisher {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonneg_integer(double x) { return x >= 0.0 && x == std::floor(x); }

void require_support(const FamilySpec& spec, double x, const char* where) {
  if (!in_support(spec, x))
    throw DomainError(std::string(where) + ": x outside the support of " +
                      std::string(family_name(spec)));
}

// Meixner-Pollaczek values by the recurrence
//   (m+1) P_{m+1} = 2 [x sin(phi) + (m+lambda) cos(phi)] P_m
//                   - (m + 2 lambda - 1) P_{m-1}.
PolyEval mp_poly_values(const MeixnerPollaczek& f, int degree, double x) {
  if (degree < 0)
    throw DomainError("poly_values: degree must be nonnegative");
  const double s = std::sin(f.phi);
  const double c = std::cos(f.phi);
  PolyEval out{x, degree, std::vector<double>(static_cast<size_t>(degree) + 1)};
  out.values[0] = 1.0;
  double prev = 0.0;
  double cur = 1.0;
  for (int m = 0; m < degree; ++m) {
    const double next =
        (2.0 * (x * s + (m + f.lambda) * c) * cur - (m + 2.0 * f.lambda - 1.0) * prev) /
        (m + 1.0);
    out.values[static_cast<size_t>(m) + 1] = next;
    prev = cur;
    cur = next;
  }
  return out;
}

// Complex terminating series
//   P_n = (2 lambda)_n / n! e^{i n phi} 2F1(-n, lambda + ix; 2 lambda; 1 - e^{-2 i phi});
// the imaginary part cancels analytically, so only the real part is kept.
// Accumulated in extended precision: the complex terms cancel heavily for
// n around 15 and |x| of a few units.
double mp_poly_series(const MeixnerPollaczek& f, int n, double x) {
  if (n < 0)
    throw DomainError("poly_value_series: degree must be nonnegative");
  using cl = std::complex<long double>;
  const long double phi = f.phi;
  const long double lambda = f.lambda;
  const cl z = 1.0L - std::exp(cl{0.0L, -2.0L * phi});
  const cl a{lambda, static_cast<long double>(x)};
  cl sum{1.0L, 0.0L};
  cl term{1.0L, 0.0L};
  for (int k = 0; k < n; ++k) {
    term *= static_cast<long double>(k - n) * (a + static_cast<long double>(k)) *
            z / ((2.0L * lambda + k) * (k + 1.0L));
    sum += term;
  }
  const long double lead = std::exp(std::lgamma(2.0 * f.lambda + n) -
                                    std::lgamma(2.0 * f.lambda) -
                                    log_factorial(n));
  const cl phase = std::polar(1.0L, n * phi);
  return static_cast<double>((lead * phase * sum).real());
}

} // namespace

void validate(const FamilySpec& spec) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Meixner>) {
          if (!(std::isfinite(f.beta) && f.beta > 0.0))
            throw DomainError("Meixner: beta must be > 0");
          if (!(std::isfinite(f.c_m) && f.c_m > 0.0 && f.c_m < 1.0))
            throw DomainError("Meixner: c_M must lie in (0, 1)");
        } else if constexpr (std::is_same_v<T, Krawtchouk>) {
          if (!(std::isfinite(f.p) && f.p > 0.0 && f.p < 1.0))
            throw DomainError("Krawtchouk: p must lie in (0, 1)");
          if (f.N < 0)
            throw DomainError("Krawtchouk: N must be nonnegative");
        } else if constexpr (std::is_same_v<T, Charlier>) {
          if (!(std::isfinite(f.a) && f.a > 0.0))
            throw DomainError("Charlier: a must be > 0");
        } else {
          if (!(std::isfinite(f.lambda) && f.lambda > 0.0))
            throw DomainError("MeixnerPollaczek: lambda must be > 0");
          if (!(std::isfinite(f.phi) && f.phi > 0.0 && f.phi < kPi))
            throw DomainError("MeixnerPollaczek: phi must lie in (0, pi)");
        }
      },
      spec);
}

std::string_view family_name(const FamilySpec& spec) {
  switch (spec.index()) {
  case 0: return "meixner";
  case 1: return "krawtchouk";
  case 2: return "charlier";
  default: return "meixner_pollaczek";
  }
}

std::string_view theta_name(const FamilySpec& spec) {
  switch (spec.index()) {
  case 0: return "c_M";
  case 1: return "p";
  case 2: return "a";
  default: return "phi";
  }
}

bool is_discrete(const FamilySpec& spec) {
  return !std::holds_alternative<MeixnerPollaczek>(spec);
}

bool in_support(const FamilySpec& spec, double x) {
  if (!std::isfinite(x))
    return false;
  if (const auto* k = std::get_if<Krawtchouk>(&spec))
    return is_nonneg_integer(x) && x <= k->N;
  if (is_discrete(spec))
    return is_nonneg_integer(x);
  return true;
}

ZMap zmap(const FamilySpec& spec) {
  if (const auto* m = std::get_if<Meixner>(&spec))
    return {1.0 - 1.0 / m->c_m, 1.0 / (m->c_m * m->c_m), m->beta};
  if (const auto* k = std::get_if<Krawtchouk>(&spec))
    return {1.0 / k->p, -1.0 / (k->p * k->p), static_cast<double>(-k->N)};
  if (const auto* c = std::get_if<Charlier>(&spec))
    return {-1.0 / c->a, 1.0 / (c->a * c->a), std::nullopt};
  throw DomainError("zmap: Meixner-Pollaczek has no real 2F1/2F0 substitution");
}

double log_weight(const FamilySpec& spec, double x) {
  require_support(spec, x, "log_weight");
  if (const auto* m = std::get_if<Meixner>(&spec)) {
    // (beta)_x c_M^x / x!
    return std::lgamma(m->beta + x) - std::lgamma(m->beta) +
           x * std::log(m->c_m) - std::lgamma(x + 1.0);
  }
  if (const auto* k = std::get_if<Krawtchouk>(&spec)) {
    // binomial(N, x) (p/(1-p))^x, positive on the whole support
    return log_binomial(k->N, static_cast<int>(x)) +
           x * std::log(k->p / (1.0 - k->p));
  }
  if (const auto* c = std::get_if<Charlier>(&spec)) {
    // a^x / x!
    return x * std::log(c->a) - std::lgamma(x + 1.0);
  }
  const auto& f = std::get<MeixnerPollaczek>(spec);
  return (2.0 * f.phi - kPi) * x + log_abs_gamma_sq(f.lambda, x) -
         std::log(2.0 * kPi);
}

double log_norm_h(const FamilySpec& spec, int n) {
  if (n < 0)
    throw DomainError("log_norm_h: n must be nonnegative");
  if (const auto* m = std::get_if<Meixner>(&spec)) {
    // (1-c_M)^{-beta} c_M^{-n} n! / (beta)_n
    return -m->beta * std::log1p(-m->c_m) - n * std::log(m->c_m) +
           log_factorial(n) - (std::lgamma(m->beta + n) - std::lgamma(m->beta));
  }
  if (const auto* k = std::get_if<Krawtchouk>(&spec)) {
    if (n > k->N)
      throw DomainError("log_norm_h: Krawtchouk needs n <= N");
    // (1-p)^{-N} ((1-p)/p)^n / binomial(N, n)
    return -k->N * std::log1p(-k->p) + n * std::log((1.0 - k->p) / k->p) -
           log_binomial(k->N, n);
  }
  if (const auto* c = std::get_if<Charlier>(&spec)) {
    // a^{-n} n! e^a
    return -n * std::log(c->a) + log_factorial(n) + c->a;
  }
  const auto& f = std::get<MeixnerPollaczek>(spec);
  // Gamma(n + 2 lambda) / ((2 sin phi)^{2 lambda} n!)
  return std::lgamma(n + 2.0 * f.lambda) -
         2.0 * f.lambda * std::log(2.0 * std::sin(f.phi)) - log_factorial(n);
}

namespace {

// The discrete families' hypergeometric forms are symmetric in degree and
// argument. Upward recurrence in the degree loses relative accuracy once
// the degree passes an integer argument (the wanted solution stops being
// dominant), so entries with k > x are evaluated with the two roles
// swapped: P_k(x) = P_x(k).
void stabilize_high_degrees(PolyEval& out, double x,
                            const std::function<double(int, double)>& swapped) {
  if (!(x >= 0.0 && x == std::floor(x) && x < out.degree))
    return;
  const int xi = static_cast<int>(x);
  for (int k = xi + 1; k <= out.degree; ++k)
    out.values[static_cast<size_t>(k)] = swapped(xi, static_cast<double>(k));
}

// Krawtchouk values at integer support points. Beyond the degree/argument
// swap, arguments in the upper half of the support reflect through the
// Pfaff identity K_n(x; p, N) = ((p-1)/p)^n K_n(N-x; 1-p, N): for p > 1/2
// and x near N the wanted values are exponentially small in both
// recurrence directions, while on the reflected side the small magnitude
// enters through the exact prefactor instead of cancellation.
PolyEval kraw_poly_values(const Krawtchouk& fam, int degree, double x) {
  const ZMap map{1.0 / fam.p, -1.0 / (fam.p * fam.p),
                 static_cast<double>(-fam.N)};
  const bool on_support = x >= 0.0 && x == std::floor(x) && x <= fam.N;
  if (!on_support)
    return recurrence_2f1(degree, x, map);
  const int xi = static_cast<int>(x);
  if (2 * xi > fam.N) {
    PolyEval out =
        kraw_poly_values(Krawtchouk{1.0 - fam.p, fam.N}, degree, fam.N - xi);
    out.x = x;
    const double ratio = (fam.p - 1.0) / fam.p;
    double factor = 1.0;
    for (int k = 0; k <= degree; ++k) {
      out.values[static_cast<size_t>(k)] *= factor;
      factor *= ratio;
    }
    return out;
  }
  PolyEval out = recurrence_2f1(degree, x, map);
  stabilize_high_degrees(out, x, [&](int d, double arg) {
    return recurrence_2f1(d, arg, map).values[static_cast<size_t>(d)];
  });
  return out;
}

} // namespace

PolyEval poly_values(const FamilySpec& spec, int degree, double x) {
  if (const auto* c = std::get_if<Charlier>(&spec)) {
    const double z = -1.0 / c->a;
    PolyEval out = recurrence_2f0(degree, x, z);
    stabilize_high_degrees(out, x, [&](int d, double arg) {
      return recurrence_2f0(d, arg, z).values[static_cast<size_t>(d)];
    });
    return out;
  }
  if (const auto* f = std::get_if<MeixnerPollaczek>(&spec))
    return mp_poly_values(*f, degree, x);
  if (const auto* k = std::get_if<Krawtchouk>(&spec))
    return kraw_poly_values(*k, degree, x);
  const ZMap map = zmap(spec);
  PolyEval out = recurrence_2f1(degree, x, map);
  stabilize_high_degrees(out, x, [&](int d, double arg) {
    return recurrence_2f1(d, arg, map).values[static_cast<size_t>(d)];
  });
  return out;
}

double poly_value_series(const FamilySpec& spec, int n, double x) {
  if (const auto* c = std::get_if<Charlier>(&spec))
    return series_2f0_terminating(n, x, -1.0 / c->a);
  if (const auto* f = std::get_if<MeixnerPollaczek>(&spec))
    return mp_poly_series(*f, n, x);
  const ZMap map = zmap(spec);
  return series_2f1_terminating(n, x, *map.c, map.z);
}

double dtheta_value(const FamilySpec& spec, int n, double x) {
  if (n < 0)
    throw DomainError("dtheta_value: n must be nonnegative");
  if (n == 0)
    return 0.0;
  const PolyEval polys = poly_values(spec, n, x);
  if (const auto* f = std::get_if<MeixnerPollaczek>(&spec)) {
    const double pn = polys.values[static_cast<size_t>(n)];
    const double pn1 = polys.values[static_cast<size_t>(n) - 1];
    return n * (std::cos(f->phi) / std::sin(f->phi)) * pn -
           (n + 2.0 * f->lambda - 1.0) / std::sin(f->phi) * pn1;
  }
  return dtheta_poly(n, x, zmap(spec), polys);
}

DensityPoint density_rho_n(const FamilySpec& spec, int n, double x) {
  require_support(spec, x, "density_rho_n");
  const PolyEval polys = poly_values(spec, n, x);
  const double pn = polys.values[static_cast<size_t>(n)];
  if (pn == 0.0)
    return {x, -std::numeric_limits<double>::infinity(), 0.0};
  const double log_rho =
      2.0 * std::log(std::fabs(pn)) + log_weight(spec, x) - log_norm_h(spec, n);
  return {x, log_rho, std::exp(log_rho)};
}

} // namespace polyfisher
