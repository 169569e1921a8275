#include "polyfisher/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "polyfisher/errors.hpp"

namespace polyfisher {

namespace {

constexpr double kPi = std::numbers::pi;

double sum_tolerance(const FamilySpec& spec, const VerifyConfig& config) {
  if (std::holds_alternative<Krawtchouk>(spec))
    return config.tol_exact;
  if (is_discrete(spec))
    return config.tol_discrete;
  return config.tol_quad;
}

double family_theta(const FamilySpec& spec) {
  if (const auto* m = std::get_if<Meixner>(&spec))
    return m->c_m;
  if (const auto* k = std::get_if<Krawtchouk>(&spec))
    return k->p;
  if (const auto* c = std::get_if<Charlier>(&spec))
    return c->a;
  return std::get<MeixnerPollaczek>(spec).phi;
}

FamilySpec with_theta(const FamilySpec& spec, double theta) {
  if (const auto* m = std::get_if<Meixner>(&spec))
    return Meixner{m->beta, theta};
  if (const auto* k = std::get_if<Krawtchouk>(&spec))
    return Krawtchouk{theta, k->N};
  if (std::holds_alternative<Charlier>(spec))
    return Charlier{theta};
  return MeixnerPollaczek{std::get<MeixnerPollaczek>(spec).lambda, theta};
}

// P_n(x) P_m(x) rho(x) scaled by exp(-log_scale); one recurrence pass
// serves both degrees.
double scaled_cross_term(const FamilySpec& spec, int n, int m, double x,
                         double log_scale) {
  const PolyEval polys = poly_values(spec, std::max(n, m), x);
  const double pn = polys.values[static_cast<size_t>(n)];
  const double pm = polys.values[static_cast<size_t>(m)];
  if (pn == 0.0 || pm == 0.0)
    return 0.0;
  const double mag = std::exp(std::log(std::fabs(pn)) + std::log(std::fabs(pm)) +
                              log_weight(spec, x) - log_scale);
  return std::signbit(pn) == std::signbit(pm) ? mag : -mag;
}

} // namespace

CheckResult check_orthogonality(const FamilySpec& spec, int n, int m,
                                const VerifyConfig& config) {
  validate(spec);
  const double log_hn = log_norm_h(spec, n);
  const double log_hm = log_norm_h(spec, m);
  const double log_hmax = std::fmax(log_hn, log_hm);
  const double target = n == m ? std::exp(log_hn - log_hmax) : 0.0;
  double sum = 0.0;
  bool converged = true;
  if (const auto* k = std::get_if<Krawtchouk>(&spec)) {
    for (int x = 0; x <= k->N; ++x)
      sum += scaled_cross_term(spec, n, m, x, log_hmax);
  } else if (is_discrete(spec)) {
    const SumResult r = truncated_sum(
        [&](long x) {
          return scaled_cross_term(spec, n, m, static_cast<double>(x), log_hmax);
        },
        config.policy, /*scale=*/1.0);
    sum = r.value;
    converged = r.converged;
  } else {
    const QuadResult r = integrate_real_line(
        [&](double x) { return scaled_cross_term(spec, n, m, x, log_hmax); },
        config.quad);
    sum = r.value;
    converged = r.converged;
  }
  const double tol = sum_tolerance(spec, config);
  const double residual = std::fabs(sum - target);
  return {"orthogonality", spec, n, m, residual, tol,
          converged && residual <= tol};
}

CheckResult check_normalization(const FamilySpec& spec, int n,
                                const VerifyConfig& config) {
  validate(spec);
  double sum = 0.0;
  bool converged = true;
  if (const auto* k = std::get_if<Krawtchouk>(&spec)) {
    for (int x = 0; x <= k->N; ++x)
      sum += density_rho_n(spec, n, x).rho_n;
  } else if (is_discrete(spec)) {
    const SumResult r = truncated_sum(
        [&](long x) {
          return density_rho_n(spec, n, static_cast<double>(x)).rho_n;
        },
        config.policy, /*scale=*/1.0);
    sum = r.value;
    converged = r.converged;
  } else {
    const QuadResult r = integrate_real_line(
        [&](double x) { return density_rho_n(spec, n, x).rho_n; }, config.quad);
    sum = r.value;
    converged = r.converged;
  }
  const double tol = sum_tolerance(spec, config);
  const double residual = std::fabs(sum - 1.0);
  return {"normalization", spec, n, std::nullopt, residual, tol,
          converged && residual <= tol};
}

CheckResult check_derivative_fd(const FamilySpec& spec, int n, double x,
                                double h, const VerifyConfig& config) {
  validate(spec);
  const double theta = family_theta(spec);
  if (h <= 0.0)
    h = 1e-5 * std::fmax(1.0, std::fabs(theta));
  const double analytic = dtheta_value(spec, n, x);
  // Symmetric 5-point stencil: the plain central difference leaves only
  // O(h^2 P''') accuracy, too coarse against a 1e-6 budget once the
  // theta-derivatives grow (Krawtchouk at small p).
  const auto at = [&](double t) {
    return poly_value_series(with_theta(spec, t), n, x);
  };
  const double fd = (8.0 * (at(theta + h) - at(theta - h)) -
                     (at(theta + 2.0 * h) - at(theta - 2.0 * h))) /
                    (12.0 * h);
  const double residual =
      std::fabs(analytic - fd) / std::fmax(1.0, std::fabs(analytic));
  return {"derivative_fd", spec, n, std::nullopt, residual, config.tol_fd,
          residual <= config.tol_fd};
}

CheckResult check_fisher_agreement(const FamilySpec& spec, int n,
                                   const VerifyConfig& config) {
  const FisherReport report = fisher_numeric(spec, n, config.policy, config.quad);
  const double tol = sum_tolerance(spec, config);
  return {"fisher_agreement", spec, n, std::nullopt, report.rel_err, tol,
          report.converged && report.rel_err <= tol};
}

CheckResult check_series_recurrence(const FamilySpec& spec, int n,
                                    std::span<const double> xs,
                                    const VerifyConfig& config) {
  validate(spec);
  double worst = 0.0;
  for (const double x : xs) {
    const double series = poly_value_series(spec, n, x);
    const double recur = poly_values(spec, n, x).values[static_cast<size_t>(n)];
    const double residual =
        std::fabs(series - recur) / std::fmax(1.0, std::fabs(series));
    worst = std::fmax(worst, residual);
  }
  return {"series_recurrence", spec, n, std::nullopt, worst, config.tol_series,
          worst <= config.tol_series};
}

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    out[static_cast<size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return out;
}

// x points for the finite-difference derivative checks.
std::vector<double> derivative_points(const FamilySpec& spec) {
  if (const auto* k = std::get_if<Krawtchouk>(&spec)) {
    const double N = k->N;
    return {0.0, 0.25 * N, 0.5 * N, 0.75 * N, N};
  }
  if (is_discrete(spec))
    return {0.0, 1.5, 3.0, 7.5, 12.0};
  return {-6.0, -1.5, 0.7, 2.5, 8.0};
}

std::vector<double> series_points(const FamilySpec& spec) {
  if (const auto* k = std::get_if<Krawtchouk>(&spec))
    return linspace(0.0, k->N, 20);
  if (is_discrete(spec))
    return linspace(0.0, 15.0, 20);
  return linspace(-10.0, 10.0, 20);
}

std::vector<FamilySpec> standard_specs() {
  std::vector<FamilySpec> specs;
  for (const double a : {0.5, 1.0, 2.0, 5.0})
    specs.push_back(Charlier{a});
  for (const double beta : {0.5, 1.0, 3.5})
    for (const double c_m : {0.1, 0.5, 0.9})
      specs.push_back(Meixner{beta, c_m});
  for (const int N : {5, 10, 50})
    for (const double p : {0.1, 0.5, 0.9})
      specs.push_back(Krawtchouk{p, N});
  for (const double lambda : {0.5, 1.0, 2.0})
    for (const double phi : {kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0})
      specs.push_back(MeixnerPollaczek{lambda, phi});
  return specs;
}

int degree_cap(const FamilySpec& spec, int wanted) {
  if (const auto* k = std::get_if<Krawtchouk>(&spec))
    return std::min(wanted, k->N);
  return wanted;
}

} // namespace

std::vector<CheckResult> run_standard_grid(const VerifyConfig& config) {
  std::vector<CheckResult> results;
  for (const FamilySpec& spec : standard_specs()) {
    const int n_pairs = degree_cap(spec, 10);
    for (int n = 0; n <= n_pairs; ++n)
      for (int m = n; m <= n_pairs; ++m)
        results.push_back(check_orthogonality(spec, n, m, config));
    for (int n = 0; n <= n_pairs; ++n)
      results.push_back(check_normalization(spec, n, config));
    for (int n = 1; n <= n_pairs; ++n) {
      CheckResult worst;
      for (const double x : derivative_points(spec)) {
        CheckResult r = check_derivative_fd(spec, n, x, 0.0, config);
        if (worst.check.empty() || r.residual > worst.residual)
          worst = std::move(r);
      }
      results.push_back(std::move(worst));
    }
    int n_fisher = std::holds_alternative<MeixnerPollaczek>(spec) ? 8 : 10;
    if (const auto* k = std::get_if<Krawtchouk>(&spec))
      n_fisher = std::min(n_fisher, k->N - 1);
    for (int n = 0; n <= n_fisher; ++n)
      results.push_back(check_fisher_agreement(spec, n, config));
    const std::vector<double> xs = series_points(spec);
    const int n_series = degree_cap(spec, 15);
    for (int n = 0; n <= n_series; ++n)
      results.push_back(check_series_recurrence(spec, n, xs, config));
  }
  return results;
}

std::string to_jsonl(const CheckResult& result) {
  nlohmann::ordered_json params;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Meixner>) {
          params["beta"] = f.beta;
          params["c_M"] = f.c_m;
        } else if constexpr (std::is_same_v<T, Krawtchouk>) {
          params["N"] = f.N;
          params["p"] = f.p;
        } else if constexpr (std::is_same_v<T, Charlier>) {
          params["a"] = f.a;
        } else {
          params["lambda"] = f.lambda;
          params["phi"] = f.phi;
        }
      },
      result.family);
  nlohmann::ordered_json line;
  line["check"] = result.check;
  line["family"] = std::string(family_name(result.family));
  line["params"] = params;
  line["n"] = result.n;
  if (result.m)
    line["m"] = *result.m;
  else
    line["m"] = nullptr;
  line["residual"] = result.residual;
  line["tol"] = result.tolerance;
  line["passed"] = result.passed;
  return line.dump();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

} // namespace polyfisher
