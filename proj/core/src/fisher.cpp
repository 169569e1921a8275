#include "polyfisher/fisher.hpp"

#include <cmath>

#include "polyfisher/errors.hpp"
#include "polyfisher/pochhammer.hpp"

namespace polyfisher {

namespace {

void require_valid_degree(const FamilySpec& spec, int n, bool needs_next,
                          const char* where) {
  if (n < 0)
    throw DomainError(std::string(where) + ": n must be nonnegative");
  if (const auto* k = std::get_if<Krawtchouk>(&spec)) {
    const int limit = needs_next ? k->N - 1 : k->N;
    if (n > limit)
      throw DomainError(std::string(where) +
                        (needs_next ? ": Krawtchouk needs n + 1 <= N"
                                    : ": Krawtchouk needs n <= N"));
  }
}

// Bracket B(x) and the log of the squared prefactor, per family class.
struct SummandParts {
  double log_prefactor_sq;
  double bracket;
};

SummandParts summand_parts(const FamilySpec& spec, int n, double x) {
  const PolyEval polys = poly_values(spec, n + 1, x);
  const double p_next = polys.values[static_cast<size_t>(n) + 1];
  const double p_prev =
      n > 0 ? polys.values[static_cast<size_t>(n) - 1] : 0.0;
  if (const auto* f = std::get_if<MeixnerPollaczek>(&spec)) {
    const double bracket =
        (n + 1.0) * p_next - (n + 2.0 * f->lambda - 1.0) * p_prev;
    return {-2.0 * std::log(std::sin(f->phi)), bracket};
  }
  const ZMap map = zmap(spec);
  if (map.c) {
    const double bracket =
        (n + *map.c) * p_next + n * (map.z - 1.0) * p_prev;
    const double lp = std::log(std::fabs(map.dz)) - std::log(std::fabs(map.z)) -
                      std::log(std::fabs(map.z - 1.0));
    return {2.0 * lp, bracket};
  }
  const double bracket = p_next + n * map.z * p_prev;
  const double lp =
      std::log(std::fabs(map.dz)) - 2.0 * std::log(std::fabs(map.z));
  return {2.0 * lp, bracket};
}

} // namespace

double fisher_summand(const FamilySpec& spec, int n, double x) {
  if (!in_support(spec, x))
    throw DomainError("fisher_summand: x outside support");
  require_valid_degree(spec, n, /*needs_next=*/true, "fisher_summand");
  const SummandParts parts = summand_parts(spec, n, x);
  if (parts.bracket == 0.0)
    return 0.0;
  const double log_value = parts.log_prefactor_sq + log_weight(spec, x) -
                           log_norm_h(spec, n) +
                           2.0 * std::log(std::fabs(parts.bracket));
  return std::exp(log_value);
}

FisherReport fisher_numeric(const FamilySpec& spec, int n,
                            const TruncationPolicy& policy,
                            const QuadratureConfig& quad) {
  validate(spec);
  require_valid_degree(spec, n, /*needs_next=*/true, "fisher_numeric");
  FisherReport report;
  report.family = spec;
  report.n = n;
  report.theta_name = std::string(theta_name(spec));
  report.closed = fisher_closed(spec, n);
  if (const auto* k = std::get_if<Krawtchouk>(&spec)) {
    double sum = 0.0;
    for (int x = 0; x <= k->N; ++x)
      sum += fisher_summand(spec, n, x);
    report.numeric = sum;
    report.effort = k->N + 1;
    report.converged = true;
  } else if (is_discrete(spec)) {
    const SumResult sum = truncated_sum(
        [&](long x) {
          return fisher_summand(spec, n, static_cast<double>(x));
        },
        policy);
    report.numeric = sum.value;
    report.effort = sum.terms;
    report.converged = sum.converged;
  } else {
    const QuadResult integral = integrate_real_line(
        [&](double x) { return fisher_summand(spec, n, x); }, quad);
    report.numeric = integral.value;
    report.effort = integral.evals;
    report.converged = integral.converged;
  }
  report.abs_err = std::fabs(report.numeric - report.closed);
  report.rel_err = report.abs_err / std::fmax(1.0, std::fabs(report.closed));
  return report;
}

double fisher_closed(const FamilySpec& spec, int n) {
  validate(spec);
  require_valid_degree(spec, n, /*needs_next=*/false, "fisher_closed");
  if (const auto* m = std::get_if<Meixner>(&spec)) {
    const double c = m->c_m;
    return (2.0 * n * n + (2.0 * n + 1.0) * m->beta) / (c * (c - 1.0) * (c - 1.0));
  }
  if (const auto* k = std::get_if<Krawtchouk>(&spec)) {
    return (2.0 * n * n - (2.0 * n + 1.0) * k->N) / (k->p * (k->p - 1.0));
  }
  if (const auto* c = std::get_if<Charlier>(&spec)) {
    return (2.0 * n + 1.0) / c->a;
  }
  const auto& f = std::get<MeixnerPollaczek>(spec);
  const double s = std::sin(f.phi);
  return 2.0 * (static_cast<double>(n) * n + (2.0 * n + 1.0) * f.lambda) / (s * s);
}

double fisher_closed_generic(const ZMap& map, int n) {
  if (n < 0)
    throw DomainError("fisher_closed_generic: n must be nonnegative");
  if (map.z == 0.0 || (map.c && map.z == 1.0))
    throw DomainError("fisher_closed_generic: z must avoid {0, 1}");
  const double ratio = map.dz / map.z;
  if (map.c)
    return ratio * ratio / (1.0 - map.z) * (2.0 * n * n + (2.0 * n + 1.0) * *map.c);
  return -ratio * ratio * (2.0 * n + 1.0) / map.z;
}

double distribution_fisher(const NegBinomial& d) {
  if (!(d.r > 0.0) || !(d.p > 0.0 && d.p < 1.0))
    throw DomainError("NegBinomial: need r > 0 and p in (0, 1)");
  return d.r / (d.p * (1.0 - d.p) * (1.0 - d.p));
}

double distribution_fisher(const Binomial& d) {
  if (d.N < 0 || !(d.p > 0.0 && d.p < 1.0))
    throw DomainError("Binomial: need N >= 0 and p in (0, 1)");
  return d.N / (d.p * (1.0 - d.p));
}

double distribution_fisher(const Poisson& d) {
  if (!(d.lambda > 0.0))
    throw DomainError("Poisson: need lambda > 0");
  return 1.0 / d.lambda;
}

SumResult distribution_fisher_sum(const NegBinomial& d,
                                  const TruncationPolicy& policy) {
  distribution_fisher(d); // validate
  return truncated_sum(
      [&](long k) {
        const double log_pmf = std::lgamma(d.r + k) - std::lgamma(d.r) -
                               std::lgamma(k + 1.0) + k * std::log(d.p) +
                               d.r * std::log1p(-d.p);
        const double score = k / d.p - d.r / (1.0 - d.p);
        return score * score * std::exp(log_pmf);
      },
      policy);
}

SumResult distribution_fisher_sum(const Binomial& d) {
  distribution_fisher(d); // validate
  double sum = 0.0;
  for (int k = 0; k <= d.N; ++k) {
    const double log_pmf = log_binomial(d.N, k) + k * std::log(d.p) +
                           (d.N - k) * std::log1p(-d.p);
    const double score = (k - d.N * d.p) / (d.p * (1.0 - d.p));
    sum += score * score * std::exp(log_pmf);
  }
  return {sum, d.N + 1, true};
}

SumResult distribution_fisher_sum(const Poisson& d,
                                  const TruncationPolicy& policy) {
  distribution_fisher(d); // validate
  return truncated_sum(
      [&](long k) {
        const double log_pmf =
            k * std::log(d.lambda) - d.lambda - std::lgamma(k + 1.0);
        const double score = (k - d.lambda) / d.lambda;
        return score * score * std::exp(log_pmf);
      },
      policy);
}

} // namespace polyfisher
