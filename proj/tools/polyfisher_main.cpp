// polyfisher: Fisher information tables, verification suite and summand
// dumps for the Meixner, Krawtchouk, Charlier and Meixner-Pollaczek
// orthogonal polynomial families.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polyfisher/errors.hpp"
#include "polyfisher/fisher.hpp"
#include "polyfisher/verify.hpp"

namespace {

using polyfisher::Binomial;
using polyfisher::Charlier;
using polyfisher::DomainError;
using polyfisher::FamilySpec;
using polyfisher::Krawtchouk;
using polyfisher::Meixner;
using polyfisher::MeixnerPollaczek;
using polyfisher::NegBinomial;
using polyfisher::Poisson;
using polyfisher::VerifyConfig;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size())
      throw ConfigError(what + ": trailing characters in '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError(what + ": cannot parse '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, sep))
    parts.push_back(item);
  return parts;
}

// start:stop:count with inclusive endpoints; a single value is allowed.
std::vector<double> parse_range(const std::string& text, const std::string& what) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() == 1)
    return {parse_double(parts[0], what)};
  if (parts.size() != 3)
    throw ConfigError(what + ": expected 'value' or 'start:stop:count', got '" +
                      text + "'");
  const double start = parse_double(parts[0], what);
  const double stop = parse_double(parts[1], what);
  const double count_raw = parse_double(parts[2], what);
  const int count = static_cast<int>(count_raw);
  if (count_raw != count || count < 1)
    throw ConfigError(what + ": count must be a positive integer");
  if (count == 1) {
    if (start != stop)
      throw ConfigError(what + ": count 1 needs start = stop");
    return {start};
  }
  std::vector<double> values(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    values[static_cast<size_t>(i)] = start + (stop - start) * i / (count - 1);
  return values;
}

// lo[:hi] over integers, step 1.
std::pair<int, int> parse_degree_range(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.empty() || parts.size() > 2)
    throw ConfigError("--n: expected 'n' or 'n_min:n_max'");
  const auto as_int = [](const std::string& s) {
    const double v = parse_double(s, "--n");
    const int i = static_cast<int>(v);
    if (v != i || i < 0)
      throw ConfigError("--n: degrees must be nonnegative integers");
    return i;
  };
  const int lo = as_int(parts[0]);
  const int hi = parts.size() == 2 ? as_int(parts[1]) : lo;
  if (hi < lo)
    throw ConfigError("--n: empty degree range");
  return {lo, hi};
}

int parse_int_value(double v, const std::string& what) {
  const int i = static_cast<int>(v);
  if (v != i)
    throw ConfigError(what + ": expected an integer, got " + fmt17(v));
  return i;
}

struct ParamFlags {
  std::string a, beta, c, p, N, lambda, phi;
};

// Cartesian product of the per-parameter ranges for one family.
std::vector<FamilySpec> expand_specs(const std::string& family,
                                     const ParamFlags& flags) {
  const auto need = [&](const std::string& value, const char* name) {
    if (value.empty())
      throw ConfigError("family '" + family + "' requires --" + name);
    return value;
  };
  const auto reject = [&](const std::string& value, const char* name) {
    if (!value.empty())
      throw ConfigError("family '" + family + "' does not take --" + name);
  };
  std::vector<FamilySpec> specs;
  if (family == "charlier") {
    reject(flags.beta, "beta"); reject(flags.c, "c"); reject(flags.p, "p");
    reject(flags.N, "N"); reject(flags.lambda, "lambda"); reject(flags.phi, "phi");
    for (double a : parse_range(need(flags.a, "a"), "--a"))
      specs.push_back(Charlier{a});
  } else if (family == "meixner") {
    reject(flags.a, "a"); reject(flags.p, "p"); reject(flags.N, "N");
    reject(flags.lambda, "lambda"); reject(flags.phi, "phi");
    for (double beta : parse_range(need(flags.beta, "beta"), "--beta"))
      for (double c_m : parse_range(need(flags.c, "c"), "--c"))
        specs.push_back(Meixner{beta, c_m});
  } else if (family == "krawtchouk") {
    reject(flags.a, "a"); reject(flags.beta, "beta"); reject(flags.c, "c");
    reject(flags.lambda, "lambda"); reject(flags.phi, "phi");
    for (double nn : parse_range(need(flags.N, "N"), "--N"))
      for (double p : parse_range(need(flags.p, "p"), "--p"))
        specs.push_back(Krawtchouk{p, parse_int_value(nn, "--N")});
  } else if (family == "meixner_pollaczek" || family == "meixner-pollaczek") {
    reject(flags.a, "a"); reject(flags.beta, "beta"); reject(flags.c, "c");
    reject(flags.p, "p"); reject(flags.N, "N");
    for (double lambda : parse_range(need(flags.lambda, "lambda"), "--lambda"))
      for (double phi : parse_range(need(flags.phi, "phi"), "--phi"))
        specs.push_back(MeixnerPollaczek{lambda, phi});
  } else {
    throw ConfigError("unknown family '" + family + "' (expected charlier, "
                      "meixner, krawtchouk or meixner_pollaczek)");
  }
  for (const FamilySpec& spec : specs)
    polyfisher::validate(spec);
  return specs;
}

std::string params_string(const FamilySpec& spec) {
  if (const auto* m = std::get_if<Meixner>(&spec))
    return "beta=" + fmt17(m->beta) + ";c_M=" + fmt17(m->c_m);
  if (const auto* k = std::get_if<Krawtchouk>(&spec))
    return "N=" + std::to_string(k->N) + ";p=" + fmt17(k->p);
  if (const auto* c = std::get_if<Charlier>(&spec))
    return "a=" + fmt17(c->a);
  const auto& f = std::get<MeixnerPollaczek>(spec);
  return "lambda=" + fmt17(f.lambda) + ";phi=" + fmt17(f.phi);
}

nlohmann::ordered_json params_json(const FamilySpec& spec) {
  nlohmann::ordered_json params;
  if (const auto* m = std::get_if<Meixner>(&spec)) {
    params["beta"] = m->beta;
    params["c_M"] = m->c_m;
  } else if (const auto* k = std::get_if<Krawtchouk>(&spec)) {
    params["N"] = k->N;
    params["p"] = k->p;
  } else if (const auto* c = std::get_if<Charlier>(&spec)) {
    params["a"] = c->a;
  } else {
    const auto& f = std::get<MeixnerPollaczek>(spec);
    params["lambda"] = f.lambda;
    params["phi"] = f.phi;
  }
  return params;
}

// key = value lines, '#' starts a comment, every key optional.
void apply_config_file(const std::string& path, VerifyConfig& config) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path + "'");
  const std::map<std::string, std::function<void(double)>> setters = {
      {"tol_discrete", [&](double v) { config.tol_discrete = v; }},
      {"tol_exact", [&](double v) { config.tol_exact = v; }},
      {"tol_quad", [&](double v) { config.tol_quad = v; }},
      {"tol_fd", [&](double v) { config.tol_fd = v; }},
      {"tol_series", [&](double v) { config.tol_series = v; }},
      {"rel_tol", [&](double v) { config.policy.rel_tol = v; }},
      {"max_terms", [&](double v) { config.policy.max_terms = static_cast<long>(v); }},
      {"small_run", [&](double v) { config.policy.small_run = static_cast<int>(v); }},
      {"initial_half_width", [&](double v) { config.quad.initial_half_width = v; }},
      {"max_doublings", [&](double v) { config.quad.max_doublings = static_cast<int>(v); }},
      {"panel_rel_tol", [&](double v) { config.quad.panel_rel_tol = v; }},
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto strip = [](std::string s) {
      const size_t b = s.find_first_not_of(" \t\r");
      const size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    if (strip(line).empty())
      continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    it->second(parse_double(value, key));
  }
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty())
      return;
    file.open(path);
    if (!file)
      throw ConfigError("cannot open output file '" + path + "'");
    stream = &file;
  }
};

struct TableRow {
  std::string params;
  int n;
  FamilySpec spec;
  double closed;
  double numeric;
  double rel_err;
  bool converged;
};

int run_table(const std::string& family, const ParamFlags& flags,
              const std::string& n_range, const std::string& format,
              const std::string& out_path, const VerifyConfig& config) {
  const std::vector<FamilySpec> specs = expand_specs(family, flags);
  const auto [n_lo, n_hi] = parse_degree_range(n_range);
  for (const FamilySpec& spec : specs)
    if (const auto* k = std::get_if<Krawtchouk>(&spec); k && n_hi > k->N)
      throw ConfigError("--n: Krawtchouk requires n <= N");

  std::vector<TableRow> rows;
  for (const FamilySpec& spec : specs) {
    for (int n = n_lo; n <= n_hi; ++n) {
      TableRow row{params_string(spec), n, spec, 0.0, 0.0, 0.0, false};
      row.closed = polyfisher::fisher_closed(spec, n);
      const auto* k = std::get_if<Krawtchouk>(&spec);
      if (k && n == k->N) {
        // formula-only degree: the numeric sum would need P_{N+1}
        row.numeric = std::nan("");
        row.rel_err = std::nan("");
        row.converged = false;
      } else {
        const polyfisher::FisherReport rep =
            polyfisher::fisher_numeric(spec, n, config.policy, config.quad);
        row.numeric = rep.numeric;
        row.rel_err = rep.rel_err;
        const double tol = std::holds_alternative<Krawtchouk>(spec) ? config.tol_exact
                           : polyfisher::is_discrete(spec) ? config.tol_discrete
                                                           : config.tol_quad;
        row.converged = rep.converged && rep.rel_err <= tol;
      }
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return a.params != b.params ? a.params < b.params : a.n < b.n;
  });

  OutputTarget out;
  out.open(out_path);
  bool all_converged = true;
  if (format == "csv") {
    *out.stream << "family,params,n,closed,numeric,rel_err,converged\n";
    for (const TableRow& row : rows) {
      *out.stream << polyfisher::family_name(row.spec) << ',' << row.params
                  << ',' << row.n << ',' << fmt17(row.closed) << ','
                  << fmt17(row.numeric) << ',' << fmt17(row.rel_err) << ','
                  << (row.converged ? "true" : "false") << '\n';
      all_converged = all_converged && row.converged;
    }
  } else {
    for (const TableRow& row : rows) {
      nlohmann::ordered_json line;
      line["family"] = std::string(polyfisher::family_name(row.spec));
      line["params"] = params_json(row.spec);
      line["n"] = row.n;
      line["closed"] = row.closed;
      line["numeric"] = row.numeric;
      line["rel_err"] = row.rel_err;
      line["converged"] = row.converged;
      *out.stream << line.dump() << '\n';
      all_converged = all_converged && row.converged;
    }
  }
  return all_converged ? 0 : 1;
}

int run_summand(const std::string& family, const ParamFlags& flags,
                const std::string& n_range, const std::string& x_range,
                const std::string& out_path) {
  const std::vector<FamilySpec> specs = expand_specs(family, flags);
  if (specs.size() != 1)
    throw ConfigError("summand takes a single parameter point, not a sweep");
  const FamilySpec spec = specs.front();
  const auto [n_lo, n_hi] = parse_degree_range(n_range);
  if (n_lo != n_hi)
    throw ConfigError("summand takes a single degree");
  const int n = n_lo;

  std::vector<double> xs;
  const std::vector<std::string> parts = split(x_range, ':');
  if (polyfisher::is_discrete(spec)) {
    if (parts.size() != 2)
      throw ConfigError("--x: discrete families use 'lo:hi' over integers");
    const int lo = parse_int_value(parse_double(parts[0], "--x"), "--x");
    const int hi = parse_int_value(parse_double(parts[1], "--x"), "--x");
    if (lo < 0 || hi < lo)
      throw ConfigError("--x: invalid integer range");
    for (int x = lo; x <= hi; ++x)
      xs.push_back(x);
  } else {
    if (parts.size() != 3)
      throw ConfigError("--x: meixner_pollaczek uses 'lo:hi:count'");
    xs = parse_range(x_range, "--x");
  }

  OutputTarget out;
  out.open(out_path);
  *out.stream << "x,summand,rho_n\n";
  for (double x : xs) {
    const double s = polyfisher::fisher_summand(spec, n, x);
    const double rho = polyfisher::density_rho_n(spec, n, x).rho_n;
    *out.stream << fmt17(x) << ',' << fmt17(s) << ',' << fmt17(rho) << '\n';
  }
  return 0;
}

int run_verify(const std::string& out_path, const VerifyConfig& config) {
  const std::vector<polyfisher::CheckResult> results =
      polyfisher::run_standard_grid(config);
  OutputTarget out;
  out.open(out_path);
  for (const polyfisher::CheckResult& r : results)
    *out.stream << polyfisher::to_jsonl(r) << '\n';
  return polyfisher::all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fisher information of the Meixner, Krawtchouk, Charlier and "
               "Meixner-Pollaczek orthogonal polynomials"};
  app.require_subcommand(1);

  ParamFlags flags;
  std::string family;
  std::string n_range;
  std::string x_range;
  std::string format = "csv";
  std::string out_path;
  std::string config_path;
  std::optional<double> tol_discrete;
  std::optional<double> tol_quad;
  std::optional<long> max_terms;

  const auto add_common = [&](CLI::App* cmd, bool with_family) {
    if (with_family) {
      cmd->add_option("family,--family", family,
                      "charlier | meixner | krawtchouk | meixner_pollaczek")
          ->required();
      cmd->add_option("--a", flags.a, "Charlier a (value or start:stop:count)");
      cmd->add_option("--beta", flags.beta, "Meixner beta");
      cmd->add_option("--c", flags.c, "Meixner c_M");
      cmd->add_option("--p", flags.p, "Krawtchouk p");
      cmd->add_option("--N", flags.N, "Krawtchouk N");
      cmd->add_option("--lambda", flags.lambda, "Meixner-Pollaczek lambda");
      cmd->add_option("--phi", flags.phi, "Meixner-Pollaczek phi");
    }
    cmd->add_option("--tol-discrete", tol_discrete,
                    "relative tolerance for truncated discrete sums");
    cmd->add_option("--tol-quad", tol_quad, "relative tolerance for quadrature");
    cmd->add_option("--max-terms", max_terms, "truncated sum term limit");
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* table = app.add_subcommand(
      "table", "closed-form vs numeric Fisher information sweep");
  add_common(table, true);
  table->add_option("--n", n_range, "degree range n_min:n_max")->required();
  table->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full verification grid, one JSON line per check");
  verify->add_option("config", config_path, "config file (key = value lines)");
  add_common(verify, false);

  CLI::App* summand = app.add_subcommand(
      "summand", "per-point dump of the Fisher summand and density");
  add_common(summand, true);
  summand->add_option("--n", n_range, "degree")->required();
  summand->add_option("--x", x_range,
                      "support range: lo:hi (discrete) or lo:hi:count")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e); // --help and --version
    app.exit(e);
    return 2;
  }

  try {
    VerifyConfig config;
    if (const char* env = std::getenv("POLYFISHER_CONFIG"); env && *env)
      apply_config_file(env, config);
    if (!config_path.empty())
      apply_config_file(config_path, config);
    if (tol_discrete)
      config.tol_discrete = *tol_discrete;
    if (tol_quad)
      config.tol_quad = *tol_quad;
    if (max_terms)
      config.policy.max_terms = *max_terms;

    if (table->parsed())
      return run_table(family, flags, n_range, format, out_path, config);
    if (summand->parsed())
      return run_summand(family, flags, n_range, x_range, out_path);
    return run_verify(out_path, config);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
