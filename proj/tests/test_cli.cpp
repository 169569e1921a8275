// End-to-end tests of the polyfisher binary. The path comes from the build
// system via POLYFISHER_CLI.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + POLYFISHER_CLI " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line))
    if (!line.empty())
      lines.push_back(line);
  return lines;
}

std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ','))
    fields.push_back(field);
  return fields;
}

} // namespace

TEST_CASE("table: charlier sweep has one row per (a, n)") {
  const RunResult r = run_cli("table charlier --a 1:5:3 --n 0:2");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 10); // header + 3 a-values x 3 degrees
  CHECK(lines[0] == "family,params,n,closed,numeric,rel_err,converged");
  const auto first = csv_fields(lines[1]);
  REQUIRE(first.size() == 7);
  CHECK(first[0] == "charlier");
  CHECK(first[1] == "a=1");
  CHECK(first[2] == "0");
  CHECK(std::stod(first[3]) == 1.0); // (2*0+1)/1
  CHECK(first[6] == "true");
}

TEST_CASE("table: krawtchouk n = 0 row reproduces the binomial value") {
  const RunResult r = run_cli("table krawtchouk --p 0.5 --N 10 --n 0");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  const auto row = csv_fields(lines[1]);
  CHECK(std::stod(row[3]) == 40.0);
  CHECK(std::stod(row[4]) == doctest::Approx(40.0).epsilon(1e-10));
}

TEST_CASE("table: rows are sorted by params then degree") {
  const RunResult r = run_cli("table meixner --beta 0.5:3.5:2 --c 0.25 --n 1:2");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  std::vector<std::string> keys;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto f = csv_fields(lines[i]);
    keys.push_back(f[1] + "|" + f[2]);
  }
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  CHECK(keys == sorted);
}

TEST_CASE("table: byte-stable across runs") {
  const std::string args = "table meixner_pollaczek --lambda 1 --phi 0.9 --n 0:3";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("table: json format emits one object per row") {
  const RunResult r = run_cli("table charlier --a 2 --n 0:1 --format json");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  const auto row = nlohmann::json::parse(lines[0]);
  CHECK(row.at("family") == "charlier");
  CHECK(row.at("params").at("a") == 2.0);
  CHECK(row.at("closed") == 0.5);
  CHECK(row.at("converged") == true);
}

TEST_CASE("table: config errors exit 2") {
  CHECK(run_cli("table charlier --a 1 --n 2:0").exit_code == 2); // empty range
  CHECK(run_cli("table charlier --n 0:2").exit_code == 2);       // missing --a
  CHECK(run_cli("table nosuch --n 0").exit_code == 2);
  CHECK(run_cli("table charlier --a 0 --n 0").exit_code == 2); // a out of range
  CHECK(run_cli("table charlier --a 1 --p 0.5 --n 0").exit_code == 2);
  CHECK(run_cli("table krawtchouk --p 0.5 --N 5 --n 0:6").exit_code == 2);
}

TEST_CASE("table: krawtchouk n = N row is formula-only, exit 1") {
  const RunResult r = run_cli("table krawtchouk --p 0.5 --N 5 --n 4:5");
  CHECK(r.exit_code == 1);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  const auto last = csv_fields(lines[2]);
  CHECK(last[2] == "5");
  CHECK(std::stod(last[3]) > 0.0); // closed form still answers
  CHECK(last[4] == "nan");
  CHECK(last[6] == "false");
}

TEST_CASE("summand: charlier dump is nonnegative and sums to the n=0 value") {
  const RunResult r = run_cli("summand charlier --a 2 --n 1 --x 0:20");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 22);
  CHECK(lines[0] == "x,summand,rho_n");
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto f = csv_fields(lines[i]);
    REQUIRE(f.size() == 3);
    CHECK(std::stod(f[1]) >= 0.0);
    CHECK(std::stod(f[2]) >= 0.0);
  }
  // n = 0 dump integrates to the Poisson Fisher information 1/a
  const RunResult n0 = run_cli("summand charlier --a 2 --n 0 --x 0:80");
  const auto rows = lines_of(n0.out);
  double total = 0.0;
  for (size_t i = 1; i < rows.size(); ++i)
    total += std::stod(csv_fields(rows[i])[1]);
  CHECK(total == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("summand: krawtchouk rows sum to the exact Fisher value") {
  const RunResult r = run_cli("summand krawtchouk --p 0.5 --N 5 --n 1 --x 0:5");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);
  double total = 0.0;
  for (size_t i = 1; i < lines.size(); ++i)
    total += std::stod(csv_fields(lines[i])[1]);
  // closed form (2 - 3*5) / (0.5 * (0.5 - 1)) = 52
  CHECK(total == doctest::Approx(52.0).epsilon(1e-12));
}

TEST_CASE("summand: invalid ranges exit 2") {
  CHECK(run_cli("summand charlier --a 2 --n 1 --x 5:1").exit_code == 2);
  CHECK(run_cli("summand charlier --a 2 --n 1 --x 0:4.5").exit_code == 2);
  CHECK(run_cli("summand krawtchouk --p .5 --N 5 --n 5 --x 0:5").exit_code == 2);
  CHECK(run_cli("summand meixner_pollaczek --lambda 1 --phi 1 --n 1 --x 0:5")
            .exit_code == 2);
}

TEST_CASE("summand: meixner_pollaczek emits a real grid") {
  const RunResult r =
      run_cli("summand meixner_pollaczek --lambda 1 --phi 1.2 --n 2 --x -8:8:33");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 34);
  CHECK(csv_fields(lines[1])[0] == "-8");
}

TEST_CASE("verify: default run passes every check") {
  const RunResult r = run_cli("verify");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  CHECK(lines.size() >= 400);
  size_t sampled = 0;
  for (size_t i = 0; i < lines.size(); i += 97) {
    const auto entry = nlohmann::json::parse(lines[i]);
    CHECK(entry.at("passed") == true);
    CHECK(entry.at("residual").is_number());
    ++sampled;
  }
  CHECK(sampled > 10);
}

TEST_CASE("verify: unattainable tolerance fails with exit 1") {
  const RunResult r = run_cli("verify --tol-discrete 1e-15");
  CHECK(r.exit_code == 1);
  bool saw_failure = false;
  for (const std::string& line : lines_of(r.out))
    if (line.find("\"passed\":false") != std::string::npos)
      saw_failure = true;
  CHECK(saw_failure);
  CHECK(run_cli("verify --tol-quad 1e-15").exit_code == 1);
}

TEST_CASE("verify: missing config file exits 2") {
  CHECK(run_cli("verify /nonexistent/config.cfg").exit_code == 2);
}

TEST_CASE("verify: config file and POLYFISHER_CONFIG are honored") {
  const std::string path = "/tmp/polyfisher_test_config.cfg";
  {
    std::ofstream cfg(path);
    cfg << "# tighten far past the oracle budget\n";
    cfg << "tol_discrete = 1e-15\n";
  }
  CHECK(run_cli("verify " + path).exit_code == 1);
  CHECK(run_cli("verify", "POLYFISHER_CONFIG=" + path).exit_code == 1);
  std::remove(path.c_str());
}

TEST_CASE("--out writes the same bytes to a file") {
  const std::string path = "/tmp/polyfisher_test_out.csv";
  const RunResult direct = run_cli("table charlier --a 1 --n 0:2");
  const RunResult filed = run_cli("table charlier --a 1 --n 0:2 --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("table --help").exit_code == 0);
}
