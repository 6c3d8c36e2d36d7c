#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rrp/errors.hpp"
#include "rrp/experiment.hpp"
#include "rrp/generators.hpp"
#include "rrp/instance_io.hpp"
#include "test_util.hpp"

using namespace rrp;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("rrp_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

ExperimentConfig tiny_config() {
  ExperimentConfig cfg;
  cfg.n = 20;
  cfg.num_settings = 2;
  cfg.horizon = 3;
  cfg.avg_in_degree = 3.0;
  cfg.budget_fraction = 0.25;
  cfg.repeats = 1;
  cfg.seed = 5;
  cfg.override_ranges = true;
  return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("experiment");

TEST_CASE("a single run emits one result row and one pre-time row") {
  ExperimentConfig cfg = tiny_config();
  cfg.algorithms = {"all-greedy"};
  TempFile out("single.csv");
  TempFile agg("single_agg.csv");
  run_experiment(cfg, out.path);

  std::vector<std::string> lines = read_lines(out.path);
  REQUIRE(lines.size() == 3);  // header + result + pre-time
  CHECK(lines[0] == csv_header());
  CHECK(split(lines[1])[0] == "all-greedy");
  CHECK(split(lines[2])[0] == "pre-time");
}

TEST_CASE("every emitted row parses back") {
  ExperimentConfig cfg = tiny_config();
  cfg.algorithms = {"all-greedy", "psi-saturate", "dp-rrp"};
  TempFile out("parse.csv");
  TempFile agg("parse_agg.csv");
  run_experiment(cfg, out.path);

  std::vector<std::string> lines = read_lines(out.path);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CsvRow row = parse_csv_row(lines[i]);
    CHECK(row.n == 20);
    CHECK(row.num_settings == 2);
    CHECK(row.horizon == 3);
    CHECK(row.report.score >= 0.0);
    if (row.report.algorithm != "pre-time") {
      CHECK(row.report.budget_used <= row.budget);
    }
  }
  CHECK_THROWS_AS(parse_csv_row("a,b,c"), ParseError);
  CHECK_THROWS_AS(parse_csv_row(csv_header()), ParseError);
}

TEST_CASE("row counts follow points x repeats x algorithms") {
  ExperimentConfig cfg = tiny_config();
  cfg.algorithms = {"all-greedy", "myopic"};
  cfg.repeats = 2;
  cfg.sweep = SweepParam::n;
  cfg.sweep_values = {10, 12};
  TempFile out("grid.csv");
  TempFile agg("grid_agg.csv");
  std::string agg_path = run_experiment(cfg, out.path);
  CHECK(agg_path == agg.path);

  std::vector<std::string> lines = read_lines(out.path);
  // 2 points x 2 repeats x (2 algorithms + 1 pre-time row) + header
  CHECK(lines.size() == 1 + 2 * 2 * 3);
  std::vector<std::string> agg_lines = read_lines(agg.path);
  CHECK(agg_lines.size() == 1 + 2 * 2);  // per point and algorithm
}

TEST_CASE("score columns are identical across reruns") {
  ExperimentConfig cfg = tiny_config();
  cfg.algorithms = {"all-greedy", "bws", "dp-rrp"};
  cfg.repeats = 2;
  TempFile out_a("rerun_a.csv");
  TempFile agg_a("rerun_a_agg.csv");
  TempFile out_b("rerun_b.csv");
  TempFile agg_b("rerun_b_agg.csv");
  run_experiment(cfg, out_a.path);
  run_experiment(cfg, out_b.path);

  std::vector<std::string> a = read_lines(out_a.path);
  std::vector<std::string> b = read_lines(out_b.path);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<std::string> fa = split(a[i]);
    std::vector<std::string> fb = split(b[i]);
    REQUIRE(fa.size() == fb.size());
    for (std::size_t c = 0; c + 2 < fa.size(); ++c) {
      CHECK(fa[c] == fb[c]);  // all but the two timing columns
    }
  }
}

TEST_CASE("unknown algorithms are usage errors") {
  ExperimentConfig cfg = tiny_config();
  cfg.algorithms = {"simulated-annealing"};
  CHECK_THROWS_AS(run_experiment(cfg, "unused.csv"), ParameterError);
  cfg.algorithms = {};
  CHECK_THROWS_AS(run_experiment(cfg, "unused.csv"), ParameterError);
}

TEST_CASE("off-grid sweeps need the override flag") {
  ExperimentConfig cfg = tiny_config();
  cfg.algorithms = {"all-greedy"};
  cfg.sweep = SweepParam::num_settings;
  cfg.sweep_values = {1, 5};  // 1 is below the benchmark grid
  cfg.override_ranges = false;
  CHECK_THROWS_AS(run_experiment(cfg, "unused.csv"), ParameterError);
  cfg.override_ranges = true;
  TempFile out("override.csv");
  TempFile agg("override_agg.csv");
  run_experiment(cfg, out.path);
  CHECK(read_lines(out.path).size() > 1);
}

TEST_CASE("brute force above the cap is refused before any work") {
  ExperimentConfig cfg = tiny_config();
  cfg.n = 100;
  cfg.algorithms = {"brute-force"};
  CHECK_THROWS_AS(run_experiment(cfg, "unused.csv"), ResourceError);
}

TEST_CASE("solve_file reports the brute-force optimum of a small file") {
  Rng rng(500);
  Instance inst = rrp_test::random_instance(rng, 12, 3, 2, 3, 0.4);
  TempFile f("solve.json");
  write_instance(inst, f.path);

  SolveFileResult res = solve_file(f.path, "brute-force");
  RewardProfile profile = reward_profile(inst.models);
  optimal_per_model(inst, profile);
  CHECK(res.report.score == brute_force(inst, profile).score);
  CHECK(res.csv_row.find("brute-force,file,12,2,3,") == 0);
}

TEST_CASE("solve_file runs psi-saturate on an adversarial file") {
  Instance inst =
      gen_hitting_set_adversarial(rrp_test::disjoint_collection(), 3);
  TempFile f("adversarial.json");
  write_instance(inst, f.path);

  SolveFileResult res =
      solve_file(f.path, "psi-saturate", 0.05, BetaSetting::parse("lemma5"));
  CHECK(res.report.score > 0.0);
  CHECK(res.beta == doctest::Approx(SaturateParams::lemma5_beta(3, 0.05)));
}

TEST_CASE("solve_file rejects unknown algorithms") {
  CHECK_THROWS_AS(solve_file("unused.json", "magic"), ParameterError);
}

TEST_CASE("beta settings parse the three forms") {
  CHECK(BetaSetting::parse("one").resolve(5, 0.1) == 1.0);
  CHECK(BetaSetting::parse("lemma5").resolve(5, 0.1) ==
        doctest::Approx(1.0 + std::log(150.0)));
  CHECK(BetaSetting::parse("2.5").resolve(5, 0.1) == 2.5);
  CHECK_THROWS_AS(BetaSetting::parse("0.5"), ParameterError);
  CHECK_THROWS_AS(BetaSetting::parse("abc"), ParameterError);
}

TEST_CASE("epsilon defaults to the per-model precision rule") {
  ExperimentConfig cfg = tiny_config();
  cfg.algorithms = {"psi-saturate"};
  cfg.num_settings = 2;
  TempFile out("eps.csv");
  TempFile agg("eps_agg.csv");
  run_experiment(cfg, out.path);
  std::vector<std::string> lines = read_lines(out.path);
  std::vector<std::string> fields = split(lines[1]);
  CHECK(fields[7] == "0.0005");  // 1 / (1000 * 2)
}

TEST_SUITE_END();
