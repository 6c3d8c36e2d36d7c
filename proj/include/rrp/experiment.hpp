#ifndef RRP_EXPERIMENT_HPP
#define RRP_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rrp/generators.hpp"
#include "rrp/solvers.hpp"

namespace rrp {

enum class GeneratorKind { erdos_renyi, scale_free, file, adversarial };

enum class SweepParam {
  none,
  n,
  num_settings,
  horizon,
  budget_fraction,
  avg_in_degree,
  p_beta
};

struct BetaSetting {
  enum class Mode { one, lemma5, fixed } mode = Mode::one;
  double value = 1.0;  // used by Mode::fixed

  // resolved against the instance's model count and precision
  double resolve(int num_models, double epsilon) const;
  static BetaSetting parse(const std::string& text);
};

// One experiment: sweep a single parameter over the given values (or run the
// fixed defaults), generate `repeats` instances per point, run the selected
// algorithms, and emit one CSV row per solve plus one preprocessing-time row
// per instance. Defaults are the bold settings of the benchmark grid.
struct ExperimentConfig {
  GeneratorKind generator = GeneratorKind::erdos_renyi;
  SweepParam sweep = SweepParam::none;
  std::vector<double> sweep_values;

  int n = 10000;
  double avg_in_degree = 6.0;
  double p_beta = 0.8;
  int num_settings = 10;
  int horizon = 6;
  double budget_fraction = 0.25;
  StepModel step_model = StepModel::always_full;

  std::vector<std::string> algorithms;
  int repeats = 20;
  std::uint64_t seed = 1;
  double epsilon = 0.0;  // <= 0 selects the default 1 / (1000 |models|)
  BetaSetting beta;

  std::string instance_path;  // file generator or adversarial collection
  bool override_ranges = false;
  SolverOptions solver_options;
};

SweepParam parse_sweep_param(const std::string& name);
GeneratorKind parse_generator(const std::string& name);

std::string csv_header();

// One parsed CSV row; covers the SolveReport scalars (placements are not
// serialized in rows) plus the instance and parameter columns.
struct CsvRow {
  SolveReport report;  // algorithm, score, budget_used, wall_time_ms
  std::string generator;
  int n = 0;
  int num_settings = 0;
  int horizon = 0;
  long long budget = 0;
  double beta = 1.0;
  double epsilon = 0.0;
  int repeat = 0;
  double pre_time_ms = 0.0;
};

CsvRow parse_csv_row(const std::string& line);

// Runs the experiment, writing rows to out_path and per-point aggregates
// (mean and standard deviation over repeats) to a sibling *_agg file.
// Returns the aggregate file path.
std::string run_experiment(const ExperimentConfig& config,
                           const std::string& out_path);

struct SolveFileResult {
  SolveReport report;
  int n = 0;
  int num_settings = 0;
  int horizon = 0;
  long long budget = 0;
  double pre_time_ms = 0.0;
  double epsilon = 0.0;
  double beta = 1.0;
  std::string csv_row;
};

// Loads one instance file, runs a single algorithm, and returns the report
// with its formatted CSV row.
SolveFileResult solve_file(const std::string& instance_path,
                           const std::string& algorithm, double epsilon = 0.0,
                           const BetaSetting& beta = {},
                           const SolverOptions& opts = {});

}  // namespace rrp

#endif  // RRP_EXPERIMENT_HPP
