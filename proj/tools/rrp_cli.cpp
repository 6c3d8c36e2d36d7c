// Command-line harness: generate benchmark instances, run solver sweeps, and
// emit CSV reports, or solve a single instance file.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrp/errors.hpp"
#include "rrp/experiment.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

constexpr int kUsageError = 2;
constexpr int kResourceError = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust reward placement over Markov mobility models"};
  app.require_subcommand(1);

  rrp::ExperimentConfig cfg;
  std::string generator_name = "er";
  std::string sweep_spec;
  std::string algorithms_spec;
  std::string beta_spec = "one";
  std::string out_path = "results.csv";
  std::string step_model_name = "always-K";

  CLI::App* exp = app.add_subcommand("experiment", "run a parameter sweep");
  exp->add_option("--generator", generator_name,
                  "er | scale-free | file | adversarial");
  exp->add_option("--sweep", sweep_spec,
                  "parameter sweep, e.g. n=2500,5000,7500");
  exp->add_option("--n", cfg.n, "number of states");
  exp->add_option("--avg-in-degree", cfg.avg_in_degree,
                  "Erdos-Renyi average in-degree");
  exp->add_option("--p-beta", cfg.p_beta, "scale-free edge-step probability");
  exp->add_option("--num-settings", cfg.num_settings, "models per instance");
  exp->add_option("--horizon", cfg.horizon, "steps K");
  exp->add_option("--budget-fraction", cfg.budget_fraction,
                  "budget as a fraction of total cost");
  exp->add_option("--step-model", step_model_name, "always-K | uniform-steps");
  exp->add_option("--algorithms", algorithms_spec,
                  "comma list of psi-saturate, all-greedy, myopic, bws, "
                  "dp-rrp, brute-force")
      ->required();
  exp->add_option("--repeats", cfg.repeats, "graphs per sweep point");
  exp->add_option("--seed", cfg.seed, "master seed");
  exp->add_option("--epsilon", cfg.epsilon,
                  "saturation precision (default 1/(1000 |models|))");
  exp->add_option("--beta", beta_spec, "one | lemma5 | <real >= 1>");
  exp->add_option("--out", out_path, "output CSV path");
  exp->add_option("--instance", cfg.instance_path,
                  "instance file (generator=file) or subset collection "
                  "(generator=adversarial)");
  exp->add_flag("--override-ranges", cfg.override_ranges,
                "allow sweep values outside the benchmark grid");
  exp->add_option("--brute-cap", cfg.solver_options.brute_force_max_states,
                  "state cap for the exhaustive oracle");
  exp->add_option("--dp-cell-cap", cfg.solver_options.dp_cell_cap,
                  "cell cap for the dp-rrp table");

  std::string solve_instance;
  std::string solve_algorithm;
  double solve_epsilon = 0.0;
  std::string solve_beta = "one";
  rrp::SolverOptions solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance file");
  solve->add_option("--instance", solve_instance, "instance JSON path")
      ->required();
  solve->add_option("--algorithms", solve_algorithm, "one algorithm name")
      ->required();
  solve->add_option("--epsilon", solve_epsilon, "saturation precision");
  solve->add_option("--beta", solve_beta, "one | lemma5 | <real >= 1>");
  solve->add_option("--brute-cap", solve_opts.brute_force_max_states,
                    "state cap for the exhaustive oracle");
  solve->add_option("--dp-cell-cap", solve_opts.dp_cell_cap,
                    "cell cap for the dp-rrp table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (exp->parsed()) {
      cfg.generator = rrp::parse_generator(generator_name);
      cfg.beta = rrp::BetaSetting::parse(beta_spec);
      if (step_model_name == "always-K") {
        cfg.step_model = rrp::StepModel::always_full;
      } else if (step_model_name == "uniform-steps") {
        cfg.step_model = rrp::StepModel::uniform_steps;
      } else {
        throw rrp::ParameterError("unknown step model '" + step_model_name +
                                  "'");
      }
      if (!sweep_spec.empty()) {
        std::size_t eq = sweep_spec.find('=');
        if (eq == std::string::npos) {
          throw rrp::ParameterError(
              "sweep must look like name=v1,v2,... got '" + sweep_spec + "'");
        }
        cfg.sweep = rrp::parse_sweep_param(sweep_spec.substr(0, eq));
        for (const std::string& v : split_list(sweep_spec.substr(eq + 1))) {
          try {
            cfg.sweep_values.push_back(std::stod(v));
          } catch (const std::exception&) {
            throw rrp::ParameterError("bad sweep value '" + v + "'");
          }
        }
      }
      cfg.algorithms = split_list(algorithms_spec);
      std::string agg_path = rrp::run_experiment(cfg, out_path);
      std::cout << "wrote " << out_path << " and " << agg_path << "\n";
    } else {
      rrp::SolveFileResult res = rrp::solve_file(
          solve_instance, solve_algorithm, solve_epsilon,
          rrp::BetaSetting::parse(solve_beta), solve_opts);
      std::cout << rrp::csv_header() << "\n" << res.csv_row << "\n";
      std::cout << "placement:";
      for (int s : res.report.placement.members) std::cout << ' ' << s;
      std::cout << "\n";
      for (const std::string& flag : res.report.flags) {
        std::cout << "flag: " << flag << "\n";
      }
    }
  } catch (const rrp::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResourceError;
  } catch (const rrp::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const rrp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
