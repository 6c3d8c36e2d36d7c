#include "rrp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "rrp/errors.hpp"
#include "rrp/instance_io.hpp"
#include "rrp/rng.hpp"

namespace rrp {

namespace {

enum class Algo { psi_saturate, all_greedy, myopic, bws, dp_rrp, brute_force };

Algo parse_algorithm(const std::string& name) {
  if (name == "psi-saturate") return Algo::psi_saturate;
  if (name == "all-greedy") return Algo::all_greedy;
  if (name == "myopic") return Algo::myopic;
  if (name == "bws") return Algo::bws;
  if (name == "dp-rrp") return Algo::dp_rrp;
  if (name == "brute-force") return Algo::brute_force;
  throw ParameterError("unknown algorithm '" + name +
                       "' (expected psi-saturate, all-greedy, myopic, bws, "
                       "dp-rrp, or brute-force)");
}

struct SweepRange {
  double lo;
  double hi;
};

SweepRange table_range(SweepParam p) {
  switch (p) {
    case SweepParam::n: return {2500, 12500};
    case SweepParam::num_settings: return {2, 20};
    case SweepParam::horizon: return {2, 10};
    case SweepParam::budget_fraction: return {0.10, 0.75};
    case SweepParam::avg_in_degree: return {3, 12};
    case SweepParam::p_beta: return {0.6, 0.9};
    default: return {0, 0};
  }
}

std::string fmt(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string generator_name(GeneratorKind g) {
  switch (g) {
    case GeneratorKind::erdos_renyi: return "er";
    case GeneratorKind::scale_free: return "scale-free";
    case GeneratorKind::file: return "file";
    case GeneratorKind::adversarial: return "adversarial";
  }
  return "?";
}

std::string make_row(const std::string& algorithm, GeneratorKind gen, int n,
                     int num_settings, int horizon, long long budget,
                     double beta, double epsilon, int repeat, double score,
                     long long budget_used, double pre_ms, double time_ms) {
  std::string row;
  row += algorithm;
  row += ',' + generator_name(gen);
  row += ',' + std::to_string(n);
  row += ',' + std::to_string(num_settings);
  row += ',' + std::to_string(horizon);
  row += ',' + std::to_string(budget);
  row += ',' + fmt(beta);
  row += ',' + fmt(epsilon);
  row += ',' + std::to_string(repeat);
  row += ',' + fmt(score);
  row += ',' + std::to_string(budget_used);
  row += ',' + fmt(pre_ms, "%.3f");
  row += ',' + fmt(time_ms, "%.3f");
  return row;
}

// Parameters of one sweep point.
struct Point {
  int n;
  double avg_in_degree;
  double p_beta;
  int num_settings;
  int horizon;
  double budget_fraction;
  double sweep_value;  // NaN when no sweep
};

Point apply_sweep(const ExperimentConfig& cfg, double value, bool swept) {
  Point p{cfg.n, cfg.avg_in_degree, cfg.p_beta, cfg.num_settings,
          cfg.horizon, cfg.budget_fraction,
          swept ? value : std::nan("")};
  if (!swept) return p;
  switch (cfg.sweep) {
    case SweepParam::n: p.n = static_cast<int>(std::llround(value)); break;
    case SweepParam::num_settings:
      p.num_settings = static_cast<int>(std::llround(value));
      break;
    case SweepParam::horizon:
      p.horizon = static_cast<int>(std::llround(value));
      break;
    case SweepParam::budget_fraction: p.budget_fraction = value; break;
    case SweepParam::avg_in_degree: p.avg_in_degree = value; break;
    case SweepParam::p_beta: p.p_beta = value; break;
    case SweepParam::none: break;
  }
  return p;
}

SolveReport run_algorithm(Algo algo, const Instance& inst,
                          const RewardProfile& profile,
                          const PerModelOptima& optima, double epsilon,
                          double beta, const SolverOptions& opts) {
  switch (algo) {
    case Algo::psi_saturate: {
      SaturateParams params;
      params.epsilon = epsilon;
      params.beta = beta;
      return psi_saturate(inst, profile, params, opts, &optima);
    }
    case Algo::all_greedy: return all_greedy(inst, profile, &optima);
    case Algo::myopic: return myopic(inst, profile, opts);
    case Algo::bws: return bws(inst, profile, opts);
    case Algo::dp_rrp: return dp_rrp(inst, profile, opts);
    case Algo::brute_force: return brute_force(inst, profile, opts);
  }
  throw ParameterError("unhandled algorithm");
}

}  // namespace

double BetaSetting::resolve(int num_models, double epsilon) const {
  switch (mode) {
    case Mode::one: return 1.0;
    case Mode::lemma5: return SaturateParams::lemma5_beta(num_models, epsilon);
    case Mode::fixed: return value;
  }
  return 1.0;
}

BetaSetting BetaSetting::parse(const std::string& text) {
  BetaSetting b;
  if (text == "one") {
    b.mode = Mode::one;
  } else if (text == "lemma5") {
    b.mode = Mode::lemma5;
  } else {
    try {
      std::size_t used = 0;
      b.value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw ParameterError("invalid beta '" + text +
                           "' (expected one, lemma5, or a real >= 1)");
    }
    if (b.value < 1.0) throw ParameterError("beta must be >= 1");
    b.mode = Mode::fixed;
  }
  return b;
}

SweepParam parse_sweep_param(const std::string& name) {
  if (name == "n") return SweepParam::n;
  if (name == "num-settings") return SweepParam::num_settings;
  if (name == "K" || name == "horizon") return SweepParam::horizon;
  if (name == "budget-fraction") return SweepParam::budget_fraction;
  if (name == "avg-in-degree") return SweepParam::avg_in_degree;
  if (name == "p-beta") return SweepParam::p_beta;
  throw ParameterError("unknown sweep parameter '" + name +
                       "' (expected n, num-settings, K, budget-fraction, "
                       "avg-in-degree, or p-beta)");
}

GeneratorKind parse_generator(const std::string& name) {
  if (name == "er") return GeneratorKind::erdos_renyi;
  if (name == "scale-free") return GeneratorKind::scale_free;
  if (name == "file") return GeneratorKind::file;
  if (name == "adversarial") return GeneratorKind::adversarial;
  throw ParameterError("unknown generator '" + name +
                       "' (expected er, scale-free, file, or adversarial)");
}

std::string csv_header() {
  return "algorithm,generator,n,num_settings,K,L,beta,epsilon,repeat,score,"
         "budget_used,pre_time_ms,time_ms";
}

CsvRow parse_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  if (fields.size() != 13) {
    throw ParseError("CSV row has " + std::to_string(fields.size()) +
                     " fields, expected 13");
  }
  CsvRow row;
  try {
    row.report.algorithm = fields[0];
    row.generator = fields[1];
    row.n = std::stoi(fields[2]);
    row.num_settings = std::stoi(fields[3]);
    row.horizon = std::stoi(fields[4]);
    row.budget = std::stoll(fields[5]);
    row.beta = std::stod(fields[6]);
    row.epsilon = std::stod(fields[7]);
    row.repeat = std::stoi(fields[8]);
    row.report.score = std::stod(fields[9]);
    row.report.budget_used = std::stoll(fields[10]);
    row.pre_time_ms = std::stod(fields[11]);
    row.report.wall_time_ms = std::stod(fields[12]);
  } catch (const std::exception& e) {
    throw ParseError(std::string("CSV row field: ") + e.what());
  }
  return row;
}

std::string run_experiment(const ExperimentConfig& cfg,
                           const std::string& out_path) {
  if (cfg.algorithms.empty()) {
    throw ParameterError("no algorithms selected");
  }
  std::vector<Algo> algos;
  for (const std::string& name : cfg.algorithms) {
    algos.push_back(parse_algorithm(name));
  }
  if (cfg.repeats < 1) throw ParameterError("repeats must be >= 1");

  const bool generated = cfg.generator == GeneratorKind::erdos_renyi ||
                         cfg.generator == GeneratorKind::scale_free;
  if (!generated && cfg.instance_path.empty()) {
    throw ParameterError("file and adversarial generators need --instance");
  }
  if (cfg.sweep != SweepParam::none && !cfg.override_ranges) {
    SweepRange r = table_range(cfg.sweep);
    for (double v : cfg.sweep_values) {
      if (v < r.lo || v > r.hi) {
        throw ParameterError(
            "sweep value " + fmt(v) + " outside the benchmark range [" +
            fmt(r.lo) + ", " + fmt(r.hi) + "]; pass --override-ranges to run");
      }
    }
  }
  if (cfg.generator == GeneratorKind::file && cfg.sweep != SweepParam::none) {
    throw ParameterError("file instances do not support sweeps");
  }
  if (cfg.generator == GeneratorKind::adversarial &&
      cfg.sweep != SweepParam::none &&
      cfg.sweep != SweepParam::budget_fraction) {
    throw ParameterError("adversarial instances only sweep budget-fraction");
  }

  std::vector<double> sweep_values = cfg.sweep_values;
  const bool swept = cfg.sweep != SweepParam::none;
  if (!swept) sweep_values = {0.0};
  if (swept && sweep_values.empty()) {
    throw ParameterError("sweep selected but no values given");
  }

  // Fixed inputs load once.
  Instance file_instance;
  SubsetCollection collection;
  if (cfg.generator == GeneratorKind::file) {
    file_instance = read_instance(cfg.instance_path);
  } else if (cfg.generator == GeneratorKind::adversarial) {
    collection = read_collection(cfg.instance_path);
  }
  const int repeats = generated ? cfg.repeats : 1;

  // Refuse an exhaustive oracle beyond its cap before any generation work.
  const bool wants_brute =
      std::find(algos.begin(), algos.end(), Algo::brute_force) != algos.end();
  if (wants_brute) {
    int max_n = 0;
    for (double v : sweep_values) {
      Point p = apply_sweep(cfg, v, swept);
      int n = p.n;
      if (cfg.generator == GeneratorKind::file) n = file_instance.n();
      if (cfg.generator == GeneratorKind::adversarial) {
        n = static_cast<int>(collection.subsets.size()) + collection.num_items;
      }
      max_n = std::max(max_n, n);
    }
    if (max_n > cfg.solver_options.brute_force_max_states) {
      throw ResourceError(
          "brute-force requested at n=" + std::to_string(max_n) +
          " beyond the oracle cap " +
          std::to_string(cfg.solver_options.brute_force_max_states));
    }
  }

  struct Sample {
    double score;
    long long budget;
    long long budget_used;
    double pre_ms;
    double time_ms;
    int n;
    int num_settings;
    int horizon;
  };
  std::vector<std::string> rows;
  // point index -> algorithm name -> samples, in deterministic order
  std::map<std::pair<std::size_t, std::string>, std::vector<Sample>> agg;
  std::vector<Point> points;

  for (std::size_t pi = 0; pi < sweep_values.size(); ++pi) {
    Point pt = apply_sweep(cfg, sweep_values[pi], swept);
    points.push_back(pt);
    for (int rep = 0; rep < repeats; ++rep) {
      const std::uint64_t instance_seed = mix_seed(cfg.seed, pi, rep);

      Instance inst;
      switch (cfg.generator) {
        case GeneratorKind::erdos_renyi: {
          Digraph g = gen_erdos_renyi(pt.n, pt.avg_in_degree, instance_seed);
          inst = sample_settings(g, pt.num_settings, pt.horizon,
                                 pt.budget_fraction,
                                 splitmix64(instance_seed), cfg.step_model);
          break;
        }
        case GeneratorKind::scale_free: {
          Digraph g = gen_scale_free(pt.n, pt.p_beta, instance_seed);
          inst = sample_settings(g, pt.num_settings, pt.horizon,
                                 pt.budget_fraction,
                                 splitmix64(instance_seed), cfg.step_model);
          break;
        }
        case GeneratorKind::file: inst = file_instance; break;
        case GeneratorKind::adversarial: {
          long long budget = std::max<long long>(
              1, static_cast<long long>(
                     std::floor(pt.budget_fraction * collection.num_items)));
          inst = gen_hitting_set_adversarial(collection, budget);
          break;
        }
      }

      const int num_models = inst.num_models();
      const double epsilon =
          cfg.epsilon > 0 ? cfg.epsilon : 1.0 / (1000.0 * num_models);
      const double beta = cfg.beta.resolve(num_models, epsilon);

      auto pre_start = std::chrono::steady_clock::now();
      RewardProfile profile = reward_profile(inst.models);
      PerModelOptima optima =
          optimal_per_model(inst, profile, InnerOracle::exact_dp);
      double pre_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - pre_start)
                          .count();

      for (std::size_t a = 0; a < algos.size(); ++a) {
        SolveReport rep_out = run_algorithm(algos[a], inst, profile, optima,
                                            epsilon, beta, cfg.solver_options);
        rows.push_back(make_row(rep_out.algorithm, cfg.generator, inst.n(),
                                num_models, inst.horizon(), inst.budget, beta,
                                epsilon, rep, rep_out.score,
                                rep_out.budget_used, pre_ms,
                                rep_out.wall_time_ms));
        agg[{pi, rep_out.algorithm}].push_back(
            {rep_out.score, inst.budget, rep_out.budget_used, pre_ms,
             rep_out.wall_time_ms, inst.n(), num_models, inst.horizon()});
      }
      rows.push_back(make_row("pre-time", cfg.generator, inst.n(), num_models,
                              inst.horizon(), inst.budget, beta, epsilon, rep,
                              0.0, 0, pre_ms, 0.0));
    }
  }

  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output file: " + out_path);
  out << csv_header() << '\n';
  for (const std::string& row : rows) out << row << '\n';
  out.close();

  // Aggregates: mean over repeats plus sample standard deviation of the score.
  std::string agg_path = out_path;
  std::size_t dot = agg_path.find_last_of('.');
  if (dot == std::string::npos) {
    agg_path += "_agg";
  } else {
    agg_path.insert(dot, "_agg");
  }
  std::ofstream agg_out(agg_path);
  if (!agg_out) throw ParseError("cannot open output file: " + agg_path);
  agg_out << "algorithm,generator,sweep,sweep_value,n,num_settings,K,L_mean,"
             "repeats,score_mean,score_std,budget_used_mean,pre_time_ms_mean,"
             "time_ms_mean\n";
  const char* sweep_names[] = {"none",           "n",           "num-settings",
                               "K",              "budget-fraction",
                               "avg-in-degree",  "p-beta"};
  for (const auto& [key, samples] : agg) {
    const Point& pt = points[key.first];
    double score_mean = 0, l_mean = 0, used_mean = 0, pre_mean = 0,
           time_mean = 0;
    for (const Sample& s : samples) {
      score_mean += s.score;
      l_mean += static_cast<double>(s.budget);
      used_mean += static_cast<double>(s.budget_used);
      pre_mean += s.pre_ms;
      time_mean += s.time_ms;
    }
    const double count = static_cast<double>(samples.size());
    score_mean /= count;
    l_mean /= count;
    used_mean /= count;
    pre_mean /= count;
    time_mean /= count;
    double var = 0;
    for (const Sample& s : samples) {
      var += (s.score - score_mean) * (s.score - score_mean);
    }
    double score_std = samples.size() > 1 ? std::sqrt(var / (count - 1)) : 0.0;

    agg_out << key.second << ',' << generator_name(cfg.generator) << ','
            << sweep_names[static_cast<int>(cfg.sweep)] << ','
            << (swept ? fmt(pt.sweep_value) : std::string("")) << ','
            << samples[0].n << ',' << samples[0].num_settings << ','
            << samples[0].horizon << ',' << fmt(l_mean) << ','
            << samples.size() << ',' << fmt(score_mean) << ','
            << fmt(score_std) << ',' << fmt(used_mean) << ','
            << fmt(pre_mean, "%.3f") << ',' << fmt(time_mean, "%.3f") << '\n';
  }
  return agg_path;
}

SolveFileResult solve_file(const std::string& instance_path,
                           const std::string& algorithm, double epsilon,
                           const BetaSetting& beta, const SolverOptions& opts) {
  Algo algo = parse_algorithm(algorithm);
  Instance inst = read_instance(instance_path);

  const int num_models = inst.num_models();
  SolveFileResult res;
  res.n = inst.n();
  res.num_settings = num_models;
  res.horizon = inst.horizon();
  res.budget = inst.budget;
  res.epsilon = epsilon > 0 ? epsilon : 1.0 / (1000.0 * num_models);
  res.beta = beta.resolve(num_models, res.epsilon);

  auto pre_start = std::chrono::steady_clock::now();
  RewardProfile profile = reward_profile(inst.models);
  PerModelOptima optima =
      optimal_per_model(inst, profile, InnerOracle::exact_dp);
  res.pre_time_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - pre_start)
                        .count();

  res.report = run_algorithm(algo, inst, profile, optima, res.epsilon,
                             res.beta, opts);
  res.csv_row = make_row(res.report.algorithm, GeneratorKind::file, res.n,
                         num_models, res.horizon, res.budget, res.beta,
                         res.epsilon, 0, res.report.score,
                         res.report.budget_used, res.pre_time_ms,
                         res.report.wall_time_ms);
  return res;
}

}  // namespace rrp
