#ifndef RRP_SOLVERS_HPP
#define RRP_SOLVERS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "rrp/instance.hpp"
#include "rrp/knapsack.hpp"
#include "rrp/mobility.hpp"

namespace rrp {

enum class InnerOracle { exact_dp, greedy };

// Saturation search parameters. beta = 1 keeps the budget constraint; the
// bicriteria guarantee needs beta = lemma5_beta(|models|, epsilon).
struct SaturateParams {
  double epsilon = 0.05;       // in (0, 1]
  double beta = 1.0;           // >= 1, budget inflation factor
  InnerOracle inner_oracle = InnerOracle::exact_dp;

  static double lemma5_beta(int num_models, double epsilon) {
    return 1.0 + std::log(3.0 * num_models / epsilon);
  }
};

struct SolverOptions {
  // Lazy selection in myopic and the saturation loop, where cached priorities
  // are provably upper bounds. bws always scans eagerly; see its note.
  bool lazy = true;
  bool validate_lazy = false;  // run the other path too and cross-check
  long long dp_cell_cap = 2000000000LL;  // |models| * (n+1) * (L+1) limit
  int brute_force_max_states = 20;
};

struct ObjectiveResult {
  double score = 0.0;                   // min ratio over non-degenerate models
  std::vector<double> per_model_ratio;  // degenerate models report 1
  std::vector<int> degenerate_models;
};

struct SolveReport {
  Placement placement;
  double score = 0.0;
  std::vector<double> per_model_ratio;
  std::string algorithm;
  double wall_time_ms = 0.0;
  long long budget_used = 0;
  std::vector<std::string> flags;
};

// Per-model budget-optimal placements and their values (the denominators of
// the robustness ratio).
struct PerModelOptima {
  std::vector<Placement> placements;
  std::vector<double> values;
};

// Solves the single-model knapsack for every model with the chosen oracle and
// fills profile.denominators with the achieved values. A zero value marks the
// model as degenerate; no error is raised here.
PerModelOptima optimal_per_model(const Instance& inst, RewardProfile& profile,
                                 InnerOracle oracle = InnerOracle::exact_dp);

// The robustness score of a placement: min over models of collected reward
// over the per-model optimum. Degenerate models contribute ratio 1 and are
// excluded from the min.
ObjectiveResult objective(const Instance& inst, const RewardProfile& profile,
                          const Placement& p);

// Binary search on the target level eta, greedily saturating the truncated
// multi-model score at each guess. Returns the last set recorded within
// beta * L. Requires denominators unless the profile is unfilled, in which
// case they are computed locally with params.inner_oracle.
SolveReport psi_saturate(const Instance& inst, const RewardProfile& profile,
                         const SaturateParams& params,
                         const SolverOptions& opts = {},
                         const PerModelOptima* optima = nullptr);

// Evaluates the objective on each per-model optimal placement and returns the
// best. Optimal for a single model.
SolveReport all_greedy(const Instance& inst, const RewardProfile& profile,
                       const PerModelOptima* optima = nullptr);

// Adds the affordable state with the best worst-case normalized gain per unit
// cost until no state improves the score.
SolveReport myopic(const Instance& inst, const RewardProfile& profile,
                   const SolverOptions& opts = {});

// Like myopic but scores by the unnormalized worst-case reward
// H(S) = min over models of the raw cumulative reward. H is monotone but not
// submodular, so selection is an eager argmax; validate_lazy cross-checks the
// lazy shortcut and flags divergence.
SolveReport bws(const Instance& inst, const RewardProfile& profile,
                const SolverOptions& opts = {});

// Knapsack-style dynamic program over normalized reward tuples; tuple
// comparisons keep the larger minimum coordinate, then the larger sum, then
// prefer not choosing. Exact for a single model, heuristic otherwise.
SolveReport dp_rrp(const Instance& inst, const RewardProfile& profile,
                   const SolverOptions& opts = {});

// Exhaustive subset enumeration; the testing oracle. Ties break by smaller
// cost, then lexicographic members.
SolveReport brute_force(const Instance& inst, const RewardProfile& profile,
                        const SolverOptions& opts = {});

}  // namespace rrp

#endif  // RRP_SOLVERS_HPP
