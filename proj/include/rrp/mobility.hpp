#ifndef RRP_MOBILITY_HPP
#define RRP_MOBILITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rrp/sparse.hpp"

namespace rrp {

// One mobility setting: agents start from `initial`, move by the
// row-stochastic `transitions`, and survive step k with the cumulative
// probability stored in `steps`. Immutable after construction; safe to share
// across threads.
struct MobilityModel {
  int n = 0;        // number of states
  int horizon = 0;  // K, maximum number of steps
  std::vector<double> initial;  // length n
  CsrMatrix transitions;        // n x n, rows sum to 1
  // survival matrix, stored column-major so the per-step sweep over all
  // states streams contiguously: steps[(k-1) * n + s] = P(>= k steps from s)
  std::vector<double> steps;

  double step(int s, int k) const {  // k in 1..horizon
    return steps[static_cast<std::size_t>(k - 1) * n + s];
  }
  double& step(int s, int k) {
    return steps[static_cast<std::size_t>(k - 1) * n + s];
  }

  static std::vector<double> unit_steps(int n, int horizon) {
    return std::vector<double>(static_cast<std::size_t>(n) * horizon, 1.0);
  }
};

// A set of reward states together with its total cost.
struct Placement {
  std::vector<int> members;  // sorted, unique
  long long cost = 0;

  bool empty() const { return members.empty(); }
  std::vector<std::uint8_t> indicator(int n) const;
};

// Sorts, dedups, and prices a member list against the owning instance costs.
Placement make_placement(std::vector<int> members,
                         const std::vector<long long>& costs);

// Precomputed single-state rewards: values[i][s] is the cumulative reward of
// placing only state s under model i. Denominators are the per-model optimal
// values within budget, filled by the solvers; a zero denominator marks a
// degenerate model.
struct RewardProfile {
  std::vector<std::vector<double>> values;  // |models| x n
  std::vector<double> denominators;         // empty until filled

  int num_models() const { return static_cast<int>(values.size()); }
  int num_states() const {
    return values.empty() ? 0 : static_cast<int>(values[0].size());
  }
  bool has_denominators() const {
    return !denominators.empty() &&
           denominators.size() == values.size();
  }
  bool degenerate(int i) const { return denominators[i] <= 0.0; }
};

struct Violation {
  std::string field;    // "n", "horizon", "initial", "transitions", "steps"
  long long index_a;    // state / row, -1 if not applicable
  long long index_b;    // column / step, -1 if not applicable
  double observed;
  std::string message;
};

// Diagnoses every invariant breach; an empty result means the model is valid.
std::vector<Violation> validate_model(const MobilityModel& m);

// Expected reward collected exactly at step k: propagate the survival-weighted
// initial mass k times and read off the placement states.
double per_step_reward(const MobilityModel& m, const Placement& p, int k);

// Sum of per-step rewards over k = 1..K. Step 0 (the starting position)
// yields no reward; rewards are retrieved on arrival.
double cumulative_reward(const MobilityModel& m, const Placement& p);

// Singleton rewards for every state and model in one forward pass per step,
// O(K (n + m)) per model. All models must share n and K.
RewardProfile reward_profile(const std::vector<MobilityModel>& models);

struct PageRankResult {
  std::vector<double> scores;
  int iterations = 0;
  double residual = 0.0;
};

// Power iteration PR(t) = a * propagate(PR(t-1)) + (1-a)/n, stopping when the
// L1 difference drops to tol. Validation oracle for the reward model.
PageRankResult pagerank(const CsrMatrix& transitions, double damping,
                        const std::vector<double>& init, double tol,
                        int max_iterations = 100000);

}  // namespace rrp

#endif  // RRP_MOBILITY_HPP
