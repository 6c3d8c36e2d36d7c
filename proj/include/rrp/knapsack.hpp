#ifndef RRP_KNAPSACK_HPP
#define RRP_KNAPSACK_HPP

#include <vector>

#include "rrp/instance.hpp"
#include "rrp/mobility.hpp"

namespace rrp {

struct KnapsackInput {
  std::vector<double> values;    // non-negative reals
  std::vector<long long> costs;  // positive integers
  long long budget = 0;
};

struct KnapsackResult {
  Placement placement;
  double value = 0.0;  // sum of values over members, ascending index order
};

// Exact 0-1 knapsack by the classic (n+1) x (L+1) table with backtracking.
// Pseudo-polynomial in the budget; values stay real. Ties prefer not taking
// the current item, which makes the result deterministic.
KnapsackResult knapsack_dp(const KnapsackInput& in);

// Density-ordered greedy that skips unaffordable items and continues, then
// takes the better of the greedy set and the best single feasible item. The
// correction realizes the standard 1/2 guarantee against the exact optimum.
KnapsackResult knapsack_greedy(const KnapsackInput& in);

// Max-Min 0-1 Knapsack instance: one value row per scenario.
struct MnkInstance {
  std::vector<std::vector<double>> scenarios;  // |models| x n
  std::vector<long long> costs;
  long long budget = 0;
};

// Normalizes the profile rows by the per-model optimal values, yielding the
// scenario matrix whose max-min optimum equals the robust placement optimum.
// Requires every denominator to be positive.
MnkInstance reduce_to_mnk(const Instance& inst, const RewardProfile& profile);

}  // namespace rrp

#endif  // RRP_KNAPSACK_HPP
