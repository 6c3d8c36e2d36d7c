#include "rrp/knapsack.hpp"

#include <algorithm>
#include <numeric>

#include "rrp/errors.hpp"

namespace rrp {

namespace {

void check_input(const KnapsackInput& in) {
  if (in.values.size() != in.costs.size()) {
    throw DimensionError("knapsack values/costs length mismatch");
  }
  for (std::size_t i = 0; i < in.costs.size(); ++i) {
    if (in.costs[i] < 1) {
      throw ParameterError("knapsack cost at " + std::to_string(i) +
                           " must be >= 1");
    }
    if (in.values[i] < 0.0) {
      throw ParameterError("knapsack value at " + std::to_string(i) +
                           " must be >= 0");
    }
  }
  if (in.budget < 0) throw ParameterError("knapsack budget must be >= 0");
}

double sum_ascending(const std::vector<double>& values,
                     const std::vector<int>& members) {
  double total = 0.0;
  for (int s : members) total += values[s];
  return total;
}

}  // namespace

KnapsackResult knapsack_dp(const KnapsackInput& in) {
  check_input(in);
  const int n = static_cast<int>(in.values.size());
  // Spending more than the total cost never helps; clamping keeps the table
  // bounded for oversized budgets.
  long long total_cost = std::accumulate(in.costs.begin(), in.costs.end(), 0LL);
  const long long budget = std::min(in.budget, total_cost);
  const std::size_t width = static_cast<std::size_t>(budget) + 1;

  std::vector<double> prev(width, 0.0);
  std::vector<double> cur(width, 0.0);
  std::vector<bool> take(static_cast<std::size_t>(n + 1) * width, false);

  for (int i = 1; i <= n; ++i) {
    const long long c = in.costs[i - 1];
    const double v = in.values[i - 1];
    for (long long j = 0; j <= budget; ++j) {
      double keep = prev[j];
      if (j >= c) {
        double with = prev[j - c] + v;
        if (with > keep) {  // tie keeps the not-taken branch
          cur[j] = with;
          take[static_cast<std::size_t>(i) * width + j] = true;
          continue;
        }
      }
      cur[j] = keep;
    }
    prev.swap(cur);
  }

  std::vector<int> members;
  long long j = budget;
  for (int i = n; i >= 1; --i) {
    if (take[static_cast<std::size_t>(i) * width + j]) {
      members.push_back(i - 1);
      j -= in.costs[i - 1];
    }
  }
  std::reverse(members.begin(), members.end());

  KnapsackResult res;
  res.value = sum_ascending(in.values, members);
  res.placement = make_placement(std::move(members), in.costs);
  return res;
}

KnapsackResult knapsack_greedy(const KnapsackInput& in) {
  check_input(in);
  const int n = static_cast<int>(in.values.size());

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&in](int a, int b) {
    // density order via cross products, ties to the lower index
    double lhs = in.values[a] * static_cast<double>(in.costs[b]);
    double rhs = in.values[b] * static_cast<double>(in.costs[a]);
    if (lhs != rhs) return lhs > rhs;
    return a < b;
  });

  std::vector<int> members;
  long long remaining = in.budget;
  for (int s : order) {
    if (in.values[s] <= 0.0) continue;
    if (in.costs[s] <= remaining) {
      members.push_back(s);
      remaining -= in.costs[s];
    }
  }
  std::sort(members.begin(), members.end());
  double greedy_value = sum_ascending(in.values, members);

  int best_single = -1;
  for (int s = 0; s < n; ++s) {
    if (in.costs[s] > in.budget || in.values[s] <= 0.0) continue;
    if (best_single < 0 || in.values[s] > in.values[best_single]) {
      best_single = s;
    }
  }

  KnapsackResult res;
  if (best_single >= 0 && in.values[best_single] > greedy_value) {
    res.value = in.values[best_single];
    res.placement = make_placement({best_single}, in.costs);
  } else {
    res.value = greedy_value;
    res.placement = make_placement(std::move(members), in.costs);
  }
  return res;
}

MnkInstance reduce_to_mnk(const Instance& inst, const RewardProfile& profile) {
  if (!profile.has_denominators()) {
    throw ParameterError("reduce_to_mnk: profile denominators not set");
  }
  if (profile.num_states() != inst.n() ||
      profile.num_models() != inst.num_models()) {
    throw DimensionError("reduce_to_mnk: profile does not match instance");
  }
  MnkInstance mnk;
  mnk.costs = inst.costs;
  mnk.budget = inst.budget;
  mnk.scenarios.reserve(profile.values.size());
  for (int i = 0; i < profile.num_models(); ++i) {
    const double d = profile.denominators[i];
    if (d <= 0.0) {
      throw DegenerateModelError("reduce_to_mnk: model " + std::to_string(i) +
                                 " has no collectable reward within budget");
    }
    std::vector<double> row(profile.values[i].size());
    for (std::size_t s = 0; s < row.size(); ++s) {
      row[s] = profile.values[i][s] / d;
    }
    mnk.scenarios.push_back(std::move(row));
  }
  return mnk;
}

}  // namespace rrp
