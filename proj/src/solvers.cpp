#include "rrp/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <queue>

#include "rrp/errors.hpp"

namespace rrp {

namespace {

constexpr double kGainEps = 1e-12;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void require_profile(const Instance& inst, const RewardProfile& profile) {
  if (profile.num_models() != inst.num_models() ||
      profile.num_states() != inst.n()) {
    throw DimensionError("profile does not match instance");
  }
}

void require_denominators(const RewardProfile& profile) {
  if (!profile.has_denominators()) {
    throw ParameterError("profile denominators not set; run optimal_per_model");
  }
}

double sum_ascending(const std::vector<double>& values,
                     const std::vector<int>& members) {
  double total = 0.0;
  for (int s : members) total += values[s];
  return total;
}

ObjectiveResult objective_over(const std::vector<std::vector<double>>& values,
                               const std::vector<double>& denoms,
                               const Placement& p) {
  ObjectiveResult res;
  res.per_model_ratio.resize(values.size());
  bool any = false;
  double best = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (denoms[i] <= 0.0) {
      res.per_model_ratio[i] = 1.0;
      res.degenerate_models.push_back(static_cast<int>(i));
      continue;
    }
    double ratio = sum_ascending(values[i], p.members) / denoms[i];
    res.per_model_ratio[i] = ratio;
    if (!any || ratio < best) best = ratio;
    any = true;
  }
  // nothing collectable under any model: the placement earns nothing
  res.score = any ? best : 0.0;
  return res;
}

std::vector<int> nondegenerate(const std::vector<double>& denoms) {
  std::vector<int> nd;
  for (std::size_t i = 0; i < denoms.size(); ++i) {
    if (denoms[i] > 0.0) nd.push_back(static_cast<int>(i));
  }
  return nd;
}

SolveReport finish_report(const Instance& inst, const RewardProfile& profile,
                          Placement placement, std::string algorithm,
                          const Stopwatch& clock,
                          std::vector<std::string> flags = {}) {
  ObjectiveResult obj = objective(inst, profile, placement);
  SolveReport rep;
  rep.budget_used = placement.cost;
  rep.placement = std::move(placement);
  rep.score = obj.score;
  rep.per_model_ratio = std::move(obj.per_model_ratio);
  rep.algorithm = std::move(algorithm);
  rep.flags = std::move(flags);
  for (int i : obj.degenerate_models) {
    rep.flags.push_back("degenerate-model:" + std::to_string(i));
  }
  rep.wall_time_ms = clock.ms();
  return rep;
}

struct QEntry {
  double gain;
  int state;
  int stamp;
};

struct QLess {
  bool operator()(const QEntry& a, const QEntry& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;  // max-heap on gain
    return a.state > b.state;                      // lower index on top
  }
};

using LazyQueue = std::priority_queue<QEntry, std::vector<QEntry>, QLess>;

// Budgeted greedy selection shared by myopic and bws. gain(s) must reflect
// every previous commit(s'); entries are re-evaluated lazily before selection,
// which matches the eager argmax exactly because marginals never grow.
template <class GainFn, class CommitFn>
std::vector<int> greedy_budgeted(int n, const std::vector<long long>& costs,
                                 long long budget, bool lazy, GainFn gain,
                                 CommitFn commit) {
  std::vector<int> chosen;
  long long remaining = budget;
  if (lazy) {
    std::vector<QEntry> init;
    init.reserve(n);
    for (int s = 0; s < n; ++s) init.push_back({gain(s), s, 0});
    LazyQueue q(QLess(), std::move(init));
    int round = 0;
    while (!q.empty()) {
      QEntry top = q.top();
      q.pop();
      if (costs[top.state] > remaining) continue;  // stays unaffordable
      if (top.stamp != round) {
        top.gain = gain(top.state);
        top.stamp = round;
        q.push(top);
        continue;
      }
      if (top.gain <= kGainEps) break;
      chosen.push_back(top.state);
      remaining -= costs[top.state];
      commit(top.state);
      ++round;
    }
  } else {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    while (true) {
      int best = -1;
      double best_gain = 0.0;
      for (int s = 0; s < n; ++s) {
        if (in[s] || costs[s] > remaining) continue;
        double g = gain(s);
        if (best < 0 || g > best_gain) {
          best = s;
          best_gain = g;
        }
      }
      if (best < 0 || best_gain <= kGainEps) break;
      in[best] = true;
      chosen.push_back(best);
      remaining -= costs[best];
      commit(best);
    }
  }
  return chosen;
}

}  // namespace

PerModelOptima optimal_per_model(const Instance& inst, RewardProfile& profile,
                                 InnerOracle oracle) {
  require_profile(inst, profile);
  PerModelOptima out;
  out.placements.reserve(profile.values.size());
  out.values.reserve(profile.values.size());
  for (const std::vector<double>& row : profile.values) {
    KnapsackInput in{row, inst.costs, inst.budget};
    KnapsackResult res =
        oracle == InnerOracle::exact_dp ? knapsack_dp(in) : knapsack_greedy(in);
    out.placements.push_back(std::move(res.placement));
    out.values.push_back(res.value);
  }
  profile.denominators = out.values;
  return out;
}

ObjectiveResult objective(const Instance& inst, const RewardProfile& profile,
                          const Placement& p) {
  require_profile(inst, profile);
  require_denominators(profile);
  for (int s : p.members) {
    if (s < 0 || s >= inst.n()) {
      throw DimensionError("placement state " + std::to_string(s) +
                           " outside instance");
    }
  }
  return objective_over(profile.values, profile.denominators, p);
}

SolveReport psi_saturate(const Instance& inst, const RewardProfile& profile,
                         const SaturateParams& params, const SolverOptions& opts,
                         const PerModelOptima* optima) {
  Stopwatch clock;
  require_profile(inst, profile);
  if (params.epsilon <= 0.0 || params.epsilon > 1.0) {
    throw ParameterError("psi_saturate epsilon must be in (0, 1]");
  }
  if (params.beta < 1.0) throw ParameterError("psi_saturate beta must be >= 1");

  // Denominators for the saturation ratios; fall back to a local line-2
  // computation with the configured oracle when the caller has not filled
  // the profile.
  std::vector<double> denoms;
  if (optima != nullptr) {
    denoms = optima->values;
  } else if (profile.has_denominators()) {
    denoms = profile.denominators;
  } else {
    for (const std::vector<double>& row : profile.values) {
      KnapsackInput in{row, inst.costs, inst.budget};
      KnapsackResult res = params.inner_oracle == InnerOracle::exact_dp
                               ? knapsack_dp(in)
                               : knapsack_greedy(in);
      denoms.push_back(res.value);
    }
  }
  // Reporting needs profile denominators; reuse the local ones if unset.
  RewardProfile reporting = profile;
  if (!reporting.has_denominators()) reporting.denominators = denoms;

  const int n = inst.n();
  const int num_models = inst.num_models();
  const std::vector<int> nd = nondegenerate(denoms);
  const double eps = params.epsilon;
  const double budget_cap = params.beta * static_cast<double>(inst.budget);

  std::vector<double> numer(nd.size());
  double eta = 0.0;

  auto covered = [&]() {
    double sum = eta * (num_models - static_cast<int>(nd.size()));
    for (std::size_t t = 0; t < nd.size(); ++t) {
      sum += std::min(eta, numer[t] / denoms[nd[t]]);
    }
    return sum;
  };
  auto gain_of = [&](int s) {
    double g = 0.0;
    for (std::size_t t = 0; t < nd.size(); ++t) {
      double d = denoms[nd[t]];
      double before = std::min(eta, numer[t] / d);
      double after = std::min(eta, (numer[t] + profile.values[nd[t]][s]) / d);
      g += after - before;
    }
    return g / static_cast<double>(inst.costs[s]);
  };

  double eta_min = 0.0;
  double eta_max = 1.0;
  std::vector<int> best;
  bool recorded = false;

  while (eta_max - eta_min >= eps) {
    eta = (eta_max + eta_min) / 2.0;
    const double target = eta * num_models - eta * eps / 3.0;

    std::vector<int> chosen;
    long long cost = 0;
    numer.assign(nd.size(), 0.0);
    if (opts.lazy) {
      std::vector<QEntry> init;
      init.reserve(n);
      for (int s = 0; s < n; ++s) init.push_back({gain_of(s), s, 0});
      LazyQueue q(QLess(), std::move(init));
      int round = 0;
      while (covered() < target && static_cast<int>(chosen.size()) < n &&
             !q.empty()) {
        QEntry top = q.top();
        q.pop();
        if (top.stamp != round) {
          top.gain = gain_of(top.state);
          top.stamp = round;
          q.push(top);
          continue;
        }
        chosen.push_back(top.state);
        cost += inst.costs[top.state];
        for (std::size_t t = 0; t < nd.size(); ++t) {
          numer[t] += profile.values[nd[t]][top.state];
        }
        ++round;
      }
    } else {
      std::vector<bool> in(static_cast<std::size_t>(n), false);
      while (covered() < target && static_cast<int>(chosen.size()) < n) {
        int pick = -1;
        double pick_gain = 0.0;
        for (int s = 0; s < n; ++s) {
          if (in[s]) continue;
          double g = gain_of(s);
          if (pick < 0 || g > pick_gain) {
            pick = s;
            pick_gain = g;
          }
        }
        if (pick < 0) break;
        in[pick] = true;
        chosen.push_back(pick);
        cost += inst.costs[pick];
        for (std::size_t t = 0; t < nd.size(); ++t) {
          numer[t] += profile.values[nd[t]][pick];
        }
      }
    }

    if (static_cast<double>(cost) > budget_cap) {
      eta_max = eta;
    } else {
      eta_min = eta * (1.0 - eps / 3.0);
      best = chosen;
      recorded = true;
    }
  }

  std::vector<std::string> flags;
  if (!recorded) flags.push_back("no-feasible-saturation");
  Placement placement = make_placement(best, inst.costs);
  return finish_report(inst, reporting, std::move(placement), "psi-saturate",
                       clock, std::move(flags));
}

SolveReport all_greedy(const Instance& inst, const RewardProfile& profile,
                       const PerModelOptima* optima) {
  Stopwatch clock;
  require_profile(inst, profile);
  require_denominators(profile);

  PerModelOptima local;
  if (optima == nullptr) {
    for (const std::vector<double>& row : profile.values) {
      local.placements.push_back(
          knapsack_dp({row, inst.costs, inst.budget}).placement);
    }
    optima = &local;
  }

  int best = -1;
  double best_score = -1.0;
  for (std::size_t i = 0; i < optima->placements.size(); ++i) {
    double score = objective(inst, profile, optima->placements[i]).score;
    if (score > best_score) {
      best = static_cast<int>(i);
      best_score = score;
    }
  }
  Placement placement =
      best >= 0 ? optima->placements[best] : Placement{};
  return finish_report(inst, profile, std::move(placement), "all-greedy",
                       clock);
}

SolveReport myopic(const Instance& inst, const RewardProfile& profile,
                   const SolverOptions& opts) {
  Stopwatch clock;
  require_profile(inst, profile);
  require_denominators(profile);
  const int n = inst.n();
  const std::vector<int> nd = nondegenerate(profile.denominators);
  if (nd.empty()) {
    return finish_report(inst, profile, Placement{}, "myopic", clock);
  }

  // The reward function is additive, so the worst-case normalized marginal of
  // a state never changes while the set grows.
  std::vector<double> static_gain(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    double worst = 0.0;
    for (std::size_t t = 0; t < nd.size(); ++t) {
      double g = profile.values[nd[t]][s] /
                 (static_cast<double>(inst.costs[s]) *
                  profile.denominators[nd[t]]);
      if (t == 0 || g < worst) worst = g;
    }
    static_gain[s] = worst;
  }

  auto run_pass = [&](bool lazy) {
    return greedy_budgeted(
        n, inst.costs, inst.budget, lazy,
        [&static_gain](int s) { return static_gain[s]; }, [](int) {});
  };

  std::vector<int> chosen = run_pass(opts.lazy);
  std::vector<std::string> flags;
  if (opts.validate_lazy) {
    std::vector<int> other = run_pass(!opts.lazy);
    std::vector<int> a = chosen, b = other;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      flags.push_back("lazy-mismatch");
      chosen = opts.lazy ? other : chosen;  // eager result is authoritative
    }
  }
  return finish_report(inst, profile, make_placement(chosen, inst.costs),
                       "myopic", clock, std::move(flags));
}

SolveReport bws(const Instance& inst, const RewardProfile& profile,
                const SolverOptions& opts) {
  Stopwatch clock;
  require_profile(inst, profile);
  require_denominators(profile);
  const int n = inst.n();
  const std::vector<int> nd = nondegenerate(profile.denominators);
  if (nd.empty()) {
    return finish_report(inst, profile, Placement{}, "bws", clock);
  }

  auto run_pass = [&](bool lazy) {
    std::vector<double> numer(nd.size(), 0.0);
    auto current_h = [&]() {
      double h = numer[0];
      for (double v : numer) h = std::min(h, v);
      return h;
    };
    auto gain = [&](int s) {
      double h_with = numer[0] + profile.values[nd[0]][s];
      for (std::size_t t = 1; t < nd.size(); ++t) {
        h_with = std::min(h_with, numer[t] + profile.values[nd[t]][s]);
      }
      return (h_with - current_h()) / static_cast<double>(inst.costs[s]);
    };
    auto commit = [&](int s) {
      for (std::size_t t = 0; t < nd.size(); ++t) {
        numer[t] += profile.values[nd[t]][s];
      }
    };
    return greedy_budgeted(n, inst.costs, inst.budget, lazy, gain, commit);
  };

  // H is monotone but not submodular: a state's marginal can grow after
  // another is added, so stale lazy priorities are not upper bounds. The
  // eager scan is authoritative; the lazy pass is kept as an opt-in
  // cross-check that flags instances where the shortcut would diverge.
  std::vector<int> chosen = run_pass(/*lazy=*/false);
  std::vector<std::string> flags;
  if (opts.validate_lazy) {
    std::vector<int> other = run_pass(/*lazy=*/true);
    std::vector<int> a = chosen, b = other;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) flags.push_back("lazy-mismatch");
  }
  return finish_report(inst, profile, make_placement(chosen, inst.costs),
                       "bws", clock, std::move(flags));
}

SolveReport dp_rrp(const Instance& inst, const RewardProfile& profile,
                   const SolverOptions& opts) {
  Stopwatch clock;
  require_profile(inst, profile);
  require_denominators(profile);
  const int n = inst.n();
  const std::vector<int> nd = nondegenerate(profile.denominators);
  if (nd.empty()) {
    return finish_report(inst, profile, Placement{}, "dp-rrp", clock);
  }

  long long total_cost =
      std::accumulate(inst.costs.begin(), inst.costs.end(), 0LL);
  const long long budget = std::min(inst.budget, total_cost);
  const long long cells = static_cast<long long>(inst.num_models()) *
                          (static_cast<long long>(n) + 1) * (budget + 1);
  if (cells > opts.dp_cell_cap) {
    throw ResourceError("dp_rrp table of " + std::to_string(cells) +
                        " cells exceeds cap " +
                        std::to_string(opts.dp_cell_cap));
  }

  const std::size_t tuple_len = nd.size();
  const std::size_t width = static_cast<std::size_t>(budget) + 1;

  // Normalized singleton tuples g({s}), restricted to non-degenerate models.
  std::vector<double> g(static_cast<std::size_t>(n) * tuple_len);
  for (int s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < tuple_len; ++t) {
      g[s * tuple_len + t] =
          profile.values[nd[t]][s] / profile.denominators[nd[t]];
    }
  }

  std::vector<double> prev(width * tuple_len, 0.0);
  std::vector<double> cur(width * tuple_len, 0.0);
  std::vector<bool> take(static_cast<std::size_t>(n + 1) * width, false);

  for (int i = 1; i <= n; ++i) {
    const long long c = inst.costs[i - 1];
    const double* gi = &g[static_cast<std::size_t>(i - 1) * tuple_len];
    for (long long j = 0; j <= budget; ++j) {
      const double* keep = &prev[static_cast<std::size_t>(j) * tuple_len];
      double* out = &cur[static_cast<std::size_t>(j) * tuple_len];
      bool taken = false;
      if (j >= c) {
        const double* base = &prev[static_cast<std::size_t>(j - c) * tuple_len];
        double min_take = base[0] + gi[0];
        double sum_take = 0.0;
        double min_keep = keep[0];
        double sum_keep = 0.0;
        for (std::size_t t = 0; t < tuple_len; ++t) {
          double w = base[t] + gi[t];
          min_take = std::min(min_take, w);
          sum_take += w;
          min_keep = std::min(min_keep, keep[t]);
          sum_keep += keep[t];
        }
        // larger minimum wins, then larger sum; exact tie keeps the
        // not-chosen branch
        if (min_take > min_keep ||
            (min_take == min_keep && sum_take > sum_keep)) {
          for (std::size_t t = 0; t < tuple_len; ++t) out[t] = base[t] + gi[t];
          take[static_cast<std::size_t>(i) * width + j] = true;
          taken = true;
        }
      }
      if (!taken) {
        for (std::size_t t = 0; t < tuple_len; ++t) out[t] = keep[t];
      }
    }
    prev.swap(cur);
  }

  std::vector<int> members;
  long long j = budget;
  for (int i = n; i >= 1; --i) {
    if (take[static_cast<std::size_t>(i) * width + j]) {
      members.push_back(i - 1);
      j -= inst.costs[i - 1];
    }
  }
  std::reverse(members.begin(), members.end());
  return finish_report(inst, profile, make_placement(members, inst.costs),
                       "dp-rrp", clock);
}

SolveReport brute_force(const Instance& inst, const RewardProfile& profile,
                        const SolverOptions& opts) {
  Stopwatch clock;
  require_profile(inst, profile);
  require_denominators(profile);
  const int n = inst.n();
  if (n > opts.brute_force_max_states || n > 62) {
    throw ResourceError("brute_force: n=" + std::to_string(n) +
                        " exceeds oracle cap " +
                        std::to_string(std::min(opts.brute_force_max_states,
                                                62)));
  }
  const std::vector<int> nd = nondegenerate(profile.denominators);
  if (nd.empty()) {
    return finish_report(inst, profile, Placement{}, "brute-force", clock);
  }

  auto members_of = [n](std::uint64_t mask) {
    std::vector<int> out;
    for (int s = 0; s < n; ++s) {
      if (mask & (1ull << s)) out.push_back(s);
    }
    return out;
  };

  std::uint64_t best_mask = 0;
  double best_score = 0.0;
  long long best_cost = 0;
  bool have_best = false;

  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    long long cost = 0;
    for (int s = 0; s < n; ++s) {
      if (mask & (1ull << s)) cost += inst.costs[s];
    }
    if (cost > inst.budget) continue;

    double score = 0.0;
    for (std::size_t t = 0; t < nd.size(); ++t) {
      double numer = 0.0;
      for (int s = 0; s < n; ++s) {
        if (mask & (1ull << s)) numer += profile.values[nd[t]][s];
      }
      double ratio = numer / profile.denominators[nd[t]];
      if (t == 0 || ratio < score) score = ratio;
    }

    bool better = false;
    if (!have_best || score > best_score) {
      better = true;
    } else if (score == best_score) {
      if (cost < best_cost) {
        better = true;
      } else if (cost == best_cost &&
                 members_of(mask) < members_of(best_mask)) {
        better = true;
      }
    }
    if (better) {
      best_mask = mask;
      best_score = score;
      best_cost = cost;
      have_best = true;
    }
  }

  return finish_report(inst, profile,
                       make_placement(members_of(best_mask), inst.costs),
                       "brute-force", clock);
}

}  // namespace rrp
