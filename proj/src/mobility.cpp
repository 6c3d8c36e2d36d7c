#include "rrp/mobility.hpp"

#include <algorithm>
#include <cmath>

#include "rrp/errors.hpp"

namespace rrp {

namespace {

constexpr double kSumTol = 1e-9;
constexpr double kMonotoneTol = 1e-12;

void check_placement(const MobilityModel& m, const Placement& p) {
  for (int s : p.members) {
    if (s < 0 || s >= m.n) {
      throw DimensionError("placement state " + std::to_string(s) +
                           " outside model with n=" + std::to_string(m.n));
    }
  }
}

// Survival-weighted starting mass for step k: initial . steps_k
std::vector<double> weighted_start(const MobilityModel& m, int k) {
  std::vector<double> x(static_cast<std::size_t>(m.n));
  for (int s = 0; s < m.n; ++s) x[s] = m.initial[s] * m.step(s, k);
  return x;
}

}  // namespace

std::vector<std::uint8_t> Placement::indicator(int n) const {
  std::vector<std::uint8_t> r(static_cast<std::size_t>(n), 0);
  for (int s : members) r[s] = 1;
  return r;
}

Placement make_placement(std::vector<int> members,
                         const std::vector<long long>& costs) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Placement p;
  for (int s : members) {
    if (s < 0 || s >= static_cast<int>(costs.size())) {
      throw DimensionError("placement state " + std::to_string(s) +
                           " outside cost vector of length " +
                           std::to_string(costs.size()));
    }
    p.cost += costs[s];
  }
  p.members = std::move(members);
  return p;
}

std::vector<Violation> validate_model(const MobilityModel& m) {
  std::vector<Violation> out;
  auto add = [&out](std::string field, long long a, long long b, double obs,
                    std::string msg) {
    out.push_back({std::move(field), a, b, obs, std::move(msg)});
  };

  if (m.n < 1) {
    add("n", -1, -1, m.n, "state count must be >= 1");
    return out;
  }
  if (m.horizon < 1) {
    add("horizon", -1, -1, m.horizon, "horizon must be >= 1");
    return out;
  }

  if (static_cast<int>(m.initial.size()) != m.n) {
    add("initial", -1, -1, static_cast<double>(m.initial.size()),
        "initial has wrong length");
  } else {
    double sum = 0.0;
    for (int s = 0; s < m.n; ++s) {
      if (m.initial[s] < 0.0) {
        add("initial", s, -1, m.initial[s], "negative initial probability");
      }
      sum += m.initial[s];
    }
    if (std::abs(sum - 1.0) > kSumTol) {
      add("initial", -1, -1, sum, "initial distribution does not sum to 1");
    }
  }

  if (m.transitions.n != m.n) {
    add("transitions", -1, -1, m.transitions.n, "transition matrix has wrong size");
  } else {
    for (int s = 0; s < m.n; ++s) {
      double sum = 0.0;
      for (int e = m.transitions.row_ptr[s]; e < m.transitions.row_ptr[s + 1];
           ++e) {
        if (m.transitions.val[e] < 0.0) {
          add("transitions", s, m.transitions.col[e], m.transitions.val[e],
              "negative transition probability");
        }
        sum += m.transitions.val[e];
      }
      if (std::abs(sum - 1.0) > kSumTol) {
        add("transitions", s, -1, sum,
            "row " + std::to_string(s) + " sums to " + std::to_string(sum));
      }
    }
  }

  if (m.steps.size() != static_cast<std::size_t>(m.n) * m.horizon) {
    add("steps", -1, -1, static_cast<double>(m.steps.size()),
        "steps matrix has wrong size");
  } else {
    for (int s = 0; s < m.n; ++s) {
      for (int k = 1; k <= m.horizon; ++k) {
        double v = m.step(s, k);
        if (v < 0.0 || v > 1.0) {
          add("steps", s, k, v, "step probability outside [0, 1]");
        }
        if (k > 1 && v > m.step(s, k - 1) + kMonotoneTol) {
          add("steps", s, k, v,
              "cumulative step probability increases at (s=" +
                  std::to_string(s) + ", k=" + std::to_string(k) + ")");
        }
      }
    }
  }
  return out;
}

double per_step_reward(const MobilityModel& m, const Placement& p, int k) {
  if (k < 1 || k > m.horizon) {
    throw RangeError("step index " + std::to_string(k) + " outside 1.." +
                     std::to_string(m.horizon));
  }
  check_placement(m, p);

  std::vector<double> x = weighted_start(m, k);
  std::vector<double> y(x.size());
  for (int t = 0; t < k; ++t) {
    m.transitions.propagate(x, y);
    x.swap(y);
  }
  double reward = 0.0;
  for (int s : p.members) reward += x[s];
  return reward;
}

double cumulative_reward(const MobilityModel& m, const Placement& p) {
  check_placement(m, p);
  double total = 0.0;
  for (int k = 1; k <= m.horizon; ++k) total += per_step_reward(m, p, k);
  return total;
}

RewardProfile reward_profile(const std::vector<MobilityModel>& models) {
  if (models.empty()) throw ParameterError("reward_profile: no models");
  const int n = models[0].n;
  const int horizon = models[0].horizon;
  for (const MobilityModel& m : models) {
    if (m.n != n || m.horizon != horizon) {
      throw DimensionError("models disagree on n or K");
    }
  }

  RewardProfile profile;
  profile.values.reserve(models.size());
  // sum_k T^k (I . M_k) evaluated Horner-style: w <- (I . M_k) + T w from
  // k = K down to 1, then one final propagation. One fused pass per step.
  std::vector<double> w(static_cast<std::size_t>(n));
  std::vector<double> tmp(static_cast<std::size_t>(n));
  for (const MobilityModel& m : models) {
    w = weighted_start(m, horizon);
    for (int k = horizon - 1; k >= 1; --k) {
      const double* survival = &m.steps[static_cast<std::size_t>(k - 1) * n];
      for (int s = 0; s < n; ++s) tmp[s] = m.initial[s] * survival[s];
      m.transitions.propagate_add(w, tmp);
      w.swap(tmp);
    }
    std::vector<double> row(static_cast<std::size_t>(n), 0.0);
    m.transitions.propagate_add(w, row);
    profile.values.push_back(std::move(row));
  }
  return profile;
}

PageRankResult pagerank(const CsrMatrix& transitions, double damping,
                        const std::vector<double>& init, double tol,
                        int max_iterations) {
  if (damping <= 0.0 || damping > 1.0) {
    throw ParameterError("pagerank damping must be in (0, 1]");
  }
  if (tol <= 0.0) throw ParameterError("pagerank tol must be > 0");
  if (max_iterations < 1) throw ParameterError("pagerank iteration cap < 1");
  if (static_cast<int>(init.size()) != transitions.n) {
    throw DimensionError("pagerank init length " + std::to_string(init.size()) +
                         " != " + std::to_string(transitions.n));
  }

  const int n = transitions.n;
  const double teleport = (1.0 - damping) / n;
  std::vector<double> cur = init;
  std::vector<double> next(cur.size());
  double residual = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    transitions.propagate(cur, next);
    if (damping != 1.0) {
      for (int s = 0; s < n; ++s) next[s] = damping * next[s] + teleport;
    }
    residual = 0.0;
    for (int s = 0; s < n; ++s) residual += std::abs(next[s] - cur[s]);
    cur.swap(next);
    if (residual <= tol) return {std::move(cur), it, residual};
  }
  throw ConvergenceError("pagerank did not converge after " +
                             std::to_string(max_iterations) +
                             " iterations, last residual " +
                             std::to_string(residual),
                         residual);
}

}  // namespace rrp
