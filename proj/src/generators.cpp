#include "rrp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rrp/errors.hpp"
#include "rrp/rng.hpp"

namespace rrp {

Digraph gen_erdos_renyi(int n, double avg_in_degree, std::uint64_t seed) {
  if (n < 1) throw ParameterError("gen_erdos_renyi: n must be >= 1");
  if (avg_in_degree < 0.0) {
    throw ParameterError("gen_erdos_renyi: average in-degree must be >= 0");
  }
  if (avg_in_degree >= n) {
    throw ParameterError("gen_erdos_renyi: average in-degree " +
                         std::to_string(avg_in_degree) +
                         " must be below n=" + std::to_string(n));
  }
  Digraph g;
  g.n = n;
  if (n == 1) return g;
  const double p = avg_in_degree / (n - 1);
  Rng rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.u01() < p) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

Digraph gen_scale_free(int n, double p_beta, std::uint64_t seed) {
  if (n < 1) throw ParameterError("gen_scale_free: n must be >= 1");
  if (p_beta <= 0.0 || p_beta >= 1.0) {
    throw ParameterError("gen_scale_free: p_beta must be in (0, 1)");
  }
  const double p_gamma = (1.0 - p_beta) / 3.0;
  const double p_alpha = 2.0 * p_gamma;

  Digraph g;
  g.n = n;
  int nodes = 1;  // start from a single isolated node
  Rng rng(seed);
  std::vector<int> in_ends;   // one entry per edge, smoothing adds +1 per node
  std::vector<int> out_ends;
  std::unordered_set<std::uint64_t> seen;

  auto pick = [&](const std::vector<int>& ends) {
    // P(v) proportional to degree(v) + 1: one slot per edge endpoint plus one
    // uniform slot per node.
    double r = rng.u01() * (ends.size() + nodes);
    std::size_t idx = static_cast<std::size_t>(r);
    if (idx < ends.size()) return ends[idx];
    int v = static_cast<int>(idx - ends.size());
    return v >= nodes ? nodes - 1 : v;
  };
  auto add_edge = [&](int u, int v) {
    std::uint64_t key =
        static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v;
    if (!seen.insert(key).second) return false;
    g.edges.emplace_back(u, v);
    out_ends.push_back(u);
    in_ends.push_back(v);
    return true;
  };

  while (nodes < n) {
    double r = rng.u01();
    if (r < p_alpha) {
      int v = pick(in_ends);
      int w = nodes++;
      add_edge(w, v);
    } else if (r < p_alpha + p_beta) {
      int u = pick(out_ends);
      int v = pick(in_ends);
      add_edge(u, v);  // duplicates are skipped without a retry
    } else {
      int u = pick(out_ends);
      int w = nodes++;
      add_edge(u, w);
    }
  }
  return g;
}

MobilityModel model_from_weights(const Digraph& g,
                                 const std::vector<double>& edge_weights,
                                 int horizon, StepModel step_model) {
  if (edge_weights.size() != g.edges.size()) {
    throw DimensionError("model_from_weights: weight count " +
                         std::to_string(edge_weights.size()) + " != edge count " +
                         std::to_string(g.edges.size()));
  }
  if (horizon < 1) throw ParameterError("model_from_weights: horizon must be >= 1");

  const int n = g.n;
  std::vector<double> out_sum(static_cast<std::size_t>(n), 0.0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    out_sum[g.edges[e].first] += edge_weights[e];
  }

  std::vector<Triple> triples;
  triples.reserve(g.edges.size() + n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    double w = edge_weights[e];
    if (w <= 0.0) continue;
    const auto [u, v] = g.edges[e];
    triples.push_back({u, v, w / out_sum[u]});
  }
  for (int s = 0; s < n; ++s) {
    if (out_sum[s] <= 0.0) triples.push_back({s, s, 1.0});  // absorbing
  }

  MobilityModel m;
  m.n = n;
  m.horizon = horizon;
  m.transitions = CsrMatrix::from_triples(n, std::move(triples));

  double total = std::accumulate(out_sum.begin(), out_sum.end(), 0.0);
  m.initial.resize(static_cast<std::size_t>(n));
  if (total > 0.0) {
    for (int s = 0; s < n; ++s) m.initial[s] = out_sum[s] / total;
  } else {
    for (int s = 0; s < n; ++s) m.initial[s] = 1.0 / n;
  }

  if (step_model == StepModel::always_full) {
    m.steps = MobilityModel::unit_steps(n, horizon);
  } else {
    m.steps.resize(static_cast<std::size_t>(n) * horizon);
    for (int k = 1; k <= horizon; ++k) {
      for (int s = 0; s < n; ++s) {
        m.step(s, k) = static_cast<double>(horizon - k + 1) / horizon;
      }
    }
  }
  return m;
}

Instance sample_settings(const Digraph& g, int num_settings, int horizon,
                         double budget_fraction, std::uint64_t seed,
                         StepModel step_model) {
  if (num_settings < 1) {
    throw ParameterError("sample_settings: need at least one setting");
  }
  if (budget_fraction <= 0.0 || budget_fraction > 1.0) {
    throw ParameterError("sample_settings: budget fraction must be in (0, 1]");
  }

  const int n = g.n;
  std::vector<int> out_degree(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges) out_degree[u]++;

  Instance inst;
  inst.models.reserve(num_settings);
  std::vector<long long> pos_in_neighbors(static_cast<std::size_t>(n), 0);

  for (int i = 1; i <= num_settings; ++i) {
    Rng rng(seed ^ static_cast<std::uint64_t>(i));
    std::vector<double> weights(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const int d = out_degree[g.edges[e].first];
      double w = rng.normal(1.0 / d, static_cast<double>(i) / (10.0 * d));
      weights[e] = w < 0.0 ? 0.0 : w;
      if (weights[e] > 0.0) pos_in_neighbors[g.edges[e].second]++;
    }
    inst.models.push_back(model_from_weights(g, weights, horizon, step_model));
  }

  inst.costs.resize(static_cast<std::size_t>(n));
  long long total_cost = 0;
  for (int s = 0; s < n; ++s) {
    long long c = pos_in_neighbors[s] / num_settings;  // rounded-down average
    inst.costs[s] = std::max(1LL, c);
    total_cost += inst.costs[s];
  }
  inst.budget = static_cast<long long>(
      std::floor(budget_fraction * static_cast<double>(total_cost)));
  return inst;
}

Digraph gen_erdos_renyi(const GeneratorConfig& cfg) {
  return gen_erdos_renyi(cfg.n, cfg.avg_in_degree, cfg.seed);
}

Digraph gen_scale_free(const GeneratorConfig& cfg) {
  return gen_scale_free(cfg.n, cfg.p_beta, cfg.seed);
}

Instance sample_settings(const Digraph& g, const GeneratorConfig& cfg) {
  return sample_settings(g, cfg.num_settings, cfg.horizon, cfg.budget_fraction,
                         cfg.seed, cfg.step_model);
}

SubsetCollection read_collection(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open collection file: " + path);
  SubsetCollection col;
  std::unordered_map<std::string, int> ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<int> subset;
    std::string tok;
    while (ss >> tok) {
      auto [it, fresh] = ids.emplace(tok, static_cast<int>(ids.size()));
      if (fresh) col.item_names.push_back(tok);
      subset.push_back(it->second);
    }
    if (subset.empty()) continue;  // blank lines are allowed
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    col.subsets.push_back(std::move(subset));
  }
  col.num_items = static_cast<int>(ids.size());
  if (col.subsets.empty()) {
    throw ParseError("collection file has no subsets: " + path);
  }
  return col;
}

Instance gen_hitting_set_adversarial(const SubsetCollection& collection,
                                     long long budget) {
  const int num_subsets = static_cast<int>(collection.subsets.size());
  const int num_items = collection.num_items;
  if (num_subsets < 1) {
    throw ParameterError("adversarial: collection has no subsets");
  }
  if (num_items < 1) {
    throw ParameterError("adversarial: collection has no items");
  }
  if (budget < 1) throw ParameterError("adversarial: budget must be >= 1");
  for (std::size_t i = 0; i < collection.subsets.size(); ++i) {
    if (collection.subsets[i].empty()) {
      throw ParameterError("adversarial: subset " + std::to_string(i) +
                           " is empty, its reward is unreachable");
    }
    for (int item : collection.subsets[i]) {
      if (item < 0 || item >= num_items) {
        throw ParameterError("adversarial: subset " + std::to_string(i) +
                             " references unknown item " +
                             std::to_string(item));
      }
    }
  }

  // Left states 0..M-1 mirror subsets, right states M..M+X-1 mirror items and
  // are absorbing. Model i funnels all left mass into left state i, which
  // spreads uniformly over its subset's items.
  const int n = num_subsets + num_items;
  const int horizon = 3;  // >= 2 so mass reaches the right side

  Instance inst;
  inst.costs.assign(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < num_subsets; ++i) inst.costs[i] = budget + 1;
  inst.budget = budget;

  std::vector<double> initial(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < num_subsets; ++i) initial[i] = 1.0 / num_subsets;

  for (int i = 0; i < num_subsets; ++i) {
    std::vector<Triple> triples;
    for (int j = 0; j < num_subsets; ++j) {
      if (j != i) triples.push_back({j, i, 1.0});
    }
    const std::vector<int>& subset = collection.subsets[i];
    const double p = 1.0 / static_cast<double>(subset.size());
    for (int item : subset) {
      triples.push_back({i, num_subsets + item, p});
    }
    for (int j = 0; j < num_items; ++j) {
      triples.push_back({num_subsets + j, num_subsets + j, 1.0});
    }
    MobilityModel m;
    m.n = n;
    m.horizon = horizon;
    m.initial = initial;
    m.transitions = CsrMatrix::from_triples(n, std::move(triples));
    m.steps = MobilityModel::unit_steps(n, horizon);
    inst.models.push_back(std::move(m));
  }
  return inst;
}

long long cost_from_frequency(long long frequency) {
  if (frequency < 0) {
    throw ParameterError("cost_from_frequency: frequency must be >= 0");
  }
  return frequency / 25 + 50;
}

}  // namespace rrp
