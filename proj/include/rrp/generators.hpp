#ifndef RRP_GENERATORS_HPP
#define RRP_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rrp/instance.hpp"

namespace rrp {

// How the step-survival matrix is filled: agents always take all K steps, or
// survive step k with probability (K - k + 1) / K.
enum class StepModel { always_full, uniform_steps };

struct GeneratorConfig {
  int n = 10000;
  double avg_in_degree = 6.0;   // Erdos-Renyi
  double p_beta = 0.8;          // scale-free edge-step probability
  int num_settings = 10;
  int horizon = 6;
  double budget_fraction = 0.25;  // L as a fraction of total cost
  std::uint64_t seed = 1;
  StepModel step_model = StepModel::always_full;
};

struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // duplicate-free, self-loops allowed
};

// Each ordered pair (u, v), u != v, becomes an edge independently with
// probability avg_in_degree / (n - 1).
Digraph gen_erdos_renyi(int n, double avg_in_degree, std::uint64_t seed);

// Directed preferential attachment with three step kinds: add a node with an
// out-edge (alpha), add an edge between existing nodes (beta), add a node with
// an in-edge (gamma), where gamma = (1 - beta) / 3 and alpha = 2 * gamma.
// Degree choices are smoothed with offsets delta_in = delta_out = 1; runs
// until n nodes exist.
Digraph gen_scale_free(int n, double p_beta, std::uint64_t seed);

// Builds one mobility model from per-edge weights: rows are normalized
// weights, all-zero rows become absorbing self-loops, the initial distribution
// is proportional to per-node outgoing weight sums.
MobilityModel model_from_weights(const Digraph& g,
                                 const std::vector<double>& edge_weights,
                                 int horizon, StepModel step_model);

// Samples num_settings models on a shared graph: setting i draws edge (u, v)
// weights from Normal(1/d_u, i / (10 d_u)) clipped at zero, with d_u the
// out-degree of u. State costs are the rounded-down average count of
// positive-weight in-neighbors across settings, clamped to >= 1; the budget is
// floor(budget_fraction * total cost). Setting i uses stream seed ^ i.
Instance sample_settings(const Digraph& g, int num_settings, int horizon,
                         double budget_fraction, std::uint64_t seed,
                         StepModel step_model = StepModel::always_full);

struct SubsetCollection {
  int num_items = 0;
  std::vector<std::vector<int>> subsets;
  std::vector<std::string> item_names;  // original tokens, by item id
};

// Convenience entry points over the shared parameter bundle.
Digraph gen_erdos_renyi(const GeneratorConfig& cfg);
Digraph gen_scale_free(const GeneratorConfig& cfg);
Instance sample_settings(const Digraph& g, const GeneratorConfig& cfg);

// Plain text collection: one subset per line, whitespace-separated item
// identifiers. Ids are assigned in first-seen order.
SubsetCollection read_collection(const std::string& path);

// The hitting-set reduction: one left state per subset, one absorbing right
// state per item, one model per subset. Placements that miss some subset score
// exactly zero; hitting sets score at least 1 / #items.
Instance gen_hitting_set_adversarial(const SubsetCollection& collection,
                                     long long budget);

// Cost rule for visit-frequency data: floor(frequency / 25 + 50).
long long cost_from_frequency(long long frequency);

}  // namespace rrp

#endif  // RRP_GENERATORS_HPP
