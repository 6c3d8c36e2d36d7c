#ifndef RRP_INSTANCE_HPP
#define RRP_INSTANCE_HPP

#include <vector>

#include "rrp/mobility.hpp"

namespace rrp {

// A robust placement problem: a family of mobility models over one shared
// state set, per-state integer costs, and a budget.
struct Instance {
  std::vector<MobilityModel> models;
  std::vector<long long> costs;  // length n, all >= 1
  long long budget = 0;

  int n() const { return models.empty() ? 0 : models[0].n; }
  int horizon() const { return models.empty() ? 0 : models[0].horizon; }
  int num_models() const { return static_cast<int>(models.size()); }
};

// Model invariants plus family-level checks (shared dimensions, positive
// costs, non-negative budget). Violations from model i are prefixed with the
// model index in the field name.
std::vector<Violation> validate_instance(const Instance& inst);

}  // namespace rrp

#endif  // RRP_INSTANCE_HPP
