#include "rrp/instance.hpp"

#include <string>

namespace rrp {

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  if (inst.models.empty()) {
    out.push_back({"models", -1, -1, 0.0, "instance has no models"});
    return out;
  }
  const int n = inst.n();
  const int horizon = inst.horizon();
  for (std::size_t i = 0; i < inst.models.size(); ++i) {
    const MobilityModel& m = inst.models[i];
    if (m.n != n || m.horizon != horizon) {
      out.push_back({"models[" + std::to_string(i) + "]",
                     static_cast<long long>(i), -1, static_cast<double>(m.n),
                     "model does not share n or K with model 0"});
      continue;
    }
    for (Violation v : validate_model(m)) {
      v.field = "models[" + std::to_string(i) + "]." + v.field;
      out.push_back(std::move(v));
    }
  }
  if (static_cast<int>(inst.costs.size()) != n) {
    out.push_back({"costs", -1, -1, static_cast<double>(inst.costs.size()),
                   "cost vector has wrong length"});
  } else {
    for (int s = 0; s < n; ++s) {
      if (inst.costs[s] < 1) {
        out.push_back({"costs", s, -1, static_cast<double>(inst.costs[s]),
                       "costs must be positive integers"});
      }
    }
  }
  if (inst.budget < 0) {
    out.push_back({"budget", -1, -1, static_cast<double>(inst.budget),
                   "budget must be >= 0"});
  }
  return out;
}

}  // namespace rrp
