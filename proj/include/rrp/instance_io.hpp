#ifndef RRP_INSTANCE_IO_HPP
#define RRP_INSTANCE_IO_HPP

#include <string>

#include "rrp/instance.hpp"
#include "rrp/knapsack.hpp"

namespace rrp {

// JSON instance document: n, K, budget, costs, and one entry per model with
// initial and steps as dense arrays and transitions as (row, col, prob)
// triples. Probabilities round-trip exactly.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

void write_instance(const Instance& inst, const std::string& path);
Instance read_instance(const std::string& path);

// Same envelope, scenario matrix instead of models; debugging aid.
void write_mnk(const MnkInstance& mnk, const std::string& path);

}  // namespace rrp

#endif  // RRP_INSTANCE_IO_HPP
