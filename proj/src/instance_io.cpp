#include "rrp/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rrp/errors.hpp"

namespace rrp {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return *it;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << text;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json j;
  j["n"] = inst.n();
  j["K"] = inst.horizon();
  j["budget"] = inst.budget;
  j["costs"] = inst.costs;
  json models = json::array();
  for (const MobilityModel& m : inst.models) {
    json jm;
    jm["initial"] = m.initial;
    json steps = json::array();
    for (int s = 0; s < m.n; ++s) {
      json row = json::array();
      for (int k = 1; k <= m.horizon; ++k) row.push_back(m.step(s, k));
      steps.push_back(std::move(row));
    }
    jm["steps"] = std::move(steps);
    json transitions = json::array();
    for (const Triple& t : m.transitions.triples()) {
      transitions.push_back(json::array({t.row, t.col, t.value}));
    }
    jm["transitions"] = std::move(transitions);
    models.push_back(std::move(jm));
  }
  j["models"] = std::move(models);
  return j.dump();
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }

  Instance inst;
  try {
    const int n = require_field(j, "n").get<int>();
    const int horizon = require_field(j, "K").get<int>();
    inst.budget = require_field(j, "budget").get<long long>();
    inst.costs = require_field(j, "costs").get<std::vector<long long>>();
    const json& models = require_field(j, "models");
    if (!models.is_array() || models.empty()) {
      throw ParseError("field 'models' must be a non-empty array");
    }
    for (std::size_t i = 0; i < models.size(); ++i) {
      const json& jm = models[i];
      MobilityModel m;
      m.n = n;
      m.horizon = horizon;
      m.initial = require_field(jm, "initial").get<std::vector<double>>();
      const json& steps = require_field(jm, "steps");
      if (static_cast<int>(steps.size()) != n) {
        throw ParseError("model " + std::to_string(i) +
                         ": 'steps' must have one row per state");
      }
      m.steps.resize(static_cast<std::size_t>(n) * horizon);
      for (int s = 0; s < n; ++s) {
        const json& row = steps[s];
        if (static_cast<int>(row.size()) != horizon) {
          throw ParseError("model " + std::to_string(i) +
                           ": every 'steps' row needs K entries");
        }
        for (int k = 1; k <= horizon; ++k) {
          m.step(s, k) = row[k - 1].get<double>();
        }
      }
      std::vector<Triple> triples;
      for (const json& t : require_field(jm, "transitions")) {
        if (!t.is_array() || t.size() != 3) {
          throw ParseError("model " + std::to_string(i) +
                           ": transitions must be [row, col, prob] triples");
        }
        triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<double>()});
      }
      m.transitions = CsrMatrix::from_triples(n, std::move(triples));
      inst.models.push_back(std::move(m));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what());
  }

  std::vector<Violation> violations = validate_instance(inst);
  if (!violations.empty()) {
    std::string msg = "instance fails validation:";
    std::size_t shown = 0;
    for (const Violation& v : violations) {
      if (shown++ == 5) {
        msg += " ... (" + std::to_string(violations.size()) + " total)";
        break;
      }
      msg += " [" + v.field + "] " + v.message + ";";
    }
    throw ValidationError(msg);
  }
  return inst;
}

void write_instance(const Instance& inst, const std::string& path) {
  write_file(path, instance_to_json(inst));
}

Instance read_instance(const std::string& path) {
  try {
    return instance_from_json(read_file(path));
  } catch (ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_mnk(const MnkInstance& mnk, const std::string& path) {
  json j;
  j["n"] = mnk.costs.size();
  j["budget"] = mnk.budget;
  j["costs"] = mnk.costs;
  j["scenarios"] = mnk.scenarios;
  write_file(path, j.dump());
}

}  // namespace rrp
