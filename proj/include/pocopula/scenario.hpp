#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pocopula/checks.hpp"
#include "pocopula/orders.hpp"
#include "pocopula/sampling.hpp"
#include "pocopula/system.hpp"
#include "pocopula/theorems.hpp"

namespace pocopula {

using Json = nlohmann::json;

enum class Task { EVAL, ORDER_CHECK, CONDITIONS, THEOREM, SAMPLE, REPRO };

std::string to_string(Task t);
Task task_from_string(const std::string& s);

/// Malformed scenario input; the message starts with the offending field
/// path, e.g. "models[1].alphas[2]: must be a positive number".
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::invalid_argument(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct Scenario {
  int spec_version = 1;
  /// Zero, one or two models. Models without `probs` get all-ones
  /// probabilities and has_probs = false.
  std::vector<ShockedSystem> models;
  std::vector<bool> has_probs;
  Task task = Task::EVAL;
  Json task_params = Json::object();
};

Scenario parse_scenario(const Json& doc);
Scenario load_scenario(const std::string& path);

ShockedSystem parse_model(const Json& j, const std::string& path, bool* has_probs = nullptr);
Baseline parse_baseline(const Json& j, const std::string& path);
Generator parse_generator(const Json& j, const std::string& path);
GridSpec parse_grid(const Json& j, const std::string& path);

Json to_json(const Baseline& b);
Json to_json(const Generator& g);
Json to_json(const SystemModel& m);
Json to_json(const ShockedSystem& s, bool with_probs = true);
Json to_json(const GridSpec& g);
Json to_json(const CheckReport& r);
Json to_json(const OrderWitness& w);
Json to_json(const OrderVerdict& v);
Json to_json(const TheoremReport& r);

}  // namespace pocopula
