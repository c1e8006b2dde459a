#include "pocopula/scenario.hpp"

#include <fstream>
#include <sstream>

namespace pocopula {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "must be a number");
  return j.get<double>();
}

std::vector<double> numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "must be an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ParamMap param_map(const Json& j, const std::string& path) {
  ParamMap p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw SchemaError(path, "must be an object of numbers");
  for (auto it = j.begin(); it != j.end(); ++it) {
    p[it.key()] = number(it.value(), path + "." + it.key());
  }
  return p;
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "must be a string");
  return j.get<std::string>();
}

Json verdict_json(Verdict v) { return std::string(to_string(v)); }

}  // namespace

std::string to_string(Task t) {
  switch (t) {
    case Task::EVAL:
      return "EVAL";
    case Task::ORDER_CHECK:
      return "ORDER_CHECK";
    case Task::CONDITIONS:
      return "CONDITIONS";
    case Task::THEOREM:
      return "THEOREM";
    case Task::SAMPLE:
      return "SAMPLE";
    case Task::REPRO:
      return "REPRO";
  }
  return "?";
}

Task task_from_string(const std::string& s) {
  for (Task t : {Task::EVAL, Task::ORDER_CHECK, Task::CONDITIONS, Task::THEOREM, Task::SAMPLE,
                 Task::REPRO}) {
    if (s == to_string(t)) return t;
  }
  throw std::invalid_argument("unknown task '" + s + "'");
}

Baseline parse_baseline(const Json& j, const std::string& path) {
  const std::string family = text(field(j, "family", path), path + ".family");
  const Json params = j.contains("params") ? j["params"] : Json::object();
  try {
    if (family == "tabulated") {
      const std::string pp = path + ".params";
      return make_tabulated_baseline(numbers(field(params, "times", pp), pp + ".times"),
                                     numbers(field(params, "survival", pp), pp + ".survival"));
    }
    return make_baseline(family, param_map(params, path + ".params"));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

Generator parse_generator(const Json& j, const std::string& path) {
  const std::string name = text(field(j, "name", path), path + ".name");
  const ParamMap params =
      param_map(j.contains("params") ? j["params"] : Json::object(), path + ".params");
  try {
    return make_generator(name, params);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

ShockedSystem parse_model(const Json& j, const std::string& path, bool* has_probs) {
  if (!j.is_object()) throw SchemaError(path, "must be an object");
  Baseline base = parse_baseline(field(j, "baseline", path), path + ".baseline");
  std::vector<double> alphas = numbers(field(j, "alphas", path), path + ".alphas");
  Generator gen = parse_generator(field(j, "generator", path), path + ".generator");
  if (alphas.size() < 2) throw SchemaError(path + ".alphas", "needs at least 2 entries");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0)) {
      throw SchemaError(path + ".alphas[" + std::to_string(i) + "]", "must be positive");
    }
  }
  std::vector<double> probs(alphas.size(), 1.0);
  const bool given = j.contains("probs") && !j["probs"].is_null();
  if (given) {
    probs = numbers(j["probs"], path + ".probs");
    if (probs.size() != alphas.size()) {
      throw SchemaError(path + ".probs", "must have one entry per alpha");
    }
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (!(probs[i] > 0.0 && probs[i] <= 1.0)) {
        throw SchemaError(path + ".probs[" + std::to_string(i) + "]", "must lie in (0, 1]");
      }
    }
  }
  if (has_probs) *has_probs = given;
  return ShockedSystem{SystemModel{std::move(base), std::move(alphas), std::move(gen)},
                       std::move(probs)};
}

GridSpec parse_grid(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return GridSpec::parse(j.get<std::string>());
    if (!j.is_object()) throw SchemaError(path, "must be a string or an object");
    GridSpec g;
    g.lo = number(field(j, "lo", path), path + ".lo");
    g.hi = number(field(j, "hi", path), path + ".hi");
    const double c = number(field(j, "count", path), path + ".count");
    if (!(c >= 1) || c != static_cast<double>(static_cast<std::size_t>(c))) {
      throw SchemaError(path + ".count", "must be a positive integer");
    }
    g.count = static_cast<std::size_t>(c);
    g.log_spaced = j.value("log", false);
    if (g.hi < g.lo) throw SchemaError(path, "needs lo <= hi");
    return g;
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

Scenario parse_scenario(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "scenario must be a JSON object");
  Scenario s;
  const Json& ver = field(doc, "spec_version", "$");
  if (!ver.is_number_integer() || ver.get<int>() != 1) {
    throw SchemaError("spec_version", "must be 1");
  }
  s.spec_version = 1;
  if (doc.contains("models")) {
    const Json& models = doc["models"];
    if (!models.is_array()) throw SchemaError("models", "must be an array");
    if (models.size() > 2) throw SchemaError("models", "holds at most two models");
    for (std::size_t i = 0; i < models.size(); ++i) {
      bool given = false;
      s.models.push_back(parse_model(models[i], "models[" + std::to_string(i) + "]", &given));
      s.has_probs.push_back(given);
    }
  }
  if (doc.contains("task")) {
    try {
      s.task = task_from_string(text(doc["task"], "task"));
    } catch (const SchemaError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw SchemaError("task", e.what());
    }
  }
  if (doc.contains("task_params")) {
    if (!doc["task_params"].is_object()) throw SchemaError("task_params", "must be an object");
    s.task_params = doc["task_params"];
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

// ---------------------------------------------------------------------------

Json to_json(const Baseline& b) {
  Json j{{"family", b.family()}};
  if (b.family() == "tabulated") {
    j["params"] = {{"times", b.table_times()}, {"survival", b.table_survival()}};
  } else {
    j["params"] = b.params();
  }
  return j;
}

Json to_json(const Generator& g) { return {{"name", g.name()}, {"params", g.params()}}; }

Json to_json(const SystemModel& m) {
  return {{"baseline", to_json(m.baseline)},
          {"alphas", m.alphas},
          {"generator", to_json(m.generator)}};
}

Json to_json(const ShockedSystem& s, bool with_probs) {
  Json j = to_json(s.system);
  if (with_probs) j["probs"] = s.probs;
  return j;
}

Json to_json(const GridSpec& g) {
  return {{"lo", g.lo}, {"hi", g.hi}, {"count", g.count}, {"log", g.log_spaced}};
}

Json to_json(const CheckReport& r) {
  return {{"property", r.property},
          {"verdict", verdict_json(r.verdict)},
          {"witness", r.witness},
          {"grid", r.grid},
          {"tolerance", r.tolerance},
          {"violations", r.violations},
          {"evaluated", r.evaluated},
          {"note", r.note}};
}

Json to_json(const OrderWitness& w) {
  Json j{{"kind", w.kind == OrderWitness::Kind::POINTWISE ? "POINTWISE" : "RATIO"},
         {"t", w.t},
         {"lhs", w.lhs},
         {"rhs", w.rhs}};
  if (w.kind == OrderWitness::Kind::RATIO) j["t_next"] = w.t_next;
  return j;
}

Json to_json(const OrderVerdict& v) {
  Json ws = Json::array();
  for (const auto& w : v.witnesses) ws.push_back(to_json(w));
  return {{"order", to_string(v.order)},
          {"which", to_string(v.which)},
          {"verdict", verdict_json(v.verdict)},
          {"witnesses", ws},
          {"grid", v.grid},
          {"tolerance", v.tolerance},
          {"evaluated", v.evaluated},
          {"violations", v.violations},
          {"ratio_verdict", verdict_json(v.ratio_verdict)},
          {"pointwise_verdict", verdict_json(v.pointwise_verdict)},
          {"note", v.note}};
}

Json to_json(const TheoremReport& r) {
  Json hyps = Json::array();
  for (const auto& h : r.hypothesis_reports) hyps.push_back(to_json(h));
  return {{"theorem_id", r.theorem_id},
          {"statement", r.statement},
          {"hypothesis_reports", hyps},
          {"conclusion", to_json(r.conclusion)},
          {"hypotheses_hold", r.hypotheses_hold},
          {"abstained", r.abstained},
          {"consistent", r.consistent}};
}

}  // namespace pocopula
