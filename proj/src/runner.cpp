#include "pocopula/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "pocopula/repro.hpp"

namespace pocopula {

namespace {

namespace fs = std::filesystem;

const ShockedSystem& model_at(const Scenario& s, std::size_t i) {
  if (s.models.size() <= i) {
    throw SchemaError("models", to_string(s.task) + " needs " + std::to_string(i + 1) +
                                    " model(s), got " + std::to_string(s.models.size()));
  }
  return s.models[i];
}

bool shocked(const Scenario& s) {
  for (bool b : s.has_probs) {
    if (b) return true;
  }
  return false;
}

std::string param_string(const Json& p, const char* key, const std::string& fallback) {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_string()) throw SchemaError(std::string("task_params.") + key, "must be a string");
  return p[key].get<std::string>();
}

std::uint64_t param_uint(const Json& p, const char* key, std::uint64_t fallback) {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_number_unsigned() && !(p[key].is_number_integer() && p[key].get<long long>() >= 0)) {
    throw SchemaError(std::string("task_params.") + key, "must be a non-negative integer");
  }
  return p[key].get<std::uint64_t>();
}

std::optional<GridSpec> param_grid(const Json& p) {
  if (!p.contains("grid")) return std::nullopt;
  return parse_grid(p["grid"], "task_params.grid");
}

std::ofstream open_out(const RunOptions& o, const std::string& name) {
  fs::create_directories(*o.out_dir);
  const fs::path path = fs::path(*o.out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  return f;
}

// Evaluates f, mapping domain errors to NaN (null in JSON).
template <class F>
double guarded(F&& f) {
  try {
    return f();
  } catch (const std::domain_error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string csv_num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Verdict worst(Verdict a, Verdict b) {
  if (a == Verdict::FAILS || b == Verdict::FAILS) return Verdict::FAILS;
  if (a == Verdict::INCONCLUSIVE || b == Verdict::INCONCLUSIVE) return Verdict::INCONCLUSIVE;
  return Verdict::HOLDS;
}

// --- tasks ------------------------------------------------------------------

Json task_eval(const Scenario& s, const RunOptions& o, int* code) {
  model_at(s, 0);
  Json out = Json::array();
  for (std::size_t k = 0; k < s.models.size(); ++k) {
    const ShockedSystem& sm = s.models[k];
    const SystemModel& m = sm.system;
    GridSpec grid;
    if (auto g = param_grid(s.task_params)) {
      grid = *g;
    } else {
      grid.lo = m.baseline.quantile(0.001);
      grid.hi = m.baseline.quantile(0.999);
      grid.count = 50;
      grid.log_spaced = false;
    }
    Json rows = Json::array();
    std::ofstream csv;
    if (o.out_dir) {
      csv = open_out(o, "eval_model" + std::to_string(k) + ".csv");
      csv << "t,series_survival,series_hazard,parallel_cdf,parallel_reversed_hazard";
      if (s.has_probs[k]) csv << ",shocked_series_survival";
      csv << '\n';
    }
    for (double t : grid.points()) {
      const double ss = series_survival(m, t);
      const double sh = guarded([&] { return series_hazard(m, t); });
      const double pc = parallel_cdf(m, t);
      const double prh = guarded([&] { return parallel_reversed_hazard(m, t); });
      Json row{{"t", t},
               {"series_survival", num(ss)},
               {"series_hazard", num(sh)},
               {"parallel_cdf", num(pc)},
               {"parallel_reversed_hazard", num(prh)}};
      if (s.has_probs[k]) row["shocked_series_survival"] = shocked_series_survival(sm, t);
      rows.push_back(row);
      if (csv.is_open()) {
        csv << csv_num(t) << ',' << csv_num(ss) << ',' << csv_num(sh) << ',' << csv_num(pc) << ','
            << csv_num(prh);
        if (s.has_probs[k]) csv << ',' << csv_num(shocked_series_survival(sm, t));
        csv << '\n';
      }
    }
    out.push_back({{"model", to_json(sm, s.has_probs[k])},
                   {"grid", to_json(grid)},
                   {"table", rows}});
  }
  *code = kExitOk;
  return {{"models", out}};
}

Json task_order(const Scenario& s, int* code) {
  const ShockedSystem& a = model_at(s, 0);
  const ShockedSystem& b = model_at(s, 1);
  const Order order = order_from_string(param_string(s.task_params, "order", "ST"));
  const Extreme which = extreme_from_string(param_string(s.task_params, "which", "SERIES"));
  const auto grid = param_grid(s.task_params);
  OrderVerdict v;
  if (shocked(s)) {
    v = grid ? check_order(a, b, order, which, *grid) : check_order(a, b, order, which);
  } else {
    v = grid ? check_order(a.system, b.system, order, which, *grid)
             : check_order(a.system, b.system, order, which);
  }
  *code = exit_code_for(v.verdict);
  return {{"order_verdict", to_json(v)}};
}

CheckReport run_check(const Scenario& s, const Json& spec, const std::string& path,
                      const std::optional<GridSpec>& grid) {
  const std::string kind = param_string(spec, "check", "");
  auto gen_at = [&](const char* key) -> const Generator& {
    const std::size_t i = param_uint(spec, key, 0);
    return model_at(s, i).system.generator;
  };
  if (kind == "log_convexity") {
    const std::string sense = param_string(spec, "sense", "CONVEX");
    const Curvature c = sense == "CONCAVE" ? Curvature::CONCAVE : Curvature::CONVEX;
    if (sense != "CONVEX" && sense != "CONCAVE") throw SchemaError(path + ".sense", "CONVEX or CONCAVE");
    return grid ? check_log_convexity(gen_at("model"), c, *grid)
                : check_log_convexity(gen_at("model"), c);
  }
  if (kind == "ratio_shape") {
    const std::string prop = param_string(spec, "property", "DECREASING");
    RatioShape r;
    if (prop == "DECREASING") {
      r = RatioShape::DECREASING;
    } else if (prop == "CONVEX") {
      r = RatioShape::CONVEX;
    } else if (prop == "CONCAVE") {
      r = RatioShape::CONCAVE;
    } else {
      throw SchemaError(path + ".property", "DECREASING, CONVEX or CONCAVE");
    }
    return grid ? check_ratio_shape(gen_at("model"), r, *grid)
                : check_ratio_shape(gen_at("model"), r);
  }
  if (kind == "superadditive") {
    const Generator& inner = gen_at("inner");
    const Generator& outer = gen_at("outer");
    return grid ? check_superadditive_composition(inner, outer, *grid)
                : check_superadditive_composition(inner, outer);
  }
  throw SchemaError(path + ".check", "one of log_convexity, ratio_shape, superadditive");
}

Json task_conditions(const Scenario& s, int* code) {
  model_at(s, 0);
  const auto grid = param_grid(s.task_params);
  Json reports = Json::array();
  if (s.task_params.contains("checks")) {
    const Json& checks = s.task_params["checks"];
    if (!checks.is_array()) throw SchemaError("task_params.checks", "must be an array");
    Verdict all = Verdict::HOLDS;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const std::string path = "task_params.checks[" + std::to_string(i) + "]";
      if (!checks[i].is_object()) throw SchemaError(path, "must be an object");
      const CheckReport r = run_check(s, checks[i], path, grid);
      all = worst(all, r.verdict);
      reports.push_back(to_json(r));
    }
    *code = exit_code_for(all);
    return {{"checks", reports}, {"verdict", std::string(to_string(all))}};
  }
  // default battery: report only
  for (std::size_t k = 0; k < s.models.size(); ++k) {
    const Generator& g = s.models[k].system.generator;
    for (Curvature c : {Curvature::CONVEX, Curvature::CONCAVE}) {
      reports.push_back(to_json(grid ? check_log_convexity(g, c, *grid) : check_log_convexity(g, c)));
    }
    for (RatioShape r : {RatioShape::DECREASING, RatioShape::CONVEX, RatioShape::CONCAVE}) {
      reports.push_back(to_json(grid ? check_ratio_shape(g, r, *grid) : check_ratio_shape(g, r)));
    }
  }
  if (s.models.size() == 2) {
    const Generator& g1 = s.models[0].system.generator;
    const Generator& g2 = s.models[1].system.generator;
    reports.push_back(to_json(grid ? check_superadditive_composition(g1, g2, *grid)
                                   : check_superadditive_composition(g1, g2)));
    reports.push_back(to_json(grid ? check_superadditive_composition(g2, g1, *grid)
                                   : check_superadditive_composition(g2, g1)));
  }
  *code = kExitOk;
  return {{"checks", reports}};
}

Json task_theorem(const Scenario& s, int* code) {
  const ShockedSystem& x = model_at(s, 0);
  const ShockedSystem& y = model_at(s, 1);
  if (!s.task_params.contains("theorem")) throw SchemaError("task_params.theorem", "missing");
  const std::string id = param_string(s.task_params, "theorem", "");
  TheoremOptions opt;
  opt.order_grid = param_grid(s.task_params);
  const TheoremReport r = run_theorem(id, x, y, opt);
  if (!r.consistent) {
    *code = kExitFails;
  } else if (r.abstained) {
    *code = kExitInconclusive;
  } else {
    *code = kExitOk;
  }
  return {{"theorem_report", to_json(r)}};
}

Json task_sample(const Scenario& s, const RunOptions& o, int* code) {
  const ShockedSystem& sm = model_at(s, 0);
  const std::uint64_t size = param_uint(s.task_params, "size", 10000);
  const std::uint64_t seed = param_uint(s.task_params, "seed", 1);
  const std::string coupling = param_string(s.task_params, "coupling", "SURVIVAL");
  SampleOptions opt;
  if (coupling == "DISTRIBUTION") {
    opt.coupling = Coupling::DISTRIBUTION;
  } else if (coupling != "SURVIVAL") {
    throw SchemaError("task_params.coupling", "SURVIVAL or DISTRIBUTION");
  }
  if (size == 0) throw SchemaError("task_params.size", "must be positive");
  const bool shock = s.has_probs[0];
  const SampleBatch b =
      shock ? sample_shocked(sm, size, seed, opt) : sample(sm.system, size, seed, opt);
  Json checks = Json::array();
  for (double q : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double t = sm.system.baseline.quantile(q);
    Json row{{"t", t}};
    if (opt.coupling == Coupling::SURVIVAL) {
      const double an = shock ? shocked_series_survival(sm, t) : series_survival(sm.system, t);
      row["statistic"] = "MIN";
      row["analytic"] = an;
      row["empirical"] = empirical_survival(b, Statistic::MIN, t);
      row["std_error"] = std::sqrt(an * (1.0 - an) / static_cast<double>(size));
    } else {
      const double an = parallel_cdf(sm.system, t);
      row["statistic"] = "MAX";
      row["analytic"] = an;
      row["empirical"] = empirical_survival(b, Statistic::MAX, t);
      row["std_error"] = std::sqrt(an * (1.0 - an) / static_cast<double>(size));
    }
    checks.push_back(row);
  }
  if (o.out_dir) {
    auto f = open_out(o, "samples.csv");
    write_csv(b, f);
  }
  *code = kExitOk;
  return {{"rows", b.rows},
          {"cols", b.cols},
          {"seed", seed},
          {"coupling", coupling},
          {"shocked", shock},
          {"quantile_checks", checks}};
}

Json task_repro(const Scenario& s, const RunOptions& o, int* code) {
  if (!s.task_params.contains("figure")) throw SchemaError("task_params.figure", "missing");
  const std::string id = param_string(s.task_params, "figure", "");
  const auto start = std::chrono::steady_clock::now();
  const FigureData fig = repro_figure(id, param_grid(s.task_params));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json cross = Json::array();
  for (const auto& c : fig.crossings) {
    cross.push_back({{"t_lo", c.t_lo}, {"t_hi", c.t_hi}, {"t", c.t}});
  }
  Json files = Json::array();
  if (o.out_dir) {
    {
      auto f = open_out(o, id + ".csv");
      write_figure_csv(fig, f);
    }
    {
      auto f = open_out(o, id + ".svg");
      write_figure_svg(fig, f);
    }
    files.push_back((fs::path(*o.out_dir) / (id + ".csv")).string());
    files.push_back((fs::path(*o.out_dir) / (id + ".svg")).string());
  }
  *code = kExitOk;
  return {{"figure", id},
          {"title", fig.spec.title},
          {"curve", to_string(fig.spec.kind)},
          {"model_X", to_json(fig.spec.x)},
          {"model_Y", to_json(fig.spec.y)},
          {"grid", to_json(fig.grid)},
          {"points", fig.t.size()},
          {"dropped", fig.dropped},
          {"crossings", cross},
          {"seconds", secs},
          {"files", files}};
}

}  // namespace

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::HOLDS:
      return kExitOk;
    case Verdict::FAILS:
      return kExitFails;
    case Verdict::INCONCLUSIVE:
      return kExitInconclusive;
  }
  return kExitUsage;
}

Json run_scenario_json(const Scenario& s, const RunOptions& o, int* exit_code) {
  int code = kExitOk;
  Json body;
  switch (s.task) {
    case Task::EVAL:
      body = task_eval(s, o, &code);
      break;
    case Task::ORDER_CHECK:
      body = task_order(s, &code);
      break;
    case Task::CONDITIONS:
      body = task_conditions(s, &code);
      break;
    case Task::THEOREM:
      body = task_theorem(s, &code);
      break;
    case Task::SAMPLE:
      body = task_sample(s, o, &code);
      break;
    case Task::REPRO:
      body = task_repro(s, o, &code);
      break;
  }
  Json report{{"spec_version", 1}, {"task", to_string(s.task)}, {"exit_code", code}};
  report.update(body);
  if (exit_code) *exit_code = code;
  return report;
}

int run_scenario(const Scenario& s, const RunOptions& o, std::ostream& report) {
  int code = kExitOk;
  const Json j = run_scenario_json(s, o, &code);
  report << j.dump(2) << '\n';
  return code;
}

int run_scenario_file(const std::string& path, const RunOptions& o, std::ostream& report) {
  return run_scenario(load_scenario(path), o, report);
}

}  // namespace pocopula
