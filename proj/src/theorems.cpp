#include "pocopula/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pocopula/majorization.hpp"

namespace pocopula {

namespace {

enum class Shape { PLAIN, SHOCKED };

struct Context {
  const ShockedSystem& x;
  const ShockedSystem& y;
  const TheoremOptions& opt;

  const Generator& g1() const { return x.system.generator; }
  const Generator& g2() const { return y.system.generator; }

  CheckReport log_curvature(const Generator& g, Curvature c) const {
    return opt.shape_grid ? check_log_convexity(g, c, *opt.shape_grid)
                          : check_log_convexity(g, c);
  }
  CheckReport ratio(RatioShape r) const {
    return opt.shape_grid ? check_ratio_shape(g1(), r, *opt.shape_grid)
                          : check_ratio_shape(g1(), r);
  }
  // superadditivity of inv(outer) o inner
  CheckReport superadditive(const Generator& inner, const Generator& outer) const {
    return opt.superadditive_axis
               ? check_superadditive_composition(inner, outer, *opt.superadditive_axis)
               : check_superadditive_composition(inner, outer);
  }
};

CheckReport majorization_report(const std::vector<double>& a, const std::vector<double>& b,
                                 MajorizationMode mode) {
  CheckReport r;
  r.property = "alpha " + to_string(mode) + "-dominates beta";
  r.grid = "exact comparison of sorted partial " +
           std::string(mode == MajorizationMode::P ? "products" : "sums");
  r.tolerance = kMajorizationSlack;
  r.evaluated = a.size();
  const int j = majorization_violation(a, b, mode);
  if (j >= 0) {
    r.violations = 1;
    r.witness.push_back({static_cast<double>(j + 1)});
    r.verdict = Verdict::FAILS;
    r.note = "partial comparison fails at j = " + std::to_string(j + 1);
  } else {
    r.verdict = Verdict::HOLDS;
  }
  return r;
}

CheckReport constant_beta_report(const std::vector<double>& a, const std::vector<double>& b) {
  CheckReport r;
  r.property = "beta constant and >= mean(alpha)";
  r.grid = "exact";
  r.tolerance = kMajorizationSlack;
  r.evaluated = 1;
  const double mean = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
  if (b.front() < mean - kMajorizationSlack) {
    r.violations = 1;
    r.witness.push_back({b.front(), mean});
    r.verdict = Verdict::FAILS;
  } else {
    r.verdict = Verdict::HOLDS;
  }
  return r;
}

CheckReport product_report(const ShockedSystem& x, const ShockedSystem& y) {
  CheckReport r;
  r.property = "prod(p) <= prod(q)";
  r.grid = "exact";
  r.tolerance = kMajorizationSlack;
  r.evaluated = 1;
  const double pp = x.prob_product(), pq = y.prob_product();
  if (pp - pq > kMajorizationSlack) {
    r.violations = 1;
    r.witness.push_back({pp, pq});
    r.verdict = Verdict::FAILS;
  } else {
    r.verdict = Verdict::HOLDS;
  }
  return r;
}

struct TheoremDef {
  std::string statement;
  bool same_generator = false;
  Shape shape = Shape::PLAIN;
  Order order = Order::ST;
  Extreme which = Extreme::SERIES;
  std::function<std::vector<CheckReport>(const Context&)> hypotheses;
};

// Hypothesis sets shared between the plain and shocked versions.
std::vector<CheckReport> h_t31(const Context& c) {
  return {any_of("log-convex(phi1) or log-convex(phi2)",
                 {c.log_curvature(c.g1(), Curvature::CONVEX),
                  c.log_curvature(c.g2(), Curvature::CONVEX)}),
          c.superadditive(c.g1(), c.g2()),
          majorization_report(c.x.system.alphas, c.y.system.alphas, MajorizationMode::P)};
}

std::vector<CheckReport> h_c31(const Context& c) {
  return {c.log_curvature(c.g1(), Curvature::CONVEX),
          majorization_report(c.x.system.alphas, c.y.system.alphas, MajorizationMode::P)};
}

std::vector<CheckReport> h_t32(const Context& c) {
  return {c.superadditive(c.g1(), c.g2()),
          majorization_report(c.x.system.alphas, c.y.system.alphas, MajorizationMode::W)};
}

std::vector<CheckReport> h_c32(const Context& c) {
  return {majorization_report(c.x.system.alphas, c.y.system.alphas, MajorizationMode::W)};
}

std::vector<CheckReport> h_ratio_shape(const Context& c) {
  return {c.log_curvature(c.g1(), Curvature::CONCAVE), c.ratio(RatioShape::DECREASING),
          any_of("ratio concave or convex",
                 {c.ratio(RatioShape::CONCAVE), c.ratio(RatioShape::CONVEX)})};
}

std::vector<CheckReport> h_t33(const Context& c) {
  auto h = h_ratio_shape(c);
  h.push_back(majorization_report(c.x.system.alphas, c.y.system.alphas, MajorizationMode::W));
  return h;
}

template <class F>
std::function<std::vector<CheckReport>(const Context&)> with_products(F base) {
  return [base](const Context& c) {
    auto h = base(c);
    h.push_back(product_report(c.x, c.y));
    return h;
  };
}

const std::map<std::string, TheoremDef>& catalog() {
  static const std::map<std::string, TheoremDef> defs = [] {
    std::map<std::string, TheoremDef> d;
    d["T3.1"] = {"phi1 or phi2 log-convex, inv(phi2) o phi1 superadditive, alpha p-larger "
                 "than beta => X_{1:n} <=st Y_{1:n}",
                 false, Shape::PLAIN, Order::ST, Extreme::SERIES, h_t31};
    d["C3.1"] = {"phi log-convex, alpha p-larger than beta => X_{1:n} <=st Y_{1:n}", true,
                 Shape::PLAIN, Order::ST, Extreme::SERIES, h_c31};
    d["T3.2"] = {"inv(phi2) o phi1 superadditive, alpha w-dominates beta => "
                 "X_{1:n} <=st Y_{1:n}",
                 false, Shape::PLAIN, Order::ST, Extreme::SERIES, h_t32};
    d["C3.2"] = {"alpha w-dominates beta => X_{1:n} <=st Y_{1:n}", true, Shape::PLAIN,
                 Order::ST, Extreme::SERIES, h_c32};
    d["T3.3"] = {"phi log-concave, phi(1-phi)/phi' decreasing and concave (or convex), alpha "
                 "w-dominates beta => X_{1:n} <=hr Y_{1:n}",
                 true, Shape::PLAIN, Order::HR, Extreme::SERIES, h_t33};
    d["C3.3"] = {"phi log-concave, phi(1-phi)/phi' decreasing and concave (or convex), beta "
                 "constant >= mean(alpha) => X_{1:n} <=hr Y_{1:n}",
                 true, Shape::PLAIN, Order::HR, Extreme::SERIES, [](const Context& c) {
                   auto h = h_ratio_shape(c);
                   h.push_back(constant_beta_report(c.x.system.alphas, c.y.system.alphas));
                   return h;
                 }};
    d["T4.1"] = {"phi1 or phi2 log-concave, inv(phi1) o phi2 superadditive, alpha "
                 "w-dominates beta => X_{n:n} <=st Y_{n:n}",
                 false, Shape::PLAIN, Order::ST, Extreme::PARALLEL, [](const Context& c) {
                   return std::vector<CheckReport>{
                       any_of("log-concave(phi1) or log-concave(phi2)",
                              {c.log_curvature(c.g1(), Curvature::CONCAVE),
                               c.log_curvature(c.g2(), Curvature::CONCAVE)}),
                       c.superadditive(c.g2(), c.g1()),
                       majorization_report(c.x.system.alphas, c.y.system.alphas,
                                           MajorizationMode::W)};
                 }};
    d["C4.1"] = {"phi log-concave, alpha w-dominates beta => X_{n:n} <=st Y_{n:n}", true,
                 Shape::PLAIN, Order::ST, Extreme::PARALLEL, [](const Context& c) {
                   return std::vector<CheckReport>{
                       c.log_curvature(c.g1(), Curvature::CONCAVE),
                       majorization_report(c.x.system.alphas, c.y.system.alphas,
                                           MajorizationMode::W)};
                 }};
    d["T4.2"] = {"phi log-concave, phi(1-phi)/phi' decreasing and convex, alpha w-dominates "
                 "beta => X_{n:n} <=rhr Y_{n:n}",
                 true, Shape::PLAIN, Order::RHR, Extreme::PARALLEL, [](const Context& c) {
                   return std::vector<CheckReport>{
                       c.log_curvature(c.g1(), Curvature::CONCAVE),
                       c.ratio(RatioShape::DECREASING), c.ratio(RatioShape::CONVEX),
                       majorization_report(c.x.system.alphas, c.y.system.alphas,
                                           MajorizationMode::W)};
                 }};
    d["T5.1"] = {"T3.1 hypotheses and prod(p) <= prod(q) => X*_{1:n} <=st Y*_{1:n}", false,
                 Shape::SHOCKED, Order::ST, Extreme::SERIES, with_products(h_t31)};
    d["C5.1"] = {"C3.1 hypotheses and prod(p) <= prod(q) => X*_{1:n} <=st Y*_{1:n}", true,
                 Shape::SHOCKED, Order::ST, Extreme::SERIES, with_products(h_c31)};
    d["T5.2"] = {"T3.2 hypotheses and prod(p) <= prod(q) => X*_{1:n} <=st Y*_{1:n}", false,
                 Shape::SHOCKED, Order::ST, Extreme::SERIES, with_products(h_t32)};
    d["C5.2"] = {"C3.2 hypotheses and prod(p) <= prod(q) => X*_{1:n} <=st Y*_{1:n}", true,
                 Shape::SHOCKED, Order::ST, Extreme::SERIES, with_products(h_c32)};
    d["T5.3"] = {"T3.3 hypotheses => X*_{1:n} <=hr Y*_{1:n}", true, Shape::SHOCKED, Order::HR,
                 Extreme::SERIES, h_t33};
    return d;
  }();
  return defs;
}

bool all_ones(const std::vector<double>& p) {
  return std::all_of(p.begin(), p.end(), [](double v) { return v == 1.0; });
}

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const auto& [id, def] : catalog()) out.push_back(id);
  return out;
}

TheoremReport run_theorem(const std::string& theorem_id, const ShockedSystem& x,
                          const ShockedSystem& y, const TheoremOptions& options) {
  const auto it = catalog().find(theorem_id);
  if (it == catalog().end()) {
    throw std::invalid_argument("unknown theorem id '" + theorem_id + "'");
  }
  const TheoremDef& def = it->second;
  x.validate();
  y.validate();
  if (!(x.system.baseline == y.system.baseline)) {
    throw std::invalid_argument(theorem_id + ": both systems must share the baseline");
  }
  if (x.system.n() != y.system.n()) {
    throw std::invalid_argument(theorem_id + ": both systems must have the same size");
  }
  if (def.same_generator && !(x.system.generator == y.system.generator)) {
    throw std::invalid_argument(theorem_id + ": needs a common generator");
  }
  if (def.shape == Shape::PLAIN && !(all_ones(x.probs) && all_ones(y.probs))) {
    throw std::invalid_argument(theorem_id + ": shock probabilities only apply to T5/C5");
  }
  if (theorem_id == "C3.3") {
    const auto& b = y.system.alphas;
    if (std::any_of(b.begin(), b.end(), [&](double v) { return v != b.front(); })) {
      throw std::invalid_argument("C3.3: beta must be a constant vector");
    }
  }

  TheoremReport rep;
  rep.theorem_id = theorem_id;
  rep.statement = def.statement;
  const Context ctx{x, y, options};
  rep.hypothesis_reports = def.hypotheses(ctx);

  if (def.shape == Shape::SHOCKED) {
    rep.conclusion = options.order_grid
                         ? check_order(x, y, def.order, def.which, *options.order_grid)
                         : check_order(x, y, def.order, def.which);
  } else {
    rep.conclusion = options.order_grid ? check_order(x.system, y.system, def.order,
                                                      def.which, *options.order_grid)
                                        : check_order(x.system, y.system, def.order, def.which);
  }

  rep.hypotheses_hold = true;
  for (const auto& h : rep.hypothesis_reports) {
    if (h.verdict != Verdict::HOLDS) rep.hypotheses_hold = false;
  }
  const bool any_fail =
      std::any_of(rep.hypothesis_reports.begin(), rep.hypothesis_reports.end(),
                  [](const CheckReport& h) { return h.verdict == Verdict::FAILS; });
  rep.abstained = !rep.hypotheses_hold && !any_fail;
  rep.consistent = !rep.hypotheses_hold || rep.conclusion.verdict == Verdict::HOLDS;
  return rep;
}

TheoremReport run_theorem(const std::string& theorem_id, const SystemModel& x,
                          const SystemModel& y, const TheoremOptions& options) {
  return run_theorem(theorem_id, ShockedSystem{x, std::vector<double>(x.n(), 1.0)},
                     ShockedSystem{y, std::vector<double>(y.n(), 1.0)}, options);
}

}  // namespace pocopula
