#include "pocopula/orders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace pocopula {

namespace {

// One side of a comparison: a system, optionally with shock indicators
// (p_prod < 1 only for series minima).
struct Side {
  const SystemModel* m;
  double p_prod = 1.0;
};

struct Point {
  double surv = 0.0, cdf = 0.0;
  double log_surv = 0.0, log_cdf = 0.0;
  double rate = 0.0;  // hazard (HR) or reversed hazard (RHR)
};

double log_from(double x, double complement) {
  return x < 0.5 ? std::log(x) : std::log1p(-complement);
}

// nullopt where the point is saturated on this side.
std::optional<Point> evaluate(const Side& s, Extreme which, Order order, double t) {
  Point p;
  if (which == Extreme::SERIES) {
    const double s1 = series_survival(*s.m, t);
    const double f1 = series_cdf(*s.m, t);
    p.surv = s.p_prod * s1;
    p.cdf = (1.0 - s.p_prod) + s.p_prod * f1;
  } else {
    p.cdf = parallel_cdf(*s.m, t);
    p.surv = parallel_survival(*s.m, t);
  }
  if (p.surv < kSaturation || p.cdf < kSaturation) return std::nullopt;
  p.log_surv = s.p_prod == 1.0 ? log_from(p.surv, p.cdf) : std::log(p.surv);
  p.log_cdf = log_from(p.cdf, p.surv);
  try {
    if (order == Order::HR) {
      p.rate = which == Extreme::SERIES ? series_hazard(*s.m, t) : parallel_hazard(*s.m, t);
    } else if (order == Order::RHR) {
      if (which == Extreme::SERIES) {
        p.rate = series_hazard(*s.m, t) * p.surv / p.cdf;
      } else {
        p.rate = parallel_reversed_hazard(*s.m, t);
      }
    }
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  if (!std::isfinite(p.rate)) return std::nullopt;
  return p;
}

double excess(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0.0 || lhs == rhs) return 0.0;
  return (lhs - rhs) / scale;
}

// Pointwise comparison, lhs <= rhs expected.
std::pair<double, double> pointwise_pair(const Point& a, const Point& b, Order order,
                                         Extreme which) {
  switch (order) {
    case Order::ST:
      if (which == Extreme::SERIES) return {a.surv, b.surv};
      return {b.cdf, a.cdf};
    case Order::HR:
      return {b.rate, a.rate};
    case Order::RHR:
      return {a.rate, b.rate};
  }
  return {0.0, 0.0};
}

// ln of the B/A ratio whose monotone increase defines the order.
double log_ratio(const Point& a, const Point& b, Order order) {
  if (order == Order::HR) return b.log_surv - a.log_surv;
  return b.log_cdf - a.log_cdf;
}

void keep(OrderVerdict& v, std::vector<OrderWitness>& list, const OrderWitness& w) {
  ++v.violations;
  if (list.size() < OrderVerdict::kMaxWitnesses) list.push_back(w);
}

OrderVerdict run(const Side& a, const Side& b, Order order, Extreme which,
                 const GridSpec& grid) {
  if (a.m->n() == 0 || b.m->n() == 0) throw std::invalid_argument("empty system");
  OrderVerdict v;
  v.order = order;
  v.which = which;
  v.grid = grid.describe();

  std::vector<double> ts;
  std::vector<Point> pa, pb;
  for (double t : grid.points()) {
    if (!(t > 0.0)) continue;
    auto x = evaluate(a, which, order, t);
    auto y = evaluate(b, which, order, t);
    if (!x || !y) continue;
    ts.push_back(t);
    pa.push_back(*x);
    pb.push_back(*y);
  }
  v.evaluated = ts.size();
  if (ts.empty()) {
    v.note = "no usable grid points after trimming saturated regions";
    return v;
  }

  std::vector<OrderWitness> point_w, ratio_w;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto [lhs, rhs] = pointwise_pair(pa[i], pb[i], order, which);
    if (excess(lhs, rhs) > v.tolerance) {
      keep(v, point_w, {OrderWitness::Kind::POINTWISE, ts[i], ts[i], lhs, rhs});
    }
  }
  v.pointwise_verdict = point_w.empty() ? Verdict::HOLDS : Verdict::FAILS;

  if (order == Order::ST) {
    v.ratio_verdict = v.pointwise_verdict;
    v.verdict = v.pointwise_verdict;
    v.witnesses = std::move(point_w);
    return v;
  }

  if (ts.size() < 2) {
    v.ratio_verdict = Verdict::INCONCLUSIVE;
  } else {
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      const double r0 = std::exp(log_ratio(pa[i], pb[i], order));
      const double r1 = std::exp(log_ratio(pa[i + 1], pb[i + 1], order));
      if (excess(r0, r1) > v.tolerance) {
        keep(v, ratio_w, {OrderWitness::Kind::RATIO, ts[i], ts[i + 1], r0, r1});
      }
    }
    v.ratio_verdict = ratio_w.empty() ? Verdict::HOLDS : Verdict::FAILS;
  }

  if (v.ratio_verdict == v.pointwise_verdict) {
    v.verdict = v.ratio_verdict;
    if (v.verdict == Verdict::FAILS) {
      v.witnesses = std::move(point_w);
      for (const auto& w : ratio_w) {
        if (v.witnesses.size() < 2 * OrderVerdict::kMaxWitnesses) v.witnesses.push_back(w);
      }
    }
  } else {
    v.verdict = Verdict::INCONCLUSIVE;
    v.note = "ratio test " + std::string(to_string(v.ratio_verdict)) + ", pointwise test " +
             std::string(to_string(v.pointwise_verdict));
  }
  return v;
}

double excess_at(const OrderWitness& w, const Side& a, const Side& b, Order order,
                 Extreme which) {
  auto x = evaluate(a, which, order, w.t);
  auto y = evaluate(b, which, order, w.t);
  if (!x || !y) return std::numeric_limits<double>::quiet_NaN();
  if (w.kind == OrderWitness::Kind::POINTWISE) {
    const auto [lhs, rhs] = pointwise_pair(*x, *y, order, which);
    return excess(lhs, rhs);
  }
  auto x1 = evaluate(a, which, order, w.t_next);
  auto y1 = evaluate(b, which, order, w.t_next);
  if (!x1 || !y1) return std::numeric_limits<double>::quiet_NaN();
  return excess(std::exp(log_ratio(*x, *y, order)), std::exp(log_ratio(*x1, *y1, order)));
}

Side shocked_side(const ShockedSystem& s, Extreme which) {
  if (which != Extreme::SERIES) {
    throw std::invalid_argument("shocked systems are compared through their minima only");
  }
  s.validate();
  return {&s.system, s.prob_product()};
}

}  // namespace

GridSpec default_order_grid(const Baseline& baseline) {
  GridSpec g;
  g.lo = baseline.quantile(0.0005);
  g.hi = baseline.quantile(0.9995);
  g.count = 400;
  g.log_spaced = true;
  return g;
}

OrderVerdict check_order(const SystemModel& a, const SystemModel& b, Order order,
                         Extreme which, const GridSpec& grid) {
  a.validate();
  b.validate();
  return run({&a}, {&b}, order, which, grid);
}

OrderVerdict check_order(const SystemModel& a, const SystemModel& b, Order order,
                         Extreme which) {
  return check_order(a, b, order, which, default_order_grid(a.baseline));
}

OrderVerdict check_order(const ShockedSystem& a, const ShockedSystem& b, Order order,
                         Extreme which, const GridSpec& grid) {
  return run(shocked_side(a, which), shocked_side(b, which), order, which, grid);
}

OrderVerdict check_order(const ShockedSystem& a, const ShockedSystem& b, Order order,
                         Extreme which) {
  return check_order(a, b, order, which, default_order_grid(a.system.baseline));
}

double witness_excess(const OrderWitness& w, const SystemModel& a, const SystemModel& b,
                      Order order, Extreme which) {
  return excess_at(w, {&a}, {&b}, order, which);
}

std::string to_string(Order o) {
  switch (o) {
    case Order::ST:
      return "ST";
    case Order::HR:
      return "HR";
    case Order::RHR:
      return "RHR";
  }
  return "?";
}

std::string to_string(Extreme e) { return e == Extreme::SERIES ? "SERIES" : "PARALLEL"; }

Order order_from_string(const std::string& s) {
  if (s == "ST" || s == "st") return Order::ST;
  if (s == "HR" || s == "hr") return Order::HR;
  if (s == "RHR" || s == "rhr") return Order::RHR;
  throw std::invalid_argument("unknown order '" + s + "'");
}

Extreme extreme_from_string(const std::string& s) {
  if (s == "SERIES" || s == "series") return Extreme::SERIES;
  if (s == "PARALLEL" || s == "parallel") return Extreme::PARALLEL;
  throw std::invalid_argument("unknown extreme '" + s + "'");
}

}  // namespace pocopula
