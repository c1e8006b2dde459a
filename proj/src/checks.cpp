#include "pocopula/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "numeric.hpp"

namespace pocopula {

namespace {

void record(CheckReport& r, std::vector<double> w) {
  ++r.violations;
  if (r.witness.size() < CheckReport::kMaxWitnesses) r.witness.push_back(std::move(w));
}

void finish(CheckReport& r) {
  if (!r.witness.empty()) {
    r.verdict = Verdict::FAILS;
  } else if (r.evaluated == 0) {
    r.verdict = Verdict::INCONCLUSIVE;
    if (r.note.empty()) r.note = "no informative grid points";
  } else {
    r.verdict = Verdict::HOLDS;
  }
}

std::vector<double> shape_points(const GridSpec& grid) {
  if (grid.count < 3) throw std::invalid_argument("shape check needs a grid of >= 3 points");
  return grid.points();
}

double normalized_slope_change(double s1, double s2) {
  const double scale = std::abs(s1) + std::abs(s2);
  if (scale == 0.0) return 0.0;
  return (s2 - s1) / scale;
}

// Curvature test over a sampled function. Points with non-finite values are
// skipped, which breaks the triple.
void scan_curvature(CheckReport& r, const std::vector<double>& t,
                    const std::vector<double>& f, Curvature sense) {
  for (std::size_t i = 0; i + 2 < t.size(); ++i) {
    if (!std::isfinite(f[i]) || !std::isfinite(f[i + 1]) || !std::isfinite(f[i + 2])) {
      continue;
    }
    ++r.evaluated;
    const double m = curvature_measure(t[i], f[i], t[i + 1], f[i + 1], t[i + 2], f[i + 2], sense);
    if (m < -r.tolerance) record(r, {t[i], t[i + 1], t[i + 2]});
  }
}

// ln h(x) for h = φ₂⁻¹ ∘ φ₁; NaN when φ₁(x) underflows.
double log_composition(const Generator& g1, const Generator& g2, double x) {
  const double u = std::exp(g1.log_phi(x));
  if (!(u > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return g2.log_phi_inv(std::min(u, 1.0));
}

}  // namespace

std::string to_string(Curvature c) { return c == Curvature::CONVEX ? "convex" : "concave"; }

std::string to_string(RatioShape r) {
  switch (r) {
    case RatioShape::DECREASING:
      return "decreasing";
    case RatioShape::CONVEX:
      return "convex";
    case RatioShape::CONCAVE:
      return "concave";
  }
  return "?";
}

GridSpec default_shape_grid(const Generator& g) {
  GridSpec grid;
  grid.lo = 1e-4;
  grid.hi = std::max(g.domain_hint(), 1e-3);
  grid.count = 512;
  grid.log_spaced = true;
  return grid;
}

double curvature_measure(double t0, double f0, double t1, double f1, double t2, double f2,
                         Curvature sense) {
  const double s1 = (f1 - f0) / (t1 - t0);
  const double s2 = (f2 - f1) / (t2 - t1);
  const double m = normalized_slope_change(s1, s2);
  return sense == Curvature::CONVEX ? m : -m;
}

double log_curvature_measure(const Generator& g, double t0, double t1, double t2,
                             Curvature sense) {
  return curvature_measure(t0, g.log_phi(t0), t1, g.log_phi(t1), t2, g.log_phi(t2), sense);
}

double superadditivity_measure(const Generator& g1, const Generator& g2, double x,
                               double y) {
  const double a = log_composition(g1, g2, x + y);
  const double bx = log_composition(g1, g2, x);
  const double by = log_composition(g1, g2, y);
  if (std::isnan(a) || std::isnan(bx) || std::isnan(by)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const double b = detail::log_add_exp(bx, by);
  if (a == b) return 0.0;  // also covers inf == inf
  return std::tanh(0.5 * (a - b));
}

double phi_ratio(const Generator& g, double t) {
  const LogJet j = g.jet(t);
  const double dpsi = std::exp(j.log_scale) * j.d[0];
  return -std::expm1(j.psi) / dpsi;
}

double decreasing_measure(const Generator& g, double t0, double t1) {
  const double h0 = phi_ratio(g, t0), h1 = phi_ratio(g, t1);
  const double scale = std::abs(h0) + std::abs(h1);
  if (scale == 0.0) return 0.0;
  return -(h1 - h0) / scale;
}

double ratio_curvature_measure(const Generator& g, double t0, double t1, double t2,
                               Curvature sense) {
  return curvature_measure(t0, phi_ratio(g, t0), t1, phi_ratio(g, t1), t2, phi_ratio(g, t2),
                           sense);
}

CheckReport check_log_convexity(const Generator& g, Curvature sense, const GridSpec& grid) {
  CheckReport r;
  r.property = "log-" + to_string(sense) + "(" + g.name() + ")";
  r.grid = grid.describe();
  const auto t = shape_points(grid);
  std::vector<double> f(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) f[i] = g.log_phi(t[i]);
  scan_curvature(r, t, f, sense);
  finish(r);
  return r;
}

CheckReport check_log_convexity(const Generator& g, Curvature sense) {
  return check_log_convexity(g, sense, default_shape_grid(g));
}

CheckReport check_superadditive_composition(const Generator& g1, const Generator& g2,
                                            const GridSpec& axis) {
  CheckReport r;
  r.property = "superadditive(inv(" + g2.name() + ") o " + g1.name() + ")";
  r.grid = axis.describe() + " squared";
  const auto xs = axis.points();
  std::vector<double> lx(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) lx[i] = log_composition(g1, g2, xs[i]);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // symmetric in (x, y): the upper triangle suffices
    for (std::size_t k = i; k < xs.size(); ++k) {
      const double a = log_composition(g1, g2, xs[i] + xs[k]);
      if (std::isnan(a) || std::isnan(lx[i]) || std::isnan(lx[k])) continue;
      const double b = detail::log_add_exp(lx[i], lx[k]);
      if (std::isinf(a) && a == b) continue;
      ++r.evaluated;
      const double m = a == b ? 0.0 : std::tanh(0.5 * (a - b));
      if (m < -r.tolerance) record(r, {xs[i], xs[k]});
    }
  }
  finish(r);
  return r;
}

CheckReport check_superadditive_composition(const Generator& g1, const Generator& g2) {
  GridSpec axis;
  axis.lo = 1e-3;
  axis.hi = std::max(g1.domain_hint() / 2.0, 2e-3);
  axis.count = 64;
  axis.log_spaced = true;
  return check_superadditive_composition(g1, g2, axis);
}

CheckReport check_ratio_shape(const Generator& g, RatioShape property, const GridSpec& grid) {
  CheckReport r;
  r.property = "ratio-" + to_string(property) + "(" + g.name() + ")";
  r.grid = grid.describe();
  const auto t = shape_points(grid);
  std::vector<double> h(t.size());
  std::size_t degenerate = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    h[i] = phi_ratio(g, t[i]);
    if (!std::isfinite(h[i])) ++degenerate;
  }
  if (degenerate > 0) {
    r.note = std::to_string(degenerate) + " grid points with vanishing or non-finite phi'";
    r.verdict = Verdict::INCONCLUSIVE;
    return r;
  }
  if (property == RatioShape::DECREASING) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      ++r.evaluated;
      const double scale = std::abs(h[i]) + std::abs(h[i + 1]);
      const double m = scale == 0.0 ? 0.0 : -(h[i + 1] - h[i]) / scale;
      if (m < -r.tolerance) record(r, {t[i], t[i + 1]});
    }
  } else {
    scan_curvature(r, t, h,
                   property == RatioShape::CONVEX ? Curvature::CONVEX : Curvature::CONCAVE);
  }
  finish(r);
  return r;
}

CheckReport check_ratio_shape(const Generator& g, RatioShape property) {
  return check_ratio_shape(g, property, default_shape_grid(g));
}

CheckReport any_of(std::string property, const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.property = std::move(property);
  if (parts.empty()) throw std::invalid_argument("any_of needs at least one report");
  bool all_fail = true;
  for (const auto& p : parts) {
    if (!r.grid.empty()) r.grid += "; ";
    r.grid += p.grid;
    r.evaluated += p.evaluated;
    if (p.verdict == Verdict::HOLDS) {
      r.verdict = Verdict::HOLDS;
      r.note = "holds via " + p.property;
      r.witness.clear();
      r.violations = 0;
      return r;
    }
    if (p.verdict != Verdict::FAILS) all_fail = false;
  }
  if (all_fail) {
    for (const auto& p : parts) {
      r.violations += p.violations;
      for (const auto& w : p.witness) {
        if (r.witness.size() < CheckReport::kMaxWitnesses) r.witness.push_back(w);
      }
    }
    r.note = "every alternative fails";
    r.verdict = Verdict::FAILS;
  } else {
    r.verdict = Verdict::INCONCLUSIVE;
    r.note = "no alternative holds";
  }
  return r;
}

CheckReport all_of(std::string property, const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.property = std::move(property);
  if (parts.empty()) throw std::invalid_argument("all_of needs at least one report");
  bool any_inconclusive = false;
  for (const auto& p : parts) {
    if (!r.grid.empty()) r.grid += "; ";
    r.grid += p.grid;
    r.evaluated += p.evaluated;
    if (p.verdict == Verdict::FAILS) {
      r.violations += p.violations;
      for (const auto& w : p.witness) {
        if (r.witness.size() < CheckReport::kMaxWitnesses) r.witness.push_back(w);
      }
      if (!r.note.empty()) r.note += ", ";
      r.note += p.property + " fails";
    } else if (p.verdict == Verdict::INCONCLUSIVE) {
      any_inconclusive = true;
    }
  }
  if (!r.witness.empty()) {
    r.verdict = Verdict::FAILS;
  } else {
    r.verdict = any_inconclusive ? Verdict::INCONCLUSIVE : Verdict::HOLDS;
  }
  return r;
}

}  // namespace pocopula
