#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pocopula/generator.hpp"
#include "pocopula/types.hpp"

namespace pocopula {

/// Sign-test tolerance on normalized differences.
inline constexpr double kCheckTolerance = 1e-9;

/// Outcome of a grid check of an analytic property.
///
/// verdict == FAILS exactly when `witness` is non-empty. Each witness is the
/// tuple of abscissae that exhibits the violation: a triple (t0, t1, t2) for
/// curvature, a pair (t0, t1) for monotonicity, (x, y) for superadditivity.
/// At most kMaxWitnesses are kept; `violations` counts all of them.
struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::vector<std::vector<double>> witness;
  std::string grid;
  double tolerance = kCheckTolerance;
  std::size_t violations = 0;
  std::size_t evaluated = 0;
  std::string note;

  static constexpr std::size_t kMaxWitnesses = 16;
};

enum class Curvature { CONVEX, CONCAVE };
enum class RatioShape { DECREASING, CONVEX, CONCAVE };

/// The default shape grid: 512 log-spaced points over [1e-4, domain_hint].
GridSpec default_shape_grid(const Generator& g);

/// Decides convexity/concavity of ln φ from divided differences on `grid`.
CheckReport check_log_convexity(const Generator& g, Curvature sense,
                                const GridSpec& grid);
CheckReport check_log_convexity(const Generator& g, Curvature sense);

/// Checks h(x+y) >= h(x) + h(y) for h = φ₂⁻¹ ∘ φ₁ on a 2-D log grid.
/// Default grid: 64 x 64 points over [1e-3, domain_hint(g1)/2].
CheckReport check_superadditive_composition(const Generator& g1, const Generator& g2,
                                            const GridSpec& axis);
CheckReport check_superadditive_composition(const Generator& g1, const Generator& g2);

/// Shape of h(t) = φ(t)(1 − φ(t)) / φ'(t).
CheckReport check_ratio_shape(const Generator& g, RatioShape property,
                              const GridSpec& grid);
CheckReport check_ratio_shape(const Generator& g, RatioShape property);

// Normalized measures used by the checks, exposed so that witnesses can be
// re-evaluated independently. A property is violated at a point when its
// measure is below −tolerance.

/// (s2 − s1) / (|s1| + |s2|) with s the slopes of f over (t0,t1) and (t1,t2),
/// sign-flipped for CONCAVE.
double curvature_measure(double t0, double f0, double t1, double f1, double t2, double f2,
                         Curvature sense);
double log_curvature_measure(const Generator& g, double t0, double t1, double t2,
                             Curvature sense);
/// tanh((ln h(x+y) − ln(h(x) + h(y))) / 2), the gap normalized by the sum of
/// the three magnitudes.
double superadditivity_measure(const Generator& g1, const Generator& g2, double x,
                               double y);
/// h(t) = φ(1 − φ)/φ'.
double phi_ratio(const Generator& g, double t);
/// −(h(t1) − h(t0)) / (|h(t0)| + |h(t1)|); negative means h increased.
double decreasing_measure(const Generator& g, double t0, double t1);
double ratio_curvature_measure(const Generator& g, double t0, double t1, double t2,
                               Curvature sense);

std::string to_string(Curvature c);
std::string to_string(RatioShape r);

/// Combines alternatives: HOLDS if any holds, FAILS if all fail (witnesses
/// merged), otherwise INCONCLUSIVE.
CheckReport any_of(std::string property, const std::vector<CheckReport>& parts);
/// HOLDS if all hold, FAILS if any fails, otherwise INCONCLUSIVE.
CheckReport all_of(std::string property, const std::vector<CheckReport>& parts);

}  // namespace pocopula
