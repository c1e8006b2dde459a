#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pocopula/system.hpp"
#include "pocopula/types.hpp"

namespace pocopula {

enum class Order { ST, HR, RHR };
enum class Extreme { SERIES, PARALLEL };

/// Relative tolerance of the pointwise and ratio-step tests.
inline constexpr double kOrderTolerance = 1e-9;

/// One violated inequality. Every witness reads "lhs <= rhs was expected".
///
/// POINTWISE witnesses compare two curves at t. RATIO witnesses compare the
/// survival (HR) or cdf (RHR) ratio B/A at t and at the next grid point
/// t_next, lhs being the earlier value.
struct OrderWitness {
  enum class Kind { POINTWISE, RATIO };
  Kind kind = Kind::POINTWISE;
  double t = 0.0;
  double t_next = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Verdict for "A <= B" in the requested order, for the minima (SERIES) or
/// maxima (PARALLEL) of the two systems.
///
/// HR and RHR run two formulations, monotonicity of the ratio and pointwise
/// (reversed) hazard dominance; their verdicts are kept separately and must
/// agree, otherwise the combined verdict is INCONCLUSIVE.
struct OrderVerdict {
  Order order = Order::ST;
  Extreme which = Extreme::SERIES;
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::vector<OrderWitness> witnesses;
  std::string grid;
  double tolerance = kOrderTolerance;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  Verdict ratio_verdict = Verdict::INCONCLUSIVE;
  Verdict pointwise_verdict = Verdict::INCONCLUSIVE;
  std::string note;

  static constexpr std::size_t kMaxWitnesses = 16;
};

/// 400 log-spaced points between the baseline 0.0005 and 0.9995 quantiles.
GridSpec default_order_grid(const Baseline& baseline);

OrderVerdict check_order(const SystemModel& a, const SystemModel& b, Order order,
                         Extreme which, const GridSpec& grid);
OrderVerdict check_order(const SystemModel& a, const SystemModel& b, Order order,
                         Extreme which);

/// Shocked minima; PARALLEL is rejected with std::invalid_argument.
OrderVerdict check_order(const ShockedSystem& a, const ShockedSystem& b, Order order,
                         Extreme which, const GridSpec& grid);
OrderVerdict check_order(const ShockedSystem& a, const ShockedSystem& b, Order order,
                         Extreme which);

/// Re-evaluates a witness against the two systems: the normalized excess of
/// lhs over rhs (positive means violated).
double witness_excess(const OrderWitness& w, const SystemModel& a, const SystemModel& b,
                      Order order, Extreme which);

std::string to_string(Order o);
std::string to_string(Extreme e);
Order order_from_string(const std::string& s);
Extreme extreme_from_string(const std::string& s);

}  // namespace pocopula
