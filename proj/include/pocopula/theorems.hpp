#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pocopula/checks.hpp"
#include "pocopula/orders.hpp"
#include "pocopula/system.hpp"

namespace pocopula {

/// Result of checking one theorem on a concrete pair of systems.
///
/// `consistent` is false only when every hypothesis HOLDS and the conclusion
/// does not; an INCONCLUSIVE hypothesis makes the report an abstention.
struct TheoremReport {
  std::string theorem_id;
  std::string statement;
  std::vector<CheckReport> hypothesis_reports;
  OrderVerdict conclusion;
  bool hypotheses_hold = false;
  bool abstained = false;
  bool consistent = true;
};

/// Optional grids; defaults are the per-check defaults.
struct TheoremOptions {
  std::optional<GridSpec> shape_grid;
  std::optional<GridSpec> superadditive_axis;
  std::optional<GridSpec> order_grid;
};

/// Known ids: T3.1 T3.2 T3.3 T4.1 T4.2 T5.1 T5.2 T5.3 C3.1 C3.2 C3.3 C4.1 C5.1
/// C5.2.
std::vector<std::string> theorem_ids();

/// X = `x`, Y = `y`. Throws std::invalid_argument on an unknown id or when
/// the scenario does not fit the theorem (different baselines or sizes, a
/// corollary given two generators, shock probabilities for a theorem without
/// shocks).
TheoremReport run_theorem(const std::string& theorem_id, const ShockedSystem& x,
                          const ShockedSystem& y, const TheoremOptions& options = {});
TheoremReport run_theorem(const std::string& theorem_id, const SystemModel& x,
                          const SystemModel& y, const TheoremOptions& options = {});

}  // namespace pocopula
