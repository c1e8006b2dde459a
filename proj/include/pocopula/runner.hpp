#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pocopula/scenario.hpp"

namespace pocopula {

/// Process exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitFails = 2, kExitInconclusive = 3 };

int exit_code_for(Verdict v);

struct RunOptions {
  /// Directory for CSV/SVG artifacts; nothing is written when empty.
  std::optional<std::string> out_dir;
};

/// Dispatches the scenario's task, writes the JSON report to `report` and
/// returns the exit code. Task parameters (all optional unless noted):
///   grid: "lo:hi:count[:log]" or {lo, hi, count, log}
///   order, which (ORDER_CHECK), theorem (THEOREM, required),
///   checks (CONDITIONS), seed, size, coupling (SAMPLE), figure (REPRO, required).
/// Throws SchemaError / std::invalid_argument on bad input and
/// std::runtime_error on I/O failure.
int run_scenario(const Scenario& scenario, const RunOptions& options, std::ostream& report);

/// Loads `path` and runs it.
int run_scenario_file(const std::string& path, const RunOptions& options, std::ostream& report);

/// The report object without printing, for bindings.
Json run_scenario_json(const Scenario& scenario, const RunOptions& options, int* exit_code);

}  // namespace pocopula
