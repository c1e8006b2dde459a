#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pocopula {

/// Named real parameters of a generator or baseline family.
using ParamMap = std::map<std::string, double>;

/// Outcome of a numerical hypothesis or ordering check.
enum class Verdict { HOLDS, FAILS, INCONCLUSIVE };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// Evaluation grid: `count` points over [lo, hi], log- or linearly spaced.
struct GridSpec {
  double lo = 1e-4;
  double hi = 50.0;
  std::size_t count = 512;
  bool log_spaced = true;

  std::vector<double> points() const;
  std::string describe() const;

  /// Parses "lo:hi:count" (linear) or "lo:hi:count:log".
  static GridSpec parse(std::string_view text);
};

/// Reads a required parameter, throwing std::invalid_argument naming `owner`
/// when it is missing.
double require_param(const ParamMap& params, const std::string& key,
                     std::string_view owner);

}  // namespace pocopula
