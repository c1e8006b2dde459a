#pragma once

#include <string>
#include <vector>

namespace pocopula {

/// M: majorization, W: weak supermajorization, P: p-larger.
enum class MajorizationMode { M, W, P };

/// Slack absorbing ties: absolute for partial sums, relative (floor 1) for
/// partial products.
inline constexpr double kMajorizationSlack = 1e-12;

/// True when x dominates y in the given preorder: with both vectors sorted
/// ascending, partial sums (M, W) or partial products (P) of x never exceed
/// those of y; M additionally needs equal totals and only compares j < n.
/// Throws std::invalid_argument on length mismatch, empty input, or a
/// nonpositive entry in mode P.
bool majorizes(const std::vector<double>& x, const std::vector<double>& y,
               MajorizationMode mode);

/// First index j (0-based) at which the partial comparison fails, or -1.
int majorization_violation(const std::vector<double>& x, const std::vector<double>& y,
                           MajorizationMode mode);

std::string to_string(MajorizationMode mode);
MajorizationMode majorization_mode_from_string(const std::string& s);

}  // namespace pocopula
