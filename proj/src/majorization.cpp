#include "pocopula/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pocopula {

int majorization_violation(const std::vector<double>& x, const std::vector<double>& y,
                           MajorizationMode mode) {
  if (x.size() != y.size()) throw std::invalid_argument("majorization: length mismatch");
  if (x.empty()) throw std::invalid_argument("majorization: empty vectors");
  auto xs = x;
  auto ys = y;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const int n = static_cast<int>(xs.size());

  if (mode == MajorizationMode::P) {
    if (xs.front() <= 0.0 || ys.front() <= 0.0) {
      throw std::invalid_argument("p-larger order needs strictly positive entries");
    }
    // products can be large, so the slack scales with their magnitude
    double px = 1.0, py = 1.0;
    for (int j = 0; j < n; ++j) {
      px *= xs[j];
      py *= ys[j];
      if (px - py > kMajorizationSlack * std::max(1.0, py)) return j;
    }
    return -1;
  }

  double sx = 0.0, sy = 0.0;
  for (int j = 0; j < n; ++j) {
    sx += xs[j];
    sy += ys[j];
    if (mode == MajorizationMode::M && j == n - 1) {
      if (std::abs(sx - sy) > kMajorizationSlack) return j;
    } else if (sx - sy > kMajorizationSlack) {
      return j;
    }
  }
  return -1;
}

bool majorizes(const std::vector<double>& x, const std::vector<double>& y,
               MajorizationMode mode) {
  return majorization_violation(x, y, mode) < 0;
}

std::string to_string(MajorizationMode mode) {
  switch (mode) {
    case MajorizationMode::M:
      return "M";
    case MajorizationMode::W:
      return "W";
    case MajorizationMode::P:
      return "P";
  }
  return "?";
}

MajorizationMode majorization_mode_from_string(const std::string& s) {
  if (s == "M" || s == "m") return MajorizationMode::M;
  if (s == "W" || s == "w") return MajorizationMode::W;
  if (s == "P" || s == "p") return MajorizationMode::P;
  throw std::invalid_argument("unknown majorization mode '" + s + "'");
}

}  // namespace pocopula
