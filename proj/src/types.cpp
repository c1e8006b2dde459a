#include "pocopula/types.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pocopula {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::HOLDS:
      return "HOLDS";
    case Verdict::FAILS:
      return "FAILS";
    case Verdict::INCONCLUSIVE:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "HOLDS") return Verdict::HOLDS;
  if (s == "FAILS") return Verdict::FAILS;
  if (s == "INCONCLUSIVE") return Verdict::INCONCLUSIVE;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

std::vector<double> GridSpec::points() const {
  if (count == 0) return {};
  if (!(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("grid bounds must be finite with lo <= hi");
  }
  if (log_spaced && lo <= 0.0) {
    throw std::invalid_argument("log-spaced grid needs lo > 0");
  }
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double n = static_cast<double>(count - 1);
  if (log_spaced) {
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = std::exp(a + (b - a) * static_cast<double>(i) / n);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = lo + (hi - lo) * static_cast<double>(i) / n;
    }
  }
  // pin the endpoints exactly
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::string GridSpec::describe() const {
  std::ostringstream os;
  os.precision(6);
  os << (log_spaced ? "log" : "linear") << " grid of " << count << " points over ["
     << lo << ", " << hi << "]";
  return os.str();
}

namespace {

double parse_double(std::string_view tok) {
  // std::from_chars for double is available in libstdc++ 11
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("bad number '" + std::string(tok) + "' in grid spec");
  }
  return v;
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw std::invalid_argument("grid spec must be lo:hi:count[:log], got '" +
                                std::string(text) + "'");
  }
  GridSpec g;
  g.lo = parse_double(parts[0]);
  g.hi = parse_double(parts[1]);
  const double c = parse_double(parts[2]);
  if (c < 1 || c != std::floor(c)) {
    throw std::invalid_argument("grid count must be a positive integer");
  }
  g.count = static_cast<std::size_t>(c);
  g.log_spaced = false;
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.log_spaced = true;
    } else if (parts[3] != "lin") {
      throw std::invalid_argument("grid spacing must be 'log' or 'lin'");
    }
  }
  if (g.hi < g.lo) throw std::invalid_argument("grid spec needs lo <= hi");
  return g;
}

double require_param(const ParamMap& params, const std::string& key,
                     std::string_view owner) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument(std::string(owner) + ": missing parameter '" + key + "'");
  }
  return it->second;
}

}  // namespace pocopula
