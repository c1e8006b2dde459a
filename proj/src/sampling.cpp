#include "pocopula/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "numeric.hpp"

namespace pocopula {

namespace {

constexpr double kLowerU = 1e-12;
constexpr double kBisectTol = 1e-10;
constexpr int kBisectIter = 100;
constexpr std::size_t kMaxGenericDim = 4;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

template <class RowFn>
void for_rows(std::size_t size, unsigned threads, RowFn&& fn) {
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(size, 1)));
  if (workers <= 1) {
    for (std::size_t r = 0; r < size; ++r) fn(r);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (size + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk, hi = std::min(size, lo + chunk);
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t r = lo; r < hi; ++r) fn(r);
    });
  }
  for (auto& t : pool) t.join();
}

// Conditional cdf of U_k given the earlier coordinates, in log form:
// ln |φ^(k−1)(c + φ⁻¹(u))| − ln |φ^(k−1)(c)|, with lc = ln c.
double log_conditional(const Generator& g, int order, double lc, double log_den, double u) {
  const double lz = detail::log_add_exp(lc, g.log_phi_inv(u));
  return g.log_abs_derivative_at_log(order, lz) - log_den;
}

void generic_row(const Generator& g, std::size_t n, SplitMix64& rng, double* out) {
  out[0] = std::max(rng.uniform(), kLowerU);
  double lc = g.log_phi_inv(out[0]);
  for (std::size_t k = 1; k < n; ++k) {
    const int order = static_cast<int>(k);
    const double log_den = g.log_abs_derivative_at_log(order, lc);
    const double target = std::log(rng.uniform());
    double lo = kLowerU, hi = 1.0;
    if (log_conditional(g, order, lc, log_den, lo) >= target) {
      hi = lo;
    } else {
      for (int it = 0; it < kBisectIter && hi - lo > kBisectTol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (log_conditional(g, order, lc, log_den, mid) < target) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }
    out[k] = hi;
    lc = detail::log_add_exp(lc, g.log_phi_inv(hi));
  }
}

void clayton_row(const Generator& g, double a, std::size_t n, SplitMix64& rng, double* out) {
  std::gamma_distribution<double> frailty(1.0 / a, a);
  std::exponential_distribution<double> expo(1.0);
  const double m = frailty(rng);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::clamp(std::exp(g.log_phi(expo(rng) / m)), kLowerU, 1.0);
  }
}

}  // namespace

SplitMix64 SplitMix64::for_row(std::uint64_t seed, std::uint64_t row) {
  return SplitMix64(mix(seed) ^ mix(row + 0x9E3779B97F4A7C15ULL));
}

SplitMix64::result_type SplitMix64::operator()() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix(state_);
}

double SplitMix64::uniform() {
  // 53 random bits, shifted half a step off zero
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

std::vector<double> SampleBatch::column(std::size_t c) const {
  if (c >= cols) throw std::out_of_range("column index out of range");
  std::vector<double> out(rows);
  for (std::size_t r = 0; r < rows; ++r) out[r] = at(r, c);
  return out;
}

SampleBatch sample_copula(const Generator& g, std::size_t n, std::size_t size,
                          std::uint64_t seed, unsigned threads) {
  if (size == 0) throw std::invalid_argument("sample size must be positive");
  if (n == 0) throw std::invalid_argument("copula dimension must be positive");
  const bool clayton = g.name() == "clayton";
  const bool independent = g.name() == "independence";
  if (!clayton && !independent && n > kMaxGenericDim) {
    throw std::invalid_argument("generic conditional sampler supports n <= 4");
  }
  SampleBatch b;
  b.rows = size;
  b.cols = n;
  b.seed = seed;
  b.draws.resize(size * n);
  const double a = clayton ? g.params().at("a") : 0.0;
  for_rows(size, threads, [&](std::size_t r) {
    SplitMix64 rng = SplitMix64::for_row(seed, r);
    double* row = b.draws.data() + r * n;
    if (independent) {
      for (std::size_t i = 0; i < n; ++i) row[i] = rng.uniform();
    } else if (clayton) {
      clayton_row(g, a, n, rng, row);
    } else {
      generic_row(g, n, rng, row);
    }
  });
  return b;
}

SampleBatch sample(const SystemModel& m, std::size_t size, std::uint64_t seed,
                   const SampleOptions& options) {
  m.validate();
  SampleBatch b = sample_copula(m.generator, m.n(), size, seed, options.threads);
  for_rows(size, options.threads, [&](std::size_t r) {
    for (std::size_t i = 0; i < m.n(); ++i) {
      double& x = b.draws[r * m.n() + i];
      const POComponent c = m.component(i);
      x = options.coupling == Coupling::SURVIVAL ? po_survival_inverse(c, x)
                                                 : po_cdf_inverse(c, x);
    }
  });
  return b;
}

SampleBatch sample_shocked(const ShockedSystem& s, std::size_t size, std::uint64_t seed,
                           const SampleOptions& options) {
  s.validate();
  SampleBatch b = sample(s.system, size, seed, options);
  // indicators come from a stream disjoint from the copula draws
  const std::uint64_t shock_seed = mix(seed ^ 0xD1B54A32D192ED03ULL);
  for_rows(size, options.threads, [&](std::size_t r) {
    SplitMix64 rng = SplitMix64::for_row(shock_seed, r);
    for (std::size_t i = 0; i < b.cols; ++i) {
      if (rng.uniform() >= s.probs[i]) b.draws[r * b.cols + i] = 0.0;
    }
  });
  return b;
}

double empirical_survival(const SampleBatch& batch, Statistic statistic, double t) {
  if (batch.rows == 0 || batch.cols == 0) throw std::invalid_argument("empty batch");
  std::size_t hits = 0;
  for (std::size_t r = 0; r < batch.rows; ++r) {
    const double* row = batch.draws.data() + r * batch.cols;
    if (statistic == Statistic::MIN) {
      if (*std::min_element(row, row + batch.cols) > t) ++hits;
    } else {
      if (*std::max_element(row, row + batch.cols) <= t) ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(batch.rows);
}

namespace {

// Counts strict inversions of v while merge-sorting it.
std::uint64_t sort_count(std::vector<double>& v, std::vector<double>& buf, std::size_t lo,
                         std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t swaps = sort_count(v, buf, lo, mid) + sort_count(v, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += mid - i;
      buf[k++] = v[j++];
    } else {
      buf[k++] = v[i++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
  return swaps;
}

std::uint64_t tied_pairs(const std::vector<double>& sorted) {
  std::uint64_t total = 0, run = 1;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      ++run;
    } else {
      total += run * (run - 1) / 2;
      run = 1;
    }
  }
  return total;
}

}  // namespace

double kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("kendall_tau: length mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("kendall_tau needs at least two points");

  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });

  // Knight's algorithm
  std::uint64_t n1 = 0, n3 = 0, run_x = 1, run_xy = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const bool same_x = i < n && x[idx[i]] == x[idx[i - 1]];
    const bool same_xy = same_x && y[idx[i]] == y[idx[i - 1]];
    if (same_x) {
      ++run_x;
    } else {
      n1 += run_x * (run_x - 1) / 2;
      run_x = 1;
    }
    if (same_xy) {
      ++run_xy;
    } else {
      n3 += run_xy * (run_xy - 1) / 2;
      run_xy = 1;
    }
  }

  std::vector<double> ys(n), buf(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];
  const std::uint64_t swaps = sort_count(ys, buf, 0, n);
  const std::uint64_t n2 = tied_pairs(ys);
  const double n0 = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);

  const double num = n0 - static_cast<double>(n1) - static_cast<double>(n2) +
                     static_cast<double>(n3) - 2.0 * static_cast<double>(swaps);
  const double den = std::sqrt((n0 - static_cast<double>(n1)) * (n0 - static_cast<double>(n2)));
  if (den == 0.0) return 0.0;
  return num / den;
}

void write_csv(const SampleBatch& batch, std::ostream& out) {
  for (std::size_t c = 0; c < batch.cols; ++c) {
    out << (c ? "," : "") << 'x' << (c + 1);
  }
  out << '\n';
  char buf[32];
  for (std::size_t r = 0; r < batch.rows; ++r) {
    for (std::size_t c = 0; c < batch.cols; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", batch.at(r, c));
      if (c) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace pocopula
