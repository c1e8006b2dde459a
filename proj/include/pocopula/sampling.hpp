#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pocopula/system.hpp"

namespace pocopula {

/// How copula uniforms become lifetimes.
///
/// SURVIVAL: x_i = F̄_{α_i}⁻¹(u_i), so the copula couples the survival
/// functions and P(min > t) is series_survival. DISTRIBUTION: x_i =
/// F_{α_i}⁻¹(u_i), so the copula couples the cdfs and P(max <= t) is
/// parallel_cdf.
enum class Coupling { SURVIVAL, DISTRIBUTION };

enum class Statistic { MIN, MAX };

struct SampleOptions {
  Coupling coupling = Coupling::SURVIVAL;
  /// Worker threads; 0 picks the hardware concurrency. Output does not
  /// depend on this value.
  unsigned threads = 0;
};

/// Row-major matrix of lifetimes.
struct SampleBatch {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t seed = 0;
  std::vector<double> draws;

  double at(std::size_t r, std::size_t c) const { return draws[r * cols + c]; }
  std::vector<double> column(std::size_t c) const;
};

/// Counter-based 64-bit generator (SplitMix64). Row r of a batch draws from
/// the stream seeded by mixing (seed, r), which makes batches independent of
/// how rows are split across threads.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  static SplitMix64 for_row(std::uint64_t seed, std::uint64_t row);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();
  /// Uniform on the open interval (0, 1).
  double uniform();

 private:
  std::uint64_t state_;
};

/// Draws `size` vectors from the Archimedean copula with generator g.
/// Clayton and independence use frailty/direct fast paths; other generators
/// use the conditional method with bisection, limited to n <= 4.
SampleBatch sample_copula(const Generator& g, std::size_t n, std::size_t size,
                          std::uint64_t seed, unsigned threads = 0);

SampleBatch sample(const SystemModel& m, std::size_t size, std::uint64_t seed,
                   const SampleOptions& options = {});

/// Lifetimes of `sample` multiplied by independent Bernoulli(p_i) indicators.
SampleBatch sample_shocked(const ShockedSystem& s, std::size_t size, std::uint64_t seed,
                           const SampleOptions& options = {});

/// MIN: fraction of rows whose minimum exceeds t. MAX: fraction of rows whose
/// maximum is <= t.
double empirical_survival(const SampleBatch& batch, Statistic statistic, double t);

/// Kendall's tau-b, O(n log n).
double kendall_tau(const std::vector<double>& x, const std::vector<double>& y);

/// Header `x1,...,xn`, 17 significant digits, '\n' line endings.
void write_csv(const SampleBatch& batch, std::ostream& out);

}  // namespace pocopula
