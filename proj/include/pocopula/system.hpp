#pragma once

#include <cstddef>
#include <vector>

#include "pocopula/baseline.hpp"
#include "pocopula/generator.hpp"

namespace pocopula {

/// Survival or cdf below this level makes hazard-type evaluation a domain
/// error.
inline constexpr double kSaturation = 1e-10;

/// n dependent PO components sharing a baseline, coupled by the Archimedean
/// survival copula with generator φ.
struct SystemModel {
  Baseline baseline;
  std::vector<double> alphas;
  Generator generator;

  std::size_t n() const { return alphas.size(); }
  POComponent component(std::size_t i) const { return {baseline, alphas.at(i)}; }
  /// Throws std::invalid_argument unless n >= 2 and every alpha is positive.
  void validate() const;
};

/// Each lifetime multiplied by an independent Bernoulli(p_i) indicator.
struct ShockedSystem {
  SystemModel system;
  std::vector<double> probs;

  double prob_product() const;
  void validate() const;
};

/// P(X_{1:n} > t) = φ(Σ φ⁻¹(F̄_{α_i}(t))).
double series_survival(const SystemModel& m, double t);
/// 1 − series_survival, kept accurate near t = 0.
double series_cdf(const SystemModel& m, double t);
/// P(X_{n:n} <= t) = φ(Σ φ⁻¹(F_{α_i}(t))).
double parallel_cdf(const SystemModel& m, double t);
double parallel_survival(const SystemModel& m, double t);

/// Hazard rate of the minimum; throws std::domain_error once the survival
/// drops below kSaturation.
double series_hazard(const SystemModel& m, double t);
/// Reversed hazard rate of the maximum; throws std::domain_error where the
/// cdf is below kSaturation.
double parallel_reversed_hazard(const SystemModel& m, double t);
/// Reversed hazard of the minimum, h S / (1 − S).
double series_reversed_hazard(const SystemModel& m, double t);
/// Hazard of the maximum, r̃ F / (1 − F).
double parallel_hazard(const SystemModel& m, double t);

/// I₁(u) = [φ'(Σu)/φ(Σu)] Σ [φ(u_i)/φ'(u_i)] (1 − φ(u_i)).
double i1_statistic(const Generator& g, const std::vector<double>& u);

/// Π p_i · series_survival(t); at t = 0 this is the right limit Π p_i.
double shocked_series_survival(const ShockedSystem& s, double t);
double shocked_series_cdf(const ShockedSystem& s, double t);
/// Hazard of the shocked minimum for t > 0 (the atom at 0 leaves it unchanged).
double shocked_series_hazard(const ShockedSystem& s, double t);
double shocked_series_reversed_hazard(const ShockedSystem& s, double t);

}  // namespace pocopula
