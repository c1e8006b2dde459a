#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pocopula/types.hpp"

namespace pocopula {

/// A baseline lifetime law on [0, ∞).
class BaselineFamily {
 public:
  virtual ~BaselineFamily() = default;

  virtual double survival(double t) const = 0;
  /// 1 − survival, computed without cancellation where possible.
  virtual double cdf(double t) const = 0;
  virtual double density(double t) const = 0;
  /// Smallest t with cdf(t) >= p, for p in [0, 1).
  virtual double quantile(double p) const = 0;
  /// Smallest t with survival(t) <= s, for s in (0, 1].
  virtual double survival_inverse(double s) const = 0;
};

/// Baseline distribution addressable by family name.
///
/// Families: `weibull` {lambda, k} with F̄(t) = exp(−(λt)^k), `exponential`
/// {lambda}, and `tabulated` (see make_tabulated_baseline).
class Baseline {
 public:
  Baseline(std::string family, ParamMap params, std::shared_ptr<const BaselineFamily> impl,
           std::vector<double> table_t = {}, std::vector<double> table_s = {});

  const std::string& family() const { return family_; }
  const ParamMap& params() const { return params_; }
  /// Knots of a tabulated baseline; empty for closed-form families.
  const std::vector<double>& table_times() const { return table_t_; }
  const std::vector<double>& table_survival() const { return table_s_; }

  double survival(double t) const;
  double cdf(double t) const;
  double density(double t) const;
  /// density / survival; throws std::domain_error where survival is 0.
  double hazard(double t) const;
  /// density / cdf; throws std::domain_error where cdf is 0.
  double reversed_hazard(double t) const;
  double quantile(double p) const;
  double survival_inverse(double s) const;

  friend bool operator==(const Baseline& a, const Baseline& b) {
    return a.family_ == b.family_ && a.params_ == b.params_ && a.table_t_ == b.table_t_ &&
           a.table_s_ == b.table_s_;
  }

 private:
  std::string family_;
  ParamMap params_;
  std::shared_ptr<const BaselineFamily> impl_;
  std::vector<double> table_t_, table_s_;
};

/// Throws std::invalid_argument on unknown family or bad parameters.
Baseline make_baseline(const std::string& family, const ParamMap& params);

/// Survival tabulated at strictly increasing times, starting at t = 0 with
/// survival 1 and non-increasing, at least four knots, last value in (0, 1).
/// Monotone cubic (PCHIP) interpolation between knots; beyond the last knot
/// the tail is exponential with the average rate −ln F̄(t_last) / t_last.
Baseline make_tabulated_baseline(std::vector<double> times, std::vector<double> survival);

/// One component of the proportional-odds model: survival
/// F̄_α = αF̄ / (1 − (1−α)F̄).
struct POComponent {
  Baseline baseline;
  double alpha = 1.0;
};

/// αF̄ / (1 − ᾱF̄) given F̄ and F = 1 − F̄ (both passed to keep precision in
/// either tail).
double po_transform_survival(double alpha, double sbar, double f);
/// F / (1 − ᾱF̄).
double po_transform_cdf(double alpha, double sbar, double f);

double po_survival(const POComponent& c, double t);
double po_cdf(const POComponent& c, double t);
double po_density(const POComponent& c, double t);
/// r(t) / (1 − ᾱF̄(t)).
double po_hazard(const POComponent& c, double t);
/// r̃(t) α / (1 − ᾱF̄(t)).
double po_reversed_hazard(const POComponent& c, double t);
/// t with po_survival(c, t) = v, v in (0, 1].
double po_survival_inverse(const POComponent& c, double v);
/// t with po_cdf(c, t) = w, w in [0, 1).
double po_cdf_inverse(const POComponent& c, double w);

}  // namespace pocopula
