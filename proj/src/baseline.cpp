#include "pocopula/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

// pchip.hpp in Boost 1.74 calls unqualified isnan
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>

namespace pocopula {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

// F̄(t) = exp(−(λt)^k)
class Weibull final : public BaselineFamily {
 public:
  Weibull(double lambda, double k) : lambda_(lambda), k_(k) {}

  double survival(double t) const override { return std::exp(-cum_hazard(t)); }
  double cdf(double t) const override { return -std::expm1(-cum_hazard(t)); }
  double density(double t) const override {
    if (t <= 0.0) {
      if (k_ < 1.0) return kInf;
      return k_ == 1.0 ? lambda_ : 0.0;
    }
    const double lt = lambda_ * t;
    return k_ * lambda_ * std::pow(lt, k_ - 1.0) * std::exp(-std::pow(lt, k_));
  }
  double quantile(double p) const override {
    if (p >= 1.0) return kInf;
    return std::pow(-std::log1p(-p), 1.0 / k_) / lambda_;
  }
  double survival_inverse(double s) const override {
    if (s <= 0.0) return kInf;
    return std::pow(-std::log(s), 1.0 / k_) / lambda_;
  }

 private:
  double cum_hazard(double t) const { return t <= 0.0 ? 0.0 : std::pow(lambda_ * t, k_); }

  double lambda_, k_;
};

class Tabulated final : public BaselineFamily {
 public:
  Tabulated(const std::vector<double>& t, const std::vector<double>& s)
      : t_last_(t.back()), s_last_(s.back()) {
    const std::size_t n = t.size();
    const double last_slope = (s[n - 1] - s[n - 2]) / (t[n - 1] - t[n - 2]);
    rate_ = last_slope < 0.0 ? -last_slope / s_last_ : -std::log(s_last_) / t_last_;
    auto x = t;
    auto y = s;
    const double first_slope = (s[1] - s[0]) / (t[1] - t[0]);
    interp_ = std::make_shared<boost::math::interpolators::pchip<std::vector<double>>>(
        std::move(x), std::move(y), first_slope, last_slope);
  }

  double survival(double t) const override {
    if (t <= 0.0) return 1.0;
    if (t >= t_last_) return s_last_ * std::exp(-rate_ * (t - t_last_));
    return std::clamp((*interp_)(t), 0.0, 1.0);
  }
  double cdf(double t) const override {
    if (t >= t_last_) return -std::expm1(std::log(s_last_) - rate_ * (t - t_last_));
    return 1.0 - survival(t);
  }
  double density(double t) const override {
    if (t < 0.0) return 0.0;
    if (t >= t_last_) return rate_ * survival(t);
    return std::max(0.0, -interp_->prime(t));
  }
  double quantile(double p) const override {
    if (p >= 1.0) return kInf;
    if (p <= 0.0) return 0.0;
    return survival_inverse(1.0 - p);
  }
  double survival_inverse(double s) const override {
    if (s <= 0.0) return kInf;
    if (s >= 1.0) return 0.0;
    if (s <= s_last_) return t_last_ + std::log(s_last_ / s) / rate_;
    double lo = 0.0, hi = t_last_;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * t_last_; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (survival(mid) > s) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return hi;
  }

 private:
  std::shared_ptr<boost::math::interpolators::pchip<std::vector<double>>> interp_;
  double t_last_, s_last_, rate_ = 1.0;
};

double positive_param(const ParamMap& p, const std::string& key, const std::string& owner) {
  const double v = require_param(p, key, owner);
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(owner + ": parameter '" + key + "' must be positive");
  }
  return v;
}

void expect_keys(const ParamMap& p, std::initializer_list<const char*> keys,
                 const std::string& owner) {
  for (const auto& [key, value] : p) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
      throw std::invalid_argument(owner + ": unexpected parameter '" + key + "'");
    }
  }
}

}  // namespace

Baseline::Baseline(std::string family, ParamMap params,
                   std::shared_ptr<const BaselineFamily> impl, std::vector<double> table_t,
                   std::vector<double> table_s)
    : family_(std::move(family)),
      params_(std::move(params)),
      impl_(std::move(impl)),
      table_t_(std::move(table_t)),
      table_s_(std::move(table_s)) {
  if (!impl_) throw std::invalid_argument("baseline implementation must not be null");
}

double Baseline::survival(double t) const { return t <= 0.0 ? 1.0 : impl_->survival(t); }

double Baseline::cdf(double t) const { return t <= 0.0 ? 0.0 : impl_->cdf(t); }

double Baseline::density(double t) const { return t < 0.0 ? 0.0 : impl_->density(t); }

double Baseline::hazard(double t) const {
  const double s = survival(t);
  if (!(s > 0.0)) throw std::domain_error("hazard undefined where survival is 0");
  return density(t) / s;
}

double Baseline::reversed_hazard(double t) const {
  const double f = cdf(t);
  if (!(f > 0.0)) throw std::domain_error("reversed hazard undefined where cdf is 0");
  return density(t) / f;
}

double Baseline::quantile(double p) const {
  check_probability(p, "quantile level");
  return impl_->quantile(p);
}

double Baseline::survival_inverse(double s) const {
  check_probability(s, "survival level");
  return impl_->survival_inverse(s);
}

Baseline make_baseline(const std::string& family, const ParamMap& params) {
  if (family == "weibull") {
    expect_keys(params, {"lambda", "k"}, family);
    const double lambda = positive_param(params, "lambda", family);
    const double k = positive_param(params, "k", family);
    return Baseline(family, params, std::make_shared<const Weibull>(lambda, k));
  }
  if (family == "exponential") {
    expect_keys(params, {"lambda"}, family);
    const double lambda = positive_param(params, "lambda", family);
    return Baseline(family, params, std::make_shared<const Weibull>(lambda, 1.0));
  }
  if (family == "tabulated") {
    throw std::invalid_argument("tabulated baseline needs knots; use make_tabulated_baseline");
  }
  throw std::invalid_argument("unknown baseline family '" + family + "'");
}

Baseline make_tabulated_baseline(std::vector<double> times, std::vector<double> survival) {
  if (times.size() != survival.size()) {
    throw std::invalid_argument("tabulated: times and survival differ in length");
  }
  if (times.size() < 4) throw std::invalid_argument("tabulated: need at least 4 knots");
  if (times.front() != 0.0 || survival.front() != 1.0) {
    throw std::invalid_argument("tabulated: first knot must be (0, 1)");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1]) || !std::isfinite(times[i])) {
      throw std::invalid_argument("tabulated: times must be finite and strictly increasing");
    }
    if (!(survival[i] <= survival[i - 1])) {
      throw std::invalid_argument("tabulated: survival must be non-increasing");
    }
  }
  if (!(survival.back() > 0.0 && survival.back() < 1.0)) {
    throw std::invalid_argument("tabulated: last survival value must lie in (0, 1)");
  }
  auto impl = std::make_shared<const Tabulated>(times, survival);
  return Baseline("tabulated", {}, std::move(impl), std::move(times), std::move(survival));
}

// ---------------------------------------------------------------------------

double po_transform_survival(double alpha, double sbar, double f) {
  // 1 − ᾱF̄ = F + αF̄
  const double den = f + alpha * sbar;
  return den > 0.0 ? alpha * sbar / den : 1.0;
}

double po_transform_cdf(double alpha, double sbar, double f) {
  const double den = f + alpha * sbar;
  return den > 0.0 ? f / den : 0.0;
}

double po_survival(const POComponent& c, double t) {
  return po_transform_survival(c.alpha, c.baseline.survival(t), c.baseline.cdf(t));
}

double po_cdf(const POComponent& c, double t) {
  return po_transform_cdf(c.alpha, c.baseline.survival(t), c.baseline.cdf(t));
}

double po_density(const POComponent& c, double t) {
  const double sbar = c.baseline.survival(t), f = c.baseline.cdf(t);
  const double den = f + c.alpha * sbar;
  return c.alpha * c.baseline.density(t) / (den * den);
}

double po_hazard(const POComponent& c, double t) {
  const double sbar = c.baseline.survival(t), f = c.baseline.cdf(t);
  if (!(sbar > 0.0)) throw std::domain_error("component hazard undefined where survival is 0");
  return c.baseline.hazard(t) / (f + c.alpha * sbar);
}

double po_reversed_hazard(const POComponent& c, double t) {
  const double sbar = c.baseline.survival(t), f = c.baseline.cdf(t);
  if (!(f > 0.0)) throw std::domain_error("component reversed hazard undefined where cdf is 0");
  return c.baseline.reversed_hazard(t) * c.alpha / (f + c.alpha * sbar);
}

double po_survival_inverse(const POComponent& c, double v) {
  check_probability(v, "survival level");
  // F̄ = v / (α + ᾱv)
  const double sbar = v / (c.alpha + (1.0 - c.alpha) * v);
  return c.baseline.survival_inverse(std::min(sbar, 1.0));
}

double po_cdf_inverse(const POComponent& c, double w) {
  check_probability(w, "cdf level");
  // F = αw / (1 − w + αw)
  const double f = c.alpha * w / ((1.0 - w) + c.alpha * w);
  return c.baseline.quantile(std::min(f, 1.0));
}

}  // namespace pocopula
