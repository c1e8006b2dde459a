#include "pocopula/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "numeric.hpp"

namespace pocopula {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double bell(int k, const std::array<double, 3>& d) {
  switch (k) {
    case 1:
      return d[0];
    case 2:
      return d[0] * d[0] + d[1];
    case 3:
      return d[0] * d[0] * d[0] + 3.0 * d[0] * d[1] + d[2];
    default:
      return 1.0;
  }
}

// ---------------------------------------------------------------------------
// Catalog families. Each returns psi = ln φ and the scaled derivatives of psi.

class Independence final : public GeneratorFamily {
 public:
  LogJet jet(double z, double) const override {
    return {-z, 0.0, {-1.0, 0.0, 0.0}, 3};
  }
  double phi_inv(double u) const override { return -std::log(u); }
};

// φ(t) = exp(1 − (1+t)^{1/θ})
class GhExp final : public GeneratorFamily {
 public:
  explicit GhExp(double theta) : theta_(theta), c_(1.0 / theta) {}

  LogJet jet(double z, double) const override {
    const double l1p = std::log1p(z);
    LogJet j;
    j.psi = -std::expm1(c_ * l1p);
    j.d[0] = -c_ * std::exp((c_ - 1.0) * l1p);
    j.d[1] = -c_ * (c_ - 1.0) * std::exp((c_ - 2.0) * l1p);
    j.d[2] = -c_ * (c_ - 1.0) * (c_ - 2.0) * std::exp((c_ - 3.0) * l1p);
    return j;
  }
  double phi_inv(double u) const override {
    return std::expm1(theta_ * std::log1p(-std::log(u)));
  }

 private:
  double theta_, c_;
};

// φ(t) = θ / ln(e^θ + t)
class LogFrac final : public GeneratorFamily {
 public:
  explicit LogFrac(double theta) : theta_(theta) {}

  LogJet jet(double, double log_z) const override {
    const double L = detail::log_add_exp(theta_, log_z);
    LogJet j;
    j.psi = std::log(theta_) - std::log(L);
    j.log_scale = -L;
    j.d[0] = -1.0 / L;
    j.d[1] = (L + 1.0) / (L * L);
    j.d[2] = -(2.0 * L * L + 3.0 * L + 2.0) / (L * L * L);
    return j;
  }
  double phi_inv(double u) const override {
    return std::exp(theta_) * std::expm1(theta_ * (1.0 - u) / u);
  }
  double log_phi_inv(double u) const override {
    return theta_ + detail::log_expm1(theta_ * (1.0 - u) / u);
  }

 private:
  double theta_;
};

// φ(t) = (ln(e + t))^{−1/θ}
class LogPow final : public GeneratorFamily {
 public:
  explicit LogPow(double theta) : theta_(theta), c_(1.0 / theta) {}

  LogJet jet(double, double log_z) const override {
    const double L = detail::log_add_exp(1.0, log_z);
    LogJet j;
    j.psi = -c_ * std::log(L);
    j.log_scale = -L;
    j.d[0] = -c_ / L;
    j.d[1] = c_ * (L + 1.0) / (L * L);
    j.d[2] = -c_ * (2.0 * L * L + 3.0 * L + 2.0) / (L * L * L);
    return j;
  }
  double phi_inv(double u) const override {
    return std::exp(1.0) * std::expm1(std::expm1(-theta_ * std::log(u)));
  }
  double log_phi_inv(double u) const override {
    return 1.0 + detail::log_expm1(std::expm1(-theta_ * std::log(u)));
  }

 private:
  double theta_, c_;
};

// φ(t) = (2 / (1 + e^t))^{1/θ}
class SechPow final : public GeneratorFamily {
 public:
  explicit SechPow(double theta) : theta_(theta), c_(1.0 / theta) {}

  LogJet jet(double z, double) const override {
    // ln((1 + e^z) / 2)
    const double half_softplus =
        z < 30.0 ? std::log1p(0.5 * std::expm1(z))
                 : z - std::log(2.0) + std::log1p(std::exp(-z));
    const double en = std::exp(-z);
    const double sig = 1.0 / (1.0 + en);      // e^z / (1 + e^z)
    const double sig_c = en / (1.0 + en);     // 1 − sig
    LogJet j;
    j.psi = -c_ * half_softplus;
    j.d[0] = -c_ * sig;
    j.d[1] = -c_ * sig * sig_c;
    j.d[2] = -c_ * sig * sig_c * (sig_c - sig);
    return j;
  }
  double phi_inv(double u) const override {
    return std::log1p(2.0 * std::expm1(-theta_ * std::log(u)));
  }

 private:
  double theta_, c_;
};

// φ(t) = exp((1 − e^t) / θ)
class GumbelFrailty final : public GeneratorFamily {
 public:
  explicit GumbelFrailty(double theta) : theta_(theta) {}

  LogJet jet(double z, double) const override {
    const double ez = std::exp(z);
    LogJet j;
    j.psi = -std::expm1(z) / theta_;
    j.d = {-ez / theta_, -ez / theta_, -ez / theta_};
    return j;
  }
  double phi_inv(double u) const override {
    return std::log1p(-theta_ * std::log(u));
  }

 private:
  double theta_;
};

// φ(t) = (1 + a t)^{−1/a}
class Clayton final : public GeneratorFamily {
 public:
  explicit Clayton(double a) : a_(a) {}

  LogJet jet(double z, double) const override {
    const double w = 1.0 + a_ * z;
    LogJet j;
    j.psi = -std::log1p(a_ * z) / a_;
    j.d[0] = -1.0 / w;
    j.d[1] = a_ / (w * w);
    j.d[2] = -2.0 * a_ * a_ / (w * w * w);
    return j;
  }
  double phi_inv(double u) const override {
    return std::expm1(-a_ * std::log(u)) / a_;
  }

 private:
  double a_;
};

// φ(t) = (θ − 1) / (θ − e^t)
class AmhLike final : public GeneratorFamily {
 public:
  explicit AmhLike(double theta) : theta_(theta) {}

  LogJet jet(double z, double) const override {
    const double y = theta_ * std::exp(-z);
    const double w = 1.0 - y;
    LogJet j;
    j.psi = std::log1p(-theta_) - z - std::log1p(-y);
    j.d[0] = -1.0 / w;
    j.d[1] = y / (w * w);
    j.d[2] = -y * (1.0 + y) / (w * w * w);
    return j;
  }
  double phi_inv(double u) const override {
    return std::log1p((1.0 - theta_) * (1.0 - u) / u);
  }

 private:
  double theta_;
};

// ---------------------------------------------------------------------------

void expect_only(const ParamMap& params, std::initializer_list<const char*> allowed,
                 const std::string& family) {
  for (const auto& [key, value] : params) {
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&](const char* a) { return key == a; });
    if (!known) {
      throw std::invalid_argument(family + ": unexpected parameter '" + key + "'");
    }
    if (!std::isfinite(value)) {
      throw std::invalid_argument(family + ": parameter '" + key + "' is not finite");
    }
  }
}

double theta_in(const ParamMap& p, const std::string& family, double lo, double hi,
                bool lo_closed, bool hi_closed, const char* key = "theta") {
  expect_only(p, {key}, family);
  const double v = require_param(p, key, family);
  const bool ok_lo = lo_closed ? v >= lo : v > lo;
  const bool ok_hi = hi_closed ? v <= hi : v < hi;
  if (!ok_lo || !ok_hi) {
    throw std::invalid_argument(family + ": parameter " + key + " = " +
                                std::to_string(v) + " outside admissible range " +
                                (lo_closed ? "[" : "(") + std::to_string(lo) + ", " +
                                (std::isinf(hi) ? std::string("inf")
                                                : std::to_string(hi)) +
                                (hi_closed ? "]" : ")"));
  }
  return v;
}

struct Registry {
  std::mutex mutex;
  std::map<std::string, FamilyFactory> factories;

  Registry() {
    factories["independence"] = [](const ParamMap& p) {
      expect_only(p, {}, "independence");
      return std::make_shared<const Independence>();
    };
    factories["gh_exp"] = [](const ParamMap& p) {
      return std::make_shared<const GhExp>(theta_in(p, "gh_exp", 0.0, kInf, false, false));
    };
    factories["log_frac"] = [](const ParamMap& p) {
      return std::make_shared<const LogFrac>(
          theta_in(p, "log_frac", 0.0, kInf, false, false));
    };
    factories["log_pow"] = [](const ParamMap& p) {
      return std::make_shared<const LogPow>(theta_in(p, "log_pow", 0.0, kInf, false, false));
    };
    factories["sech_pow"] = [](const ParamMap& p) {
      return std::make_shared<const SechPow>(theta_in(p, "sech_pow", 0.0, 1.0, false, true));
    };
    factories["gumbel_frailty"] = [](const ParamMap& p) {
      return std::make_shared<const GumbelFrailty>(
          theta_in(p, "gumbel_frailty", 0.0, 1.0, false, true));
    };
    factories["clayton"] = [](const ParamMap& p) {
      return std::make_shared<const Clayton>(
          theta_in(p, "clayton", 0.0, kInf, false, false, "a"));
    };
    factories["amh_like"] = [](const ParamMap& p) {
      return std::make_shared<const AmhLike>(
          theta_in(p, "amh_like", -1.0, 1.0, true, false));
    };
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

double GeneratorFamily::log_phi_inv(double u) const { return std::log(phi_inv(u)); }

Generator::Generator(std::string name, ParamMap params,
                     std::shared_ptr<const GeneratorFamily> family)
    : name_(std::move(name)), params_(std::move(params)), family_(std::move(family)) {
  if (!family_) throw std::invalid_argument("generator family must not be null");
  const double t = family_->phi_inv(1e-10);
  domain_hint_ = (std::isfinite(t) && t > 0.0) ? std::min(t, 1e6) : 1e6;
}

LogJet Generator::jet(double t) const {
  if (!(t >= 0.0)) throw std::invalid_argument("generator argument must be >= 0");
  return family_->jet(t, std::log(t));
}

LogJet Generator::jet_at_log(double log_t) const {
  return family_->jet(std::exp(log_t), log_t);
}

double Generator::log_phi(double t) const { return jet(t).psi; }

double Generator::phi(double t) const {
  return std::exp(log_phi(t));
}

double Generator::phi_complement(double t) const {
  return -std::expm1(log_phi(t));
}

double Generator::dphi(double t) const { return derivative(1, t); }

double Generator::d2phi(double t) const { return derivative(2, t); }

double Generator::derivative(int k, double t) const {
  if (k < 0 || k > 3) throw std::invalid_argument("derivative order must be in [0, 3]");
  const LogJet j = jet(t);
  if (k == 0) return std::exp(j.psi);
  if (j.psi == -kInf) return 0.0;
  if (j.order >= k) {
    return std::exp(j.psi + k * j.log_scale) * bell(k, j.d);
  }
  const double h = std::max(1e-5, 1e-5 * t);
  if (t >= h) {
    return (derivative(k - 1, t + h) - derivative(k - 1, t - h)) / (2.0 * h);
  }
  return (-3.0 * derivative(k - 1, t) + 4.0 * derivative(k - 1, t + h) -
          derivative(k - 1, t + 2.0 * h)) /
         (2.0 * h);
}

double Generator::log_abs_derivative_at_log(int k, double log_t) const {
  if (k < 0 || k > 3) throw std::invalid_argument("derivative order must be in [0, 3]");
  const LogJet j = jet_at_log(log_t);
  if (k == 0 || j.psi == -kInf) return j.psi;
  if (j.order >= k) return j.psi + k * j.log_scale + std::log(std::abs(bell(k, j.d)));
  return std::log(std::abs(derivative(k, std::exp(log_t))));
}

double Generator::phi_inv(double u) const {
  if (!(u > 0.0) || u > 1.0) {
    throw std::invalid_argument("phi_inv needs 0 < u <= 1");
  }
  if (u == 1.0) return 0.0;
  return family_->phi_inv(u);
}

double Generator::log_phi_inv(double u) const {
  if (!(u > 0.0) || u > 1.0) {
    throw std::invalid_argument("log_phi_inv needs 0 < u <= 1");
  }
  if (u == 1.0) return -kInf;
  return family_->log_phi_inv(u);
}

Generator make_generator(const std::string& name, const ParamMap& params) {
  FamilyFactory factory;
  {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    auto it = r.factories.find(name);
    if (it == r.factories.end()) {
      throw std::invalid_argument("unknown generator '" + name + "'");
    }
    factory = it->second;
  }
  return Generator(name, params, factory(params));
}

void register_generator(const std::string& name, FamilyFactory factory) {
  if (!factory) throw std::invalid_argument("generator factory must not be empty");
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  r.factories[name] = std::move(factory);
}

std::vector<std::string> generator_names() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  std::vector<std::string> out;
  for (const auto& [name, f] : r.factories) out.push_back(name);
  return out;
}

}  // namespace pocopula
