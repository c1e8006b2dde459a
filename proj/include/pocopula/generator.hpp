#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pocopula/types.hpp"

namespace pocopula {

/// Log-domain Taylor data of a generator at one abscissa z.
///
/// psi = ln φ(z). The j-th derivative of psi is exp(j * log_scale) * d[j-1],
/// which keeps derivatives representable when z itself overflows a double
/// (the log-type families decay like 1/ln z). `order` is how many entries of
/// `d` the family filled in.
struct LogJet {
  double psi = 0.0;
  double log_scale = 0.0;
  std::array<double, 3> d{};
  int order = 3;
};

/// One Archimedean generator family at fixed parameters.
///
/// `jet` receives z together with log z; z may be +inf when log z is large,
/// and families whose φ decays slower than any power must work from log z.
class GeneratorFamily {
 public:
  virtual ~GeneratorFamily() = default;

  virtual LogJet jet(double z, double log_z) const = 0;
  virtual double phi_inv(double u) const = 0;
  virtual double log_phi_inv(double u) const;
};

using FamilyFactory =
    std::function<std::shared_ptr<const GeneratorFamily>(const ParamMap&)>;

/// An Archimedean generator φ together with its catalog identity.
///
/// Immutable after construction and cheap to copy.
class Generator {
 public:
  Generator(std::string name, ParamMap params,
            std::shared_ptr<const GeneratorFamily> family);

  const std::string& name() const { return name_; }
  const ParamMap& params() const { return params_; }
  /// Abscissa beyond which φ is negligible: φ⁻¹(1e-10), capped at 1e6.
  double domain_hint() const { return domain_hint_; }

  /// φ(t).
  double phi(double t) const;
  /// ln φ(t) without clamping.
  double log_phi(double t) const;
  /// 1 − φ(t), accurate for small t.
  double phi_complement(double t) const;
  double dphi(double t) const;
  double d2phi(double t) const;
  /// k-th derivative of φ for k in [0, 3]; central differences of the
  /// (k−1)-th derivative when the family supplies fewer closed forms.
  double derivative(int k, double t) const;
  /// ln |φ^(k)(t)| evaluated from ln t; safe where t overflows.
  double log_abs_derivative_at_log(int k, double log_t) const;

  double phi_inv(double u) const;
  double log_phi_inv(double u) const;

  LogJet jet(double t) const;
  LogJet jet_at_log(double log_t) const;

  const GeneratorFamily& family() const { return *family_; }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.name_ == b.name_ && a.params_ == b.params_;
  }

 private:
  std::string name_;
  ParamMap params_;
  std::shared_ptr<const GeneratorFamily> family_;
  double domain_hint_ = 50.0;
};

/// Builds a catalog generator by name. Known names: independence, gh_exp,
/// log_frac, log_pow, sech_pow, gumbel_frailty, clayton, amh_like, plus any
/// registered through register_generator. Throws std::invalid_argument on an
/// unknown name, a missing or unexpected parameter, or an out-of-range value.
Generator make_generator(const std::string& name, const ParamMap& params = {});

/// Adds (or replaces) a family in the catalog.
void register_generator(const std::string& name, FamilyFactory factory);

std::vector<std::string> generator_names();

}  // namespace pocopula
