#include "pocopula/system.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "numeric.hpp"

namespace pocopula {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Copula-scale arguments u_i (marginal survivals or cdfs) and the pieces of
// the PO transform that the hazard formulas reuse.
struct Marginals {
  std::vector<double> u;
  std::vector<double> den;  // 1 − ᾱ_i F̄ = F + α_i F̄
  bool any_zero = false;
};

Marginals marginals(const SystemModel& m, double t, bool survival_side) {
  const double sbar = m.baseline.survival(t);
  const double f = m.baseline.cdf(t);
  Marginals out;
  out.u.resize(m.n());
  out.den.resize(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    const double a = m.alphas[i];
    out.den[i] = f + a * sbar;
    out.u[i] = survival_side ? po_transform_survival(a, sbar, f) : po_transform_cdf(a, sbar, f);
    if (!(out.u[i] > 0.0)) out.any_zero = true;
  }
  return out;
}

// ln Σ φ⁻¹(u_i) together with ln φ⁻¹(u_i).
double log_sum_inverse(const Generator& g, const std::vector<double>& u,
                       std::vector<double>& log_z) {
  log_z.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) log_z[i] = g.log_phi_inv(std::min(u[i], 1.0));
  return detail::log_sum_exp(log_z);
}

// ln |ψ'(z)| from ln z.
double log_abs_dpsi(const Generator& g, double log_z) {
  const LogJet j = g.jet_at_log(log_z);
  return j.log_scale + std::log(std::abs(j.d[0]));
}

// ψ(s) at s = Σ φ⁻¹(u_i); −inf when some u_i is 0.
double extreme_log_value(const SystemModel& m, const Marginals& mg) {
  if (mg.any_zero) return -kInf;
  std::vector<double> log_z;
  const double log_s = log_sum_inverse(m.generator, mg.u, log_z);
  return m.generator.jet_at_log(log_s).psi;
}

double complement_phi(double psi) { return -std::expm1(psi); }

// Σ_i w_i / (den_i ψ'(z_i)) · ψ'(s), the common core of the two hazard
// formulas, evaluated through log magnitudes.
double hazard_core(const SystemModel& m, const Marginals& mg, bool weight_by_alpha) {
  std::vector<double> log_z;
  const double log_s = log_sum_inverse(m.generator, mg.u, log_z);
  const double ls = log_abs_dpsi(m.generator, log_s);
  double sum = 0.0;
  for (std::size_t i = 0; i < m.n(); ++i) {
    const double w = weight_by_alpha ? m.alphas[i] : 1.0;
    sum += w * std::exp(ls - log_abs_dpsi(m.generator, log_z[i])) / mg.den[i];
  }
  return sum;
}

}  // namespace

void SystemModel::validate() const {
  if (alphas.size() < 2) throw std::invalid_argument("system needs n >= 2 components");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0) || !std::isfinite(alphas[i])) {
      throw std::invalid_argument("alphas[" + std::to_string(i) + "] must be positive");
    }
  }
}

double ShockedSystem::prob_product() const {
  double p = 1.0;
  for (double q : probs) p *= q;
  return p;
}

void ShockedSystem::validate() const {
  system.validate();
  if (probs.size() != system.n()) {
    throw std::invalid_argument("probs must have one entry per component");
  }
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] > 0.0 && probs[i] <= 1.0)) {
      throw std::invalid_argument("probs[" + std::to_string(i) + "] must lie in (0, 1]");
    }
  }
}

double series_survival(const SystemModel& m, double t) {
  if (t <= 0.0) return 1.0;
  return std::exp(extreme_log_value(m, marginals(m, t, true)));
}

double series_cdf(const SystemModel& m, double t) {
  if (t <= 0.0) return 0.0;
  return complement_phi(extreme_log_value(m, marginals(m, t, true)));
}

double parallel_cdf(const SystemModel& m, double t) {
  if (t <= 0.0) return 0.0;
  return std::exp(extreme_log_value(m, marginals(m, t, false)));
}

double parallel_survival(const SystemModel& m, double t) {
  if (t <= 0.0) return 1.0;
  return complement_phi(extreme_log_value(m, marginals(m, t, false)));
}

double series_hazard(const SystemModel& m, double t) {
  const Marginals mg = marginals(m, std::max(t, 0.0), true);
  if (mg.any_zero || std::exp(extreme_log_value(m, mg)) < kSaturation) {
    throw std::domain_error("series hazard: survival saturated at t = " + std::to_string(t));
  }
  return m.baseline.hazard(t) * hazard_core(m, mg, false);
}

double parallel_reversed_hazard(const SystemModel& m, double t) {
  if (!(t > 0.0)) throw std::domain_error("parallel reversed hazard: cdf is 0 at t = 0");
  const Marginals mg = marginals(m, t, false);
  if (mg.any_zero || std::exp(extreme_log_value(m, mg)) < kSaturation) {
    throw std::domain_error("parallel reversed hazard: cdf saturated at t = " +
                            std::to_string(t));
  }
  return m.baseline.reversed_hazard(t) * hazard_core(m, mg, true);
}

double series_reversed_hazard(const SystemModel& m, double t) {
  const double f = series_cdf(m, t);
  if (f < kSaturation) throw std::domain_error("series reversed hazard: cdf saturated");
  return series_hazard(m, t) * series_survival(m, t) / f;
}

double parallel_hazard(const SystemModel& m, double t) {
  const double s = parallel_survival(m, t);
  if (s < kSaturation) throw std::domain_error("parallel hazard: survival saturated");
  return parallel_reversed_hazard(m, t) * parallel_cdf(m, t) / s;
}

double i1_statistic(const Generator& g, const std::vector<double>& u) {
  double s = 0.0;
  for (double ui : u) {
    if (!(ui >= 0.0)) throw std::invalid_argument("i1_statistic needs u_i >= 0");
    s += ui;
  }
  if (g.phi(s) == 0.0) throw std::domain_error("i1_statistic: phi(sum u) is 0");
  const double ls = log_abs_dpsi(g, std::log(s));
  double sum = 0.0;
  for (double ui : u) {
    const double lu = log_abs_dpsi(g, std::log(ui));
    if (!std::isfinite(lu)) throw std::domain_error("i1_statistic: phi' vanishes at u_i");
    // [φ(u)/φ'(u)] (1 − φ(u)) carries the sign of 1/ψ'(u), which cancels with ψ'(s)
    sum += g.phi_complement(ui) * std::exp(ls - lu);
  }
  return sum;
}

double shocked_series_survival(const ShockedSystem& s, double t) {
  return s.prob_product() * series_survival(s.system, t);
}

double shocked_series_cdf(const ShockedSystem& s, double t) {
  const double p = s.prob_product();
  // 1 − pS = (1 − p) + p(1 − S)
  return (1.0 - p) + p * series_cdf(s.system, t);
}

double shocked_series_hazard(const ShockedSystem& s, double t) {
  return series_hazard(s.system, t);
}

double shocked_series_reversed_hazard(const ShockedSystem& s, double t) {
  const double f = shocked_series_cdf(s, t);
  if (f < kSaturation) throw std::domain_error("shocked reversed hazard: cdf saturated");
  return series_hazard(s.system, t) * shocked_series_survival(s, t) / f;
}

}  // namespace pocopula
