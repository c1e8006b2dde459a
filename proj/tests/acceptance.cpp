// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 3 5        run the listed ones
//
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pocopula/checks.hpp"
#include "pocopula/majorization.hpp"
#include "pocopula/repro.hpp"
#include "pocopula/sampling.hpp"
#include "pocopula/theorems.hpp"

using namespace pocopula;

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const std::string& msg) {
  if (!ok) {
    o.pass = false;
    std::printf("    fail: %s\n", msg.c_str());
  }
}

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double unif(Rng& r, double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(r); }
int pick(Rng& r, int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(r); }

double rel_err(double a, double b) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / s;
}

Baseline tabulated_weibull() {
  // Weibull(lambda=1, k=2) sampled on a table.
  std::vector<double> t, s;
  for (int i = 0; i <= 60; ++i) {
    const double x = 0.05 * i;
    t.push_back(x);
    s.push_back(std::exp(-x * x));
  }
  return make_tabulated_baseline(t, s);
}

std::vector<Baseline> three_baselines() {
  return {make_baseline("weibull", {{"lambda", 1.0}, {"k", 1.5}}),
          make_baseline("exponential", {{"lambda", 0.7}}), tabulated_weibull()};
}

Generator random_generator(const std::string& name, Rng& r) {
  if (name == "independence") return make_generator(name);
  if (name == "clayton") return make_generator(name, {{"a", unif(r, 0.1, 5.0)}});
  double th = 0;
  if (name == "gh_exp") th = unif(r, 0.3, 5.0);
  if (name == "log_frac") th = unif(r, 0.3, 3.0);
  if (name == "log_pow") th = unif(r, 0.1, 3.0);
  if (name == "sech_pow" || name == "gumbel_frailty") th = unif(r, 0.1, 1.0);
  if (name == "amh_like") th = unif(r, -1.0, 0.9);
  return make_generator(name, {{"theta", th}});
}

std::vector<double> random_vector(Rng& r, int n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = unif(r, lo, hi);
  return v;
}

// --- 1 -----------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  std::string summary;
  for (const std::string& id : figure_ids()) {
    const auto t0 = Clock::now();
    const FigureData fig = repro_figure(id);
    const double dt = seconds_since(t0);
    note(o, dt < 5.0, id + fmt(" took %.2f s", dt));
    note(o, !fig.crossings.empty(), id + " has no crossing");
    summary += fmt(" %s:%zu", id.c_str(), fig.crossings.size());
  }
  o.detail = "crossings" + summary;
  return o;
}

// --- 2 -----------------------------------------------------------------------

struct FuzzCase {
  SystemModel x, y;
  std::vector<double> p, q;
};

Baseline random_baseline(Rng& r) {
  if (pick(r, 0, 2) == 0) return make_baseline("exponential", {{"lambda", unif(r, 0.3, 2.0)}});
  return make_baseline("weibull", {{"lambda", unif(r, 0.5, 2.0)}, {"k", unif(r, 0.5, 3.0)}});
}

// beta drawn freely, alpha pulled elementwise below it (so sorted partial sums
// and products of alpha stay below those of beta); one case in five is an
// unrelated pair.
std::pair<std::vector<double>, std::vector<double>> dominating_pair(Rng& r, int n) {
  std::vector<double> b = random_vector(r, n, 0.2, 4.0);
  std::vector<double> a = b;
  if (pick(r, 0, 4) == 0) {
    a = random_vector(r, n, 0.2, 4.0);
  } else {
    for (double& v : a) v *= std::exp(-unif(r, 0.0, 0.7));
    std::shuffle(a.begin(), a.end(), r);
  }
  return {a, b};
}

// Remark 3.1 pairs (phi1, phi2).
std::pair<Generator, Generator> remark_pair(Rng& r) {
  switch (pick(r, 0, 2)) {
    case 0: {
      const double th = unif(r, 0.05, 1.0);
      return {make_generator("gh_exp", {{"theta", th}}), make_generator("log_frac", {{"theta", th}})};
    }
    case 1: {
      const double th = unif(r, 1.01, 4.0);
      return {make_generator("log_frac", {{"theta", th}}), make_generator("log_pow", {{"theta", th}})};
    }
    default: {
      const double t1 = unif(r, 1.0, 4.0);
      const double t2 = t1 * unif(r, 1.0, 2.5);
      return {make_generator("gh_exp", {{"theta", t1}}), make_generator("gh_exp", {{"theta", t2}})};
    }
  }
}

Generator log_convex_generator(Rng& r) {
  switch (pick(r, 0, 3)) {
    case 0:
      return make_generator("gh_exp", {{"theta", unif(r, 1.0, 5.0)}});
    case 1:
      return make_generator("log_frac", {{"theta", unif(r, 0.3, 3.0)}});
    case 2:
      return make_generator("clayton", {{"a", unif(r, 0.1, 3.0)}});
    default:
      return make_generator("independence");
  }
}

Generator log_concave_generator(Rng& r) {
  switch (pick(r, 0, 4)) {
    case 0:
      return make_generator("gumbel_frailty", {{"theta", unif(r, 0.1, 1.0)}});
    case 1:
      return make_generator("sech_pow", {{"theta", unif(r, 0.1, 1.0)}});
    case 2:
      return make_generator("amh_like", {{"theta", unif(r, -1.0, 0.0)}});
    case 3:
      return make_generator("gh_exp", {{"theta", unif(r, 0.2, 1.0)}});
    default:
      return make_generator("independence");
  }
}

// sech_pow(1) or amh_like on [-1, 0].
Generator remark32_generator(Rng& r) {
  if (pick(r, 0, 1) == 0) return make_generator("sech_pow", {{"theta", 1.0}});
  return make_generator("amh_like", {{"theta", unif(r, -1.0, 0.0)}});
}

// (phi1, phi2) with inv(phi1) o phi2 superadditive and phi2 log-concave.
std::pair<Generator, Generator> parallel_pair(Rng& r) {
  switch (pick(r, 0, 2)) {
    case 0: {
      const double t2 = unif(r, 0.2, 1.0);
      return {make_generator("gh_exp", {{"theta", t2 * unif(r, 1.0, 3.0)}}),
              make_generator("gh_exp", {{"theta", t2}})};
    }
    case 1: {
      const double t2 = unif(r, 0.1, 1.0);
      return {make_generator("gumbel_frailty", {{"theta", t2 * unif(r, 0.3, 1.0)}}),
              make_generator("gumbel_frailty", {{"theta", t2}})};
    }
    default: {
      const Generator g = log_concave_generator(r);
      return {g, g};
    }
  }
}

std::pair<std::vector<double>, std::vector<double>> shock_probs(Rng& r, int n) {
  std::vector<double> q = random_vector(r, n, 0.3, 1.0);
  std::vector<double> p = q;
  for (double& v : p) v *= unif(r, 0.5, 1.0);
  if (pick(r, 0, 4) == 0) p = random_vector(r, n, 0.3, 1.0);
  return {p, q};
}

FuzzCase make_case(const std::string& id, Rng& r) {
  const int n = pick(r, 2, 4);
  const Baseline b = random_baseline(r);
  auto [a, be] = dominating_pair(r, n);
  const std::string base = id.substr(1);
  const bool corollary = id[0] == 'C';
  Generator g1 = make_generator("independence"), g2 = g1;

  if (base == "3.1" || base == "5.1") {
    if (corollary) {
      g1 = g2 = log_convex_generator(r);
    } else {
      std::tie(g1, g2) = remark_pair(r);
    }
  } else if (base == "3.2" || base == "5.2") {
    if (corollary) {
      static const std::vector<std::string> names = generator_names();
      g1 = g2 = random_generator(names[pick(r, 0, static_cast<int>(names.size()) - 1)], r);
    } else {
      std::tie(g1, g2) = remark_pair(r);
    }
  } else if (base == "3.3" || base == "5.3") {
    g1 = g2 = remark32_generator(r);
    if (corollary) {
      const double mean = std::accumulate(a.begin(), a.end(), 0.0) / n;
      be.assign(n, mean * unif(r, 0.9, 1.6));
    }
  } else if (base == "4.1") {
    if (corollary) {
      g1 = g2 = log_concave_generator(r);
    } else {
      std::tie(g1, g2) = parallel_pair(r);
    }
  } else if (base == "4.2") {
    g1 = g2 = pick(r, 0, 1) == 0 ? make_generator("clayton", {{"a", 0.2}}) : remark32_generator(r);
  }
  FuzzCase c{SystemModel{b, a, g1}, SystemModel{b, be, g2}, {}, {}};
  if (id[1] == '5') std::tie(c.p, c.q) = shock_probs(r, n);
  return c;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng r(20240601);
  std::size_t total_hold = 0, total_abstain = 0, total_bad = 0;
  for (const std::string& id : theorem_ids()) {
    std::size_t hold = 0, abstain = 0, bad = 0;
    for (int k = 0; k < 500; ++k) {
      const FuzzCase c = make_case(id, r);
      const TheoremReport rep =
          c.p.empty() ? run_theorem(id, c.x, c.y)
                      : run_theorem(id, ShockedSystem{c.x, c.p}, ShockedSystem{c.y, c.q});
      hold += rep.hypotheses_hold;
      abstain += rep.abstained;
      if (!rep.consistent) {
        ++bad;
        if (bad <= 3) {
          std::printf("    %s inconsistent: conclusion %s (%s)\n", id.c_str(),
                      std::string(to_string(rep.conclusion.verdict)).c_str(),
                      rep.conclusion.note.c_str());
        }
      }
    }
    std::printf("    %-5s hypotheses held %3zu/500, abstained %3zu, inconsistent %zu\n",
                id.c_str(), hold, abstain, bad);
    total_hold += hold;
    total_abstain += abstain;
    total_bad += bad;
  }
  const double dt = seconds_since(t0);
  note(o, total_bad == 0, fmt("%zu inconsistent reports", total_bad));
  note(o, dt < 300.0, fmt("took %.1f s", dt));
  o.detail = fmt("%zu scenarios, %zu with all hypotheses holding, %zu abstained, %zu "
                 "inconsistent, %.1f s",
                 theorem_ids().size() * 500, total_hold, total_abstain, total_bad, dt);
  return o;
}

// --- 3 -----------------------------------------------------------------------

// Richardson-extrapolated central difference of f at t with step h.
double derivative(const std::function<double(double)>& f, double t, double h) {
  auto d = [&](double s) { return (f(t + s) - f(t - s)) / (2 * s); };
  return (4 * d(h / 2) - d(h)) / 3;
}

Outcome criterion3() {
  Outcome o;
  Rng r(7);
  double worst_s = 0, worst_p = 0;
  std::size_t checked = 0, skipped = 0;
  for (const std::string& name : generator_names()) {
    for (const Baseline& b : three_baselines()) {
      for (int n = 2; n <= 4; ++n) {
        const SystemModel m{b, random_vector(r, n, 0.2, 5.0), random_generator(name, r)};
        GridSpec grid;
        grid.lo = b.quantile(0.01);
        grid.hi = b.quantile(0.99);
        grid.count = 200;
        grid.log_spaced = false;
        for (double t : grid.points()) {
          const double h = 1e-5 * t;
          try {
            const double hs = series_hazard(m, t);
            const double ds =
                -derivative([&](double s) { return std::log(series_survival(m, s)); }, t, h);
            const double hp = parallel_reversed_hazard(m, t);
            const double dp =
                derivative([&](double s) { return std::log(parallel_cdf(m, s)); }, t, h);
            const double es = rel_err(hs, ds), ep = rel_err(hp, dp);
            if (es > worst_s || ep > worst_p) {
              if (std::max(es, ep) > 1e-5) {
                std::printf("    %s %s n=%d t=%g: series %.3g parallel %.3g\n", name.c_str(),
                            b.family().c_str(), n, t, es, ep);
              }
            }
            worst_s = std::max(worst_s, es);
            worst_p = std::max(worst_p, ep);
            ++checked;
          } catch (const std::domain_error&) {
            ++skipped;
          }
        }
      }
    }
  }
  note(o, worst_s <= 1e-5, fmt("series identity error %.3g", worst_s));
  note(o, worst_p <= 1e-5, fmt("parallel identity error %.3g", worst_p));
  note(o, checked > 0, "nothing checked");
  o.detail = fmt("%zu points, %zu saturated, worst relative error series %.2g parallel %.2g",
                 checked, skipped, worst_s, worst_p);
  return o;
}

// --- 4 -----------------------------------------------------------------------

Outcome criterion4() {
  Outcome o;
  Rng r(11);
  const Generator ind = make_generator("independence");
  double w1 = 0, w2 = 0, w3 = 0;
  std::size_t checked = 0;
  for (const Baseline& b : three_baselines()) {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = pick(r, 2, 6);
      const SystemModel m{b, random_vector(r, n, 0.1, 8.0), ind};
      for (double q = 0.02; q < 0.99; q += 0.04) {
        const double t = b.quantile(q);
        double s1 = 1, s2 = 1, hz = 0;
        for (int i = 0; i < n; ++i) {
          s1 *= po_survival(m.component(i), t);
          s2 *= po_cdf(m.component(i), t);
          hz += po_hazard(m.component(i), t);
        }
        w1 = std::max(w1, rel_err(series_survival(m, t), s1));
        w2 = std::max(w2, rel_err(parallel_cdf(m, t), s2));
        w3 = std::max(w3, rel_err(series_hazard(m, t), hz));
        ++checked;
      }
    }
  }
  note(o, w1 <= 1e-12, fmt("S1 error %.3g", w1));
  note(o, w2 <= 1e-12, fmt("S2 error %.3g", w2));
  note(o, w3 <= 1e-12, fmt("hazard error %.3g", w3));
  o.detail = fmt("%zu points, worst relative error S1 %.2g S2 %.2g hazard %.2g", checked, w1, w2,
                 w3);
  return o;
}

// --- 5 -----------------------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  const auto t0 = Clock::now();
  constexpr std::size_t kSize = 100000;
  constexpr std::uint64_t kSeed = 42;
  const Baseline b = make_baseline("weibull", {{"lambda", 1.0}, {"k", 1.5}});
  // Parameters where every family's generator is 3-monotone, so the copula
  // exists in dimension 3.
  const std::vector<Generator> gens = {
      make_generator("independence"),
      make_generator("gh_exp", {{"theta", 2.0}}),
      make_generator("log_frac", {{"theta", 0.9}}),
      make_generator("log_pow", {{"theta", 0.1}}),
      make_generator("sech_pow", {{"theta", 0.1}}),
      make_generator("gumbel_frailty", {{"theta", 0.1}}),
      make_generator("clayton", {{"a", 0.5}}),
      make_generator("amh_like", {{"theta", 0.5}}),
  };
  double worst = 0;
  std::size_t comparisons = 0;
  for (const Generator& g : gens) {
    for (int n : {2, 3}) {
      const SystemModel m{b, n == 2 ? std::vector<double>{0.7, 2.0}
                                    : std::vector<double>{0.5, 1.5, 3.0},
                          g};
      for (Coupling cp : {Coupling::SURVIVAL, Coupling::DISTRIBUTION}) {
        SampleOptions opt;
        opt.coupling = cp;
        const SampleBatch batch = sample(m, kSize, kSeed, opt);
        for (double q : {0.1, 0.3, 0.5, 0.7, 0.9}) {
          const double t = b.quantile(q);
          const bool surv = cp == Coupling::SURVIVAL;
          const double an = surv ? series_survival(m, t) : parallel_cdf(m, t);
          const double em = empirical_survival(batch, surv ? Statistic::MIN : Statistic::MAX, t);
          const double z = std::abs(an - em) / std::sqrt(an * (1 - an) / kSize);
          worst = std::max(worst, z);
          ++comparisons;
          note(o, z <= 3.0,
               fmt("%s n=%d %s q=%.1f: analytic %.5f empirical %.5f z=%.2f", g.name().c_str(), n,
                   surv ? "MIN" : "MAX", q, an, em, z));
        }
      }
    }
  }

  // Shocks: P(min > 0) = p1 p2 and the scaled survival curve.
  {
    const ShockedSystem s{SystemModel{b, {0.7, 2.0}, make_generator("clayton", {{"a", 0.5}})},
                          {0.5, 0.5}};
    const SampleBatch batch = sample_shocked(s, kSize, kSeed);
    for (double t : {0.0, b.quantile(0.3), b.quantile(0.6)}) {
      const double an = t == 0.0 ? 0.25 : shocked_series_survival(s, t);
      const double em = empirical_survival(batch, Statistic::MIN, t);
      const double z = std::abs(an - em) / std::sqrt(an * (1 - an) / kSize);
      worst = std::max(worst, z);
      ++comparisons;
      note(o, z <= 3.0, fmt("shocked t=%g: analytic %.5f empirical %.5f", t, an, em));
    }
  }

  // Kendall's tau: 0 for independence, a/(a+2) for Clayton.
  {
    const SampleBatch ind = sample_copula(gens[0], 2, kSize, kSeed);
    const double ti = kendall_tau(ind.column(0), ind.column(1));
    note(o, std::abs(ti) <= 0.01, fmt("independence tau %.4f", ti));
    const SampleBatch cl = sample_copula(gens[6], 2, kSize, kSeed);
    const double tc = kendall_tau(cl.column(0), cl.column(1));
    note(o, std::abs(tc - 0.2) <= 0.02, fmt("clayton tau %.4f", tc));
  }

  // Determinism across runs and thread counts.
  {
    const SystemModel m{b, {0.5, 1.5, 3.0}, gens[2]};
    SampleOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const SampleBatch a = sample(m, 5000, kSeed, one);
    const SampleBatch c = sample(m, 5000, kSeed, four);
    const SampleBatch d = sample(m, 5000, kSeed, one);
    note(o, a.draws == c.draws && a.draws == d.draws, "batches differ for a fixed seed");
  }

  const double dt = seconds_since(t0);
  note(o, dt < 120.0, fmt("took %.1f s", dt));
  o.detail = fmt("%zu comparisons at 1e5 draws (seed 42), worst |z| %.2f, %.1f s", comparisons,
                 worst, dt);
  return o;
}

// --- 6 -----------------------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  Rng r(3);
  std::size_t nm = 0, nw = 0, np = 0, broken = 0;
  for (int k = 0; k < 10000; ++k) {
    const int n = pick(r, 2, 6);
    std::vector<double> y = random_vector(r, n, 0.1, 5.0);
    std::vector<double> x = y;
    const int kind = k % 3;
    if (kind < 2) {
      // spread y by transfers from a smaller to a larger entry: x majorizes y
      for (int s = pick(r, 0, 4); s > 0; --s) {
        int i = pick(r, 0, n - 1), j = pick(r, 0, n - 1);
        if (x[i] > x[j]) std::swap(i, j);
        if (i == j) continue;
        const double d = unif(r, 0.0, 0.95) * x[i];
        x[i] -= d;
        x[j] += d;
      }
      if (kind == 1) {
        for (double& v : x) v *= unif(r, 0.6, 1.0);
      }
      std::shuffle(x.begin(), x.end(), r);
    } else {
      x = random_vector(r, n, 0.1, 5.0);
    }
    const bool m = majorizes(x, y, MajorizationMode::M);
    const bool w = majorizes(x, y, MajorizationMode::W);
    const bool p = majorizes(x, y, MajorizationMode::P);
    nm += m;
    nw += w;
    np += p;
    if ((m && !w) || (w && !p)) ++broken;
  }
  note(o, broken == 0, fmt("%zu chain violations", broken));
  note(o, nm > 1000 && nw > nm, "too few majorized pairs generated");
  const bool e1 = majorizes({2, 3, 5.5}, {2.5, 3.5, 3.8}, MajorizationMode::P);
  const bool e2 = majorizes({0.2, 0.4, 0.6}, {0.35, 0.55, 0.95}, MajorizationMode::W);
  note(o, e1, "(2,3,5.5) not p-larger than (2.5,3.5,3.8)");
  note(o, e2, "(0.2,0.4,0.6) does not w-dominate (0.35,0.55,0.95)");
  o.detail = fmt("10000 pairs: %zu M, %zu W, %zu P, %zu chain violations; exemplars %s/%s", nm,
                 nw, np, broken, e1 ? "ok" : "wrong", e2 ? "ok" : "wrong");
  return o;
}

// --- 7 -----------------------------------------------------------------------

Outcome criterion7() {
  Outcome o;
  auto g = [](const char* name, double v) {
    return make_generator(name, {{std::string(name) == "clayton" ? "a" : "theta", v}});
  };
  std::size_t rows = 0, agree = 0;
  auto expect = [&](const std::string& what, const CheckReport& rep, Verdict want) {
    ++rows;
    const bool ok = rep.verdict == want;
    agree += ok;
    std::string w;
    if (!rep.witness.empty()) {
      w = " witness";
      for (double v : rep.witness.front()) w += fmt(" %.4g", v);
    }
    std::printf("    %-4s %-58s %-12s (expected %s)%s\n", ok ? "ok" : "BAD", what.c_str(),
                std::string(to_string(rep.verdict)).c_str(), std::string(to_string(want)).c_str(),
                ok ? "" : w.c_str());
    note(o, ok, what);
  };
  const auto H = Verdict::HOLDS, F = Verdict::FAILS;
  const auto concave = Curvature::CONCAVE;

  for (double th : {0.2, 0.5, 1.0}) {
    expect(fmt("superadditive gh_exp(%g) -> log_frac(%g)", th, th),
           check_superadditive_composition(g("gh_exp", th), g("log_frac", th)), H);
  }
  for (double th : {1.5, 2.0, 3.0}) {
    expect(fmt("superadditive log_frac(%g) -> log_pow(%g)", th, th),
           check_superadditive_composition(g("log_frac", th), g("log_pow", th)), H);
  }
  for (auto [a, b] : {std::pair{1.0, 2.0}, std::pair{1.0, 1.0}, std::pair{2.0, 5.0}}) {
    expect(fmt("superadditive gh_exp(%g) -> gh_exp(%g)", a, b),
           check_superadditive_composition(g("gh_exp", a), g("gh_exp", b)), H);
  }
  expect("superadditive sech_pow(0.9) -> gh_exp(0.3)",
         check_superadditive_composition(g("sech_pow", 0.9), g("gh_exp", 0.3)), F);
  expect("superadditive sech_pow(0.2) -> gumbel_frailty(0.9)",
         check_superadditive_composition(g("sech_pow", 0.2), g("gumbel_frailty", 0.9)), F);

  expect("log_pow(0.1) log-concave", check_log_convexity(g("log_pow", 0.1), concave), F);
  expect("log_pow(0.1) ratio decreasing",
         check_ratio_shape(g("log_pow", 0.1), RatioShape::DECREASING), H);
  expect("log_pow(0.1) ratio convex", check_ratio_shape(g("log_pow", 0.1), RatioShape::CONVEX),
         H);
  expect("sech_pow(0.2) log-concave", check_log_convexity(g("sech_pow", 0.2), concave), H);
  expect("sech_pow(0.2) ratio decreasing",
         check_ratio_shape(g("sech_pow", 0.2), RatioShape::DECREASING), F);
  expect("sech_pow(0.2) ratio convex", check_ratio_shape(g("sech_pow", 0.2), RatioShape::CONVEX),
         F);

  expect("log_frac(0.9) log-concave", check_log_convexity(g("log_frac", 0.9), concave), F);
  expect("gh_exp(8) log-concave", check_log_convexity(g("gh_exp", 8.0), concave), F);
  expect("gumbel_frailty(0.9) log-concave",
         check_log_convexity(g("gumbel_frailty", 0.9), concave), H);

  expect("clayton(0.2) log-concave", check_log_convexity(g("clayton", 0.2), concave), F);
  expect("clayton(0.2) ratio decreasing",
         check_ratio_shape(g("clayton", 0.2), RatioShape::DECREASING), H);
  expect("clayton(0.2) ratio convex", check_ratio_shape(g("clayton", 0.2), RatioShape::CONVEX),
         H);

  std::vector<std::pair<std::string, Generator>> r32 = {{"sech_pow(1)", g("sech_pow", 1.0)}};
  for (double th : {-1.0, -0.5, 0.0}) r32.push_back({fmt("amh_like(%g)", th), g("amh_like", th)});
  for (const auto& [label, gen] : r32) {
    expect(label + " log-concave", check_log_convexity(gen, concave), H);
    expect(label + " ratio decreasing", check_ratio_shape(gen, RatioShape::DECREASING), H);
    expect(label + " ratio convex", check_ratio_shape(gen, RatioShape::CONVEX), H);
  }
  o.detail = fmt("%zu/%zu classifications agree", agree, rows);
  return o;
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> kCriteria = {
    {"counterexample figures cross", criterion1},
    {"theorem fuzz has no inconsistency", criterion2},
    {"hazard identities match numeric derivatives", criterion3},
    {"independence reductions", criterion4},
    {"Monte Carlo agreement", criterion5},
    {"majorization chain", criterion6},
    {"hypothesis checker ground truth", criterion7},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(kCriteria.size())) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
      return 2;
    }
    which.push_back(k);
  }
  if (which.empty()) {
    which.resize(kCriteria.size());
    std::iota(which.begin(), which.end(), 1);
  }
  int failed = 0;
  for (int k : which) {
    const auto& [title, run] = kCriteria[k - 1];
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d %s: %s (%s)\n", k, out.pass ? "PASS" : "FAIL", title,
                out.detail.c_str());
    std::fflush(stdout);
    failed += !out.pass;
  }
  return failed == 0 ? 0 : 1;
}
