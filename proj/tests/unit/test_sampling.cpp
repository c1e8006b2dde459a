#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <sstream>

#include "pocopula/sampling.hpp"

using namespace pocopula;

namespace {

const Baseline kB = make_baseline("weibull", {{"lambda", 1.0}, {"k", 1.5}});

// Kendall's tau of an Archimedean copula: 1 - 4 ∫ t φ'(t)^2 dt.
double tau_quadrature(const Generator& g) {
  boost::math::quadrature::exp_sinh<double> q;
  return 1.0 - 4.0 * q.integrate([&](double t) {
    const double d = g.dphi(t);
    return t * d * d;
  });
}

}  // namespace

TEST_CASE("empirical statistics") {
  SampleBatch b;
  b.rows = 3;
  b.cols = 2;
  b.draws = {5, 7, 5, 6, 9, 5};
  CHECK(empirical_survival(b, Statistic::MIN, 4.0) == 1.0);
  CHECK(empirical_survival(b, Statistic::MIN, 6.0) == 0.0);
  CHECK(empirical_survival(b, Statistic::MAX, 0.0) == 0.0);
  CHECK(empirical_survival(b, Statistic::MAX, 6.0) == doctest::Approx(1.0 / 3.0));
  CHECK(b.column(1) == std::vector<double>{7, 6, 5});
}

TEST_CASE("kendall tau") {
  CHECK(kendall_tau({1, 2, 3, 4}, {1, 2, 3, 4}) == doctest::Approx(1.0));
  CHECK(kendall_tau({1, 2, 3, 4}, {4, 3, 2, 1}) == doctest::Approx(-1.0));
  // concordant 4, discordant 2 of 6 pairs
  CHECK(kendall_tau({1, 2, 3, 4}, {1, 3, 2, 4}) == doctest::Approx(4.0 / 6.0));

  const Generator cl = make_generator("clayton", {{"a", 0.5}});
  const double oracle = tau_quadrature(cl);
  CHECK(oracle == doctest::Approx(0.2).epsilon(1e-8));
  const SampleBatch s = sample_copula(cl, 2, 100000, 42);
  CHECK(std::abs(kendall_tau(s.column(0), s.column(1)) - oracle) <= 0.02);

  const SampleBatch i = sample_copula(make_generator("independence"), 2, 100000, 42);
  CHECK(std::abs(kendall_tau(i.column(0), i.column(1))) <= 0.01);
}

TEST_CASE("generic sampler tau matches quadrature") {
  const Generator g = make_generator("gumbel_frailty", {{"theta", 0.5}});
  const SampleBatch s = sample_copula(g, 2, 20000, 9);
  CHECK(std::abs(kendall_tau(s.column(0), s.column(1)) - tau_quadrature(g)) <= 0.03);
}

TEST_CASE("determinism") {
  const SystemModel m{kB, {0.5, 1.5, 3.0}, make_generator("sech_pow", {{"theta", 0.5}})};
  SampleOptions one, three;
  one.threads = 1;
  three.threads = 3;
  const SampleBatch a = sample(m, 2000, 17, one);
  const SampleBatch b = sample(m, 2000, 17, three);
  CHECK(a.draws == b.draws);
  CHECK(sample(m, 2000, 18, one).draws != a.draws);
  for (double x : a.draws) CHECK(x >= 0.0);

  std::ostringstream s1, s2;
  write_csv(a, s1);
  write_csv(b, s2);
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().rfind("x1,x2,x3\n", 0) == 0);
}

TEST_CASE("survival coupling matches the series law") {
  const SystemModel m{kB, {0.7, 2.0}, make_generator("clayton", {{"a", 0.5}})};
  const SampleBatch b = sample(m, 50000, 3);
  for (double q : {0.2, 0.6}) {
    const double t = kB.quantile(q);
    const double an = series_survival(m, t);
    CHECK(std::abs(empirical_survival(b, Statistic::MIN, t) - an) <=
          3 * std::sqrt(an * (1 - an) / 50000));
  }
}

TEST_CASE("shocked draws have an atom at zero") {
  const SystemModel m{kB, {0.7, 2.0}, make_generator("clayton", {{"a", 0.5}})};
  const SampleBatch b = sample_shocked(ShockedSystem{m, {0.5, 0.5}}, 50000, 4);
  const double se = std::sqrt(0.25 * 0.75 / 50000);
  CHECK(std::abs(empirical_survival(b, Statistic::MIN, 0.0) - 0.25) <= 3 * se);
  const SampleBatch plain = sample(m, 2000, 4);
  const SampleBatch ones = sample_shocked(ShockedSystem{m, {1.0, 1.0}}, 2000, 4);
  CHECK(plain.draws == ones.draws);
}

TEST_CASE("errors") {
  const Generator g = make_generator("gh_exp", {{"theta", 2.0}});
  CHECK_THROWS_AS(sample_copula(g, 5, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_copula(g, 2, 0, 1), std::invalid_argument);
  CHECK_NOTHROW(sample_copula(make_generator("clayton", {{"a", 1.0}}), 6, 10, 1));
}

TEST_CASE("splitmix streams") {
  SplitMix64 a = SplitMix64::for_row(1, 0), b = SplitMix64::for_row(1, 0),
             c = SplitMix64::for_row(1, 1);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}
