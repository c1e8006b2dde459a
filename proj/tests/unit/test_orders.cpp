#include <doctest.h>

#include "pocopula/orders.hpp"
#include "pocopula/repro.hpp"

using namespace pocopula;

namespace {

const Baseline kW = make_baseline("weibull", {{"lambda", 0.5}, {"k", 2.0}});

void witnesses_reproduce(const OrderVerdict& v, const SystemModel& a, const SystemModel& b) {
  CHECK((v.verdict == Verdict::FAILS) == !v.witnesses.empty());
  for (const auto& w : v.witnesses) CHECK(witness_excess(w, a, b, v.order, v.which) > v.tolerance);
}

}  // namespace

TEST_CASE("identical systems are ordered both ways") {
  const SystemModel m{kW, {0.5, 1.5, 2.0}, make_generator("clayton", {{"a", 1.5}})};
  for (Order o : {Order::ST, Order::HR, Order::RHR}) {
    for (Extreme e : {Extreme::SERIES, Extreme::PARALLEL}) {
      CAPTURE(to_string(o));
      CAPTURE(to_string(e));
      CHECK(check_order(m, m, o, e).verdict == Verdict::HOLDS);
    }
  }
}

TEST_CASE("common clayton generator with dominated odds ratios") {
  const Generator g = make_generator("clayton", {{"a", 0.5}});
  const SystemModel x{kW, {0.2, 0.4, 0.6}, g}, y{kW, {0.35, 0.55, 0.95}, g};
  CHECK(check_order(x, y, Order::ST, Extreme::SERIES).verdict == Verdict::HOLDS);
  // reversed roles must fail, with reproducible witnesses
  const OrderVerdict v = check_order(y, x, Order::ST, Extreme::SERIES);
  CHECK(v.verdict == Verdict::FAILS);
  witnesses_reproduce(v, y, x);
}

TEST_CASE("crossing survival curves fail st in both directions") {
  const FigureSpec f = figure_spec("F1");
  const OrderVerdict v = check_order(f.x, f.y, Order::ST, Extreme::SERIES);
  CHECK(v.verdict == Verdict::FAILS);
  witnesses_reproduce(v, f.x, f.y);
  const OrderVerdict w = check_order(f.y, f.x, Order::ST, Extreme::SERIES);
  CHECK(w.verdict == Verdict::FAILS);
  witnesses_reproduce(w, f.y, f.x);
}

TEST_CASE("crossing hazards fail hr with both formulations") {
  const FigureSpec f = figure_spec("F2a");
  const OrderVerdict v = check_order(f.x, f.y, Order::HR, Extreme::SERIES);
  CHECK(v.verdict == Verdict::FAILS);
  CHECK(v.ratio_verdict == Verdict::FAILS);
  CHECK(v.pointwise_verdict == Verdict::FAILS);
  witnesses_reproduce(v, f.x, f.y);
}

TEST_CASE("crossing reversed hazards fail rhr") {
  const FigureSpec f = figure_spec("F4b");
  const OrderVerdict v = check_order(f.x, f.y, Order::RHR, Extreme::PARALLEL);
  CHECK(v.verdict == Verdict::FAILS);
  witnesses_reproduce(v, f.x, f.y);
}

TEST_CASE("hr implies st on the same grid") {
  const Generator g = make_generator("sech_pow", {{"theta", 1.0}});
  const SystemModel x{kW, {0.2, 0.4, 0.6}, g}, y{kW, {0.35, 0.55, 0.95}, g};
  const GridSpec grid = default_order_grid(kW);
  const OrderVerdict hr = check_order(x, y, Order::HR, Extreme::SERIES, grid);
  REQUIRE(hr.verdict == Verdict::HOLDS);
  CHECK(check_order(x, y, Order::ST, Extreme::SERIES, grid).verdict != Verdict::FAILS);
}

TEST_CASE("shocked systems") {
  const Generator g = make_generator("clayton", {{"a", 0.5}});
  const SystemModel x{kW, {0.2, 0.4, 0.6}, g}, y{kW, {0.35, 0.55, 0.95}, g};
  const ShockedSystem sx{x, {0.5, 0.8, 0.9}}, sy{y, {0.9, 0.9, 0.9}};
  CHECK(check_order(sx, sy, Order::ST, Extreme::SERIES).verdict == Verdict::HOLDS);
  CHECK(check_order(sy, sx, Order::ST, Extreme::SERIES).verdict == Verdict::FAILS);
  CHECK_THROWS_AS(check_order(sx, sy, Order::ST, Extreme::PARALLEL), std::invalid_argument);
}

TEST_CASE("fully saturated grid is inconclusive") {
  const SystemModel m{kW, {1.0, 2.0}, make_generator("independence")};
  GridSpec g;
  g.lo = 50;
  g.hi = 60;
  g.count = 10;
  g.log_spaced = false;
  CHECK(check_order(m, m, Order::ST, Extreme::SERIES, g).verdict == Verdict::INCONCLUSIVE);
}

TEST_CASE("names") {
  CHECK(order_from_string("RHR") == Order::RHR);
  CHECK(extreme_from_string("PARALLEL") == Extreme::PARALLEL);
  CHECK_THROWS(order_from_string("LR"));
  CHECK_THROWS(extreme_from_string("middle"));
  const GridSpec g = default_order_grid(kW);
  CHECK(g.count == 400);
  CHECK(g.lo == doctest::Approx(kW.quantile(0.0005)));
  CHECK(g.hi == doctest::Approx(kW.quantile(0.9995)));
}
