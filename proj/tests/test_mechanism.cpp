#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "infodesign/mechanism.hpp"

using namespace infodesign;

namespace {

void check_bayes_plausible(const DirectMechanism& d, double mu) {
  double q = 0.0, qm = 0.0;
  for (const DirectSignal& s : d) {
    q += s.q;
    qm += s.q * s.theta;
  }
  CHECK(q == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(qm == doctest::Approx(mu).epsilon(1e-8));
}

}  // namespace

TEST_CASE("partition to direct") {
  Prior u = Prior::uniform(0, 1);
  DirectMechanism d = to_direct(SignallingMechanism::partition({0.0, 0.5, 1.0}), u);
  REQUIRE(d.size() == 2);
  CHECK(d[0].q == doctest::Approx(0.5));
  CHECK(d[0].theta == doctest::Approx(0.25));
  CHECK(d[1].q == doctest::Approx(0.5));
  CHECK(d[1].theta == doctest::Approx(0.75));
  check_bayes_plausible(d, u.mean());
}

TEST_CASE("uninformative") {
  Prior u = Prior::uniform(0, 10);
  DirectMechanism d = to_direct(SignallingMechanism::uninformative(10.0), u);
  REQUIRE(d.size() == 1);
  CHECK(d[0].q == doctest::Approx(1.0));
  CHECK(d[0].theta == doctest::Approx(5.0));
}

TEST_CASE("mixture to direct") {
  Prior u = Prior::uniform(0, 10);
  DirectMechanism d = to_direct(SignallingMechanism::mixture(5.0, 1.0, 0.0), u);
  REQUIRE(d.size() == 2);
  CHECK(d[0].q == doctest::Approx(0.5));
  CHECK(d[0].theta == doctest::Approx(2.5));
  CHECK(d[1].q == doctest::Approx(0.5));
  CHECK(d[1].theta == doctest::Approx(7.5));
  check_bayes_plausible(d, u.mean());

  // uninformative mixture collapses means to mu but keeps both signals
  d = to_direct(SignallingMechanism::mixture(4.0, 0.3, 0.3), u);
  for (const DirectSignal& s : d) CHECK(s.theta == doctest::Approx(5.0));
  check_bayes_plausible(d, u.mean());

  // lambda = alpha = 0: signal 1 never fires and is dropped
  d = to_direct(SignallingMechanism::mixture(4.0, 0.0, 0.0), u);
  REQUIRE(d.size() == 1);
  CHECK(d[0].q == doctest::Approx(1.0));
}

TEST_CASE("table to direct") {
  SignallingMechanism t = SignallingMechanism::table(
      {0.4, 0.6, 1.0}, {0.3, 0.3, 0.4},
      {{1.0, 0.0}, {0.5, 0.5}, {0.0, 1.0}});
  Prior d3 = Prior::discrete({0.4, 0.6, 1.0}, {0.3, 0.3, 0.4});
  DirectMechanism d = to_direct(t, d3);
  REQUIRE(d.size() == 2);
  CHECK(d[0].q == doctest::Approx(0.45));
  CHECK(d[0].theta == doctest::Approx((0.3 * 0.4 + 0.15 * 0.6) / 0.45));
  check_bayes_plausible(d, d3.mean());
}

TEST_CASE("zero-probability signals dropped") {
  Prior u = Prior::uniform(2, 8);
  // threshold below the support start gives an empty first cell
  DirectMechanism d = to_direct(SignallingMechanism::partition({0.0, 1.0, 8.0}), u);
  REQUIRE(d.size() == 1);
  CHECK(d[0].theta == doctest::Approx(5.0));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(SignallingMechanism::partition({0.0, 0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(SignallingMechanism::mixture(1.0, 1.5, 0.0), std::invalid_argument);
  SignallingMechanism bad = SignallingMechanism::table({1.0}, {1.0, 0.0}, {{1.0}});
  CHECK_THROWS_AS((void)to_direct(bad, Prior::uniform(0, 2)), std::invalid_argument);
}
