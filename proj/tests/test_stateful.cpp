#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "infodesign/harness.hpp"
#include "infodesign/stateful.hpp"

using namespace infodesign;

namespace {

StatefulScenario paper_scenario() {
  return StatefulScenario({0.4, 0.6, 1.0}, {0.3, 0.3, 0.4}, {0.5, 0.9, 1.2});
}

}  // namespace

TEST_CASE("build_lp dimensions") {
  // N=1: two variables, objective only on z_{12}
  StatefulScenario s1({0.5}, {1.0}, {0.4});
  LpProblem lp = build_lp(s1);
  CHECK(lp.objective.size() == 2);
  CHECK(lp.objective[0] == doctest::Approx(0.0));
  CHECK(lp.objective[1] == doctest::Approx(1.0));
  CHECK(lp.eq_lhs.size() == 1);

  // N=3: 12 variables, 3 equalities, 6 finite mean rows
  LpProblem lp3 = build_lp(paper_scenario());
  CHECK(lp3.objective.size() == 12);
  CHECK(lp3.eq_lhs.size() == 3);
  CHECK(lp3.ineq_lhs.size() == 6);
}

TEST_CASE("paper instance") {
  StatefulDesign d = design_stateful(paper_scenario());
  CHECK(d.value == doctest::Approx(0.425).epsilon(1e-6));
  CHECK(d.conditionals[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(d.conditionals[1] == doctest::Approx(0.41667).epsilon(5e-4));
  CHECK(d.conditionals[2] == doctest::Approx(0.0));
  // solution invariants: row sums and mean sandwiches
  StatefulScenario s = paper_scenario();
  for (std::size_t j = 0; j < 3; ++j) {
    double sum = 0.0;
    for (double z : d.z[j]) sum += z;
    CHECK(sum == doctest::Approx(s.probs[j]).epsilon(1e-8));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    double q = 0.0, num = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
      q += d.z[j][i];
      num += s.states[j] * d.z[j][i];
    }
    if (q <= 1e-12) continue;
    double mean = num / q;
    if (i >= 1) CHECK(mean >= s.gammas[i - 1] - 1e-8);
    if (i < 3) CHECK(mean <= s.gammas[i] + 1e-8);
  }
}

TEST_CASE("benchmarks on the paper instance") {
  StatefulBenchmarks b = benchmarks_stateful(paper_scenario());
  CHECK(b.no_info == doctest::Approx(0.300));
  CHECK(b.full_info == doctest::Approx(0.000));
}

TEST_CASE("degenerate extremes") {
  // every threshold below the lowest state: full compliance for free
  StatefulScenario easy({0.4, 0.6, 1.0}, {0.3, 0.3, 0.4}, {0.1, 0.2, 0.3});
  CHECK(design_stateful(easy).value == doctest::Approx(1.0).epsilon(1e-8));
  // gamma_1 beyond the highest state: nothing can comply
  StatefulScenario hard({0.4, 0.6, 1.0}, {0.3, 0.3, 0.4}, {1.1, 1.2, 1.3});
  CHECK(design_stateful(hard).value == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("weighted objective variants") {
  StatefulScenario s = paper_scenario();
  StatefulDesign unweighted = design_stateful(s);
  StatefulDesign same = design_weighted(s, {0.3, 0.3, 0.4});
  CHECK(same.value == doctest::Approx(unweighted.value).epsilon(1e-8));
  CHECK(design_weighted(s, {0.0, 0.0, 1.0}).value == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(design_weighted(s, {1.0, 0.0, 0.0}).value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS((void)design_weighted(s, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS((void)design_weighted(s, {-1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("dominance over benchmarks") {
  std::vector<StatefulScenario> cases = {
      paper_scenario(),
      StatefulScenario({0.2, 0.5, 0.8, 1.4}, {0.25, 0.25, 0.25, 0.25}, {0.3, 0.6, 1.0, 1.5}),
      StatefulScenario({1.0, 2.0}, {0.9, 0.1}, {0.5, 3.0}),
  };
  for (const auto& s : cases) {
    StatefulDesign d = design_stateful(s);
    StatefulBenchmarks b = benchmarks_stateful(s);
    CHECK(d.value >= b.no_info - 1e-9);
    CHECK(d.value >= b.full_info - 1e-9);
    // rows are probability vectors
    for (const auto& row : d.kernel) {
      double sum = 0.0;
      for (double g : row) {
        CHECK(g >= -1e-8);
        sum += g;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
    }
    // independent evaluator reproduces the LP objective
    EvaluationReport rep = evaluate_stateful_mech(d.kernel, s);
    CHECK(rep.value == doctest::Approx(d.value).epsilon(1e-9));
  }
}

TEST_CASE("from_capacities derives gammas through the equilibrium") {
  Population pop({0.5, 0.5}, {2.0, 1.0});
  CostModel cost(1.0, 1.0, 0.0, 1.0);
  // b=0.5: group 2 priced out at theta=2; b=0.75: m = 2/theta <= 0.25 at 8
  StatefulScenario s =
      StatefulScenario::from_capacities({1.0, 5.0}, {0.5, 0.5}, {0.5, 0.75}, pop, cost);
  CHECK(s.gammas[0] == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(s.gammas[1] == doctest::Approx(8.0).epsilon(1e-7));
  CHECK_THROWS_AS(StatefulScenario::from_capacities({1.0, 5.0}, {0.5, 0.5}, {0.75, 0.5}, pop, cost),
                  std::invalid_argument);
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(StatefulScenario({0.6, 0.4}, {0.5, 0.5}, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(StatefulScenario({0.4, 0.6}, {0.5, 0.6}, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(StatefulScenario({0.4, 0.6}, {0.5, 0.5}, {0.2, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(StatefulScenario({0.4, 0.6}, {0.5, 0.5}, {0.2}), std::invalid_argument);
}
