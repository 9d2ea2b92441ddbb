#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "infodesign/harness.hpp"

using namespace infodesign;

TEST_CASE("evaluate_stateless") {
  Prior u10 = Prior::uniform(0, 10);
  // uninformative with the mean inside
  DirectMechanism uninf = to_direct(benchmark_noinfo(u10), u10);
  CHECK(evaluate_stateless(uninf, {{4.0, 6.0}}).value == doctest::Approx(1.0));
  CHECK(evaluate_stateless(uninf, {{8.0, 10.0}}).value == doctest::Approx(0.0));
  // R3 design on Unif[0,1], beliefs [0,0.25] evaluates to its own V*
  Prior u01 = Prior::uniform(0, 1);
  StatelessDesign d = design(u01, {{0.0, 0.25}});
  CHECK(evaluate_stateless(d.direct, {{0.0, 0.25}}).value ==
        doctest::Approx(d.value).epsilon(1e-9));
}

TEST_CASE("fullinfo value") {
  Prior u10 = Prior::uniform(0, 10);
  CHECK(fullinfo_value_stateless(u10, {{8.0, 10.0}}) == doctest::Approx(0.2));
  CHECK(fullinfo_value_stateless(u10, {{0.0, 10.0}}) == doctest::Approx(1.0));
  CHECK(fullinfo_value_stateless(u10, {{2.0, 3.0}, {7.0, 8.0}}) == doctest::Approx(0.2));
}

TEST_CASE("evaluate_stateful_mech") {
  StatefulScenario s({0.4, 0.6, 1.0}, {0.3, 0.3, 0.4}, {0.5, 0.9, 1.2});
  // uninformative table: single signal with mean mu = 0.7
  std::vector<std::vector<double>> uninf(3, std::vector<double>(1, 1.0));
  EvaluationReport rep = evaluate_stateful_mech(uninf, s);
  CHECK(rep.value == doctest::Approx(0.300));
  // zero-mass signal column is skipped without dividing by zero
  std::vector<std::vector<double>> with_zero = {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
  CHECK(evaluate_stateful_mech(with_zero, s).value == doctest::Approx(0.300));
}

TEST_CASE("trial determinism") {
  ExperimentConfig cfg;
  cfg.trials = 3;
  cfg.seed = 42;
  TrialResult a = run_trial(cfg, 0.5, 10, 2);
  TrialResult b = run_trial(cfg, 0.5, 10, 2);
  CHECK(a.v_opt == b.v_opt);
  CHECK(a.v_noinfo == b.v_noinfo);
  CHECK(a.v_fullinfo == b.v_fullinfo);
  CHECK(a.mc_opt == b.mc_opt);
  // per-trial dominance
  CHECK(a.v_opt >= a.v_noinfo - 1e-12);
  CHECK(a.v_opt >= a.v_fullinfo - 1e-12);
}

TEST_CASE("sweep endpoints and CSV shape") {
  ExperimentConfig cfg;
  cfg.trials = 10;
  cfg.seed = 7;
  auto rows = run_capacity_sweep(cfg);
  REQUIRE(rows.size() == 21);  // default grid 0..1 step 0.05
  CHECK(rows.front().b == doctest::Approx(0.0));
  CHECK(rows.back().b == doctest::Approx(1.0));
  for (double v : {rows.front().v_noinfo_analytic, rows.front().v_fullinfo_analytic,
                   rows.front().v_opt_analytic, rows.front().v_noinfo_mc,
                   rows.front().v_fullinfo_mc, rows.front().v_opt_mc}) {
    CHECK(v == doctest::Approx(1.0));
  }
  for (double v : {rows.back().v_noinfo_analytic, rows.back().v_fullinfo_analytic,
                   rows.back().v_opt_analytic, rows.back().v_noinfo_mc, rows.back().v_fullinfo_mc,
                   rows.back().v_opt_mc}) {
    CHECK(v == doctest::Approx(0.0));
  }

  std::ostringstream csv1, csv2;
  write_sweep_csv(csv1, rows, cfg);
  write_sweep_csv(csv2, run_capacity_sweep(cfg), cfg);
  CHECK(csv1.str() == csv2.str());  // byte-identical on same seed
  CHECK(csv1.str().rfind("b,v_noinfo_analytic,", 0) == 0);
}

TEST_CASE("sweep validation") {
  ExperimentConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS((void)run_capacity_sweep(cfg), std::invalid_argument);
  cfg.trials = 1;
  cfg.b_grid = {0.5, 1.2};
  CHECK_THROWS_AS((void)run_capacity_sweep(cfg), std::invalid_argument);
}

TEST_CASE("small sweep dominance and MC sanity") {
  ExperimentConfig cfg;
  cfg.trials = 200;
  cfg.seed = 3;
  cfg.b_grid = {0.25, 0.5, 0.75};
  auto rows = run_capacity_sweep(cfg);
  for (const SweepRow& r : rows) {
    CHECK(r.v_opt_analytic >= r.v_noinfo_analytic - 1e-9);
    CHECK(r.v_opt_analytic >= r.v_fullinfo_analytic - 1e-9);
    // MC within 4 binomial sigma of analytic
    double n = 200.0;
    auto close = [&](double mc, double an) {
      double sigma = std::sqrt(std::max(an * (1.0 - an), 1e-6) / n);
      CHECK(std::abs(mc - an) <= 4.0 * sigma + 1e-9);
    };
    close(r.v_noinfo_mc, r.v_noinfo_analytic);
    close(r.v_fullinfo_mc, r.v_fullinfo_analytic);
    close(r.v_opt_mc, r.v_opt_analytic);
  }
}
