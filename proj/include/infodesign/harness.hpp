#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "infodesign/equilibrium.hpp"
#include "infodesign/goal.hpp"
#include "infodesign/mechanism.hpp"
#include "infodesign/prior.hpp"
#include "infodesign/rng.hpp"
#include "infodesign/stateful.hpp"
#include "infodesign/stateless.hpp"

namespace infodesign {

struct EvaluationReport {
  double value = 0.0;
  std::vector<double> conditionals;
};

namespace harness_detail {

// Closed-interval membership with a small slack so designed posterior means
// sitting exactly on an endpoint are not dropped by rounding.
inline bool in_beliefs(double theta, const std::vector<Interval>& beliefs, double tol = 1e-7) {
  for (const Interval& iv : beliefs) {
    if (theta >= iv.lo - tol && theta <= iv.hi + tol) return true;
  }
  return false;
}

}  // namespace harness_detail

// V = sum_i q_i * 1{theta_i lands in a belief interval}.
inline EvaluationReport evaluate_stateless(const DirectMechanism& direct,
                                           const std::vector<Interval>& beliefs) {
  EvaluationReport rep;
  for (const DirectSignal& sig : direct) {
    if (harness_detail::in_beliefs(sig.theta, beliefs)) rep.value += sig.q;
  }
  return rep;
}

inline SignallingMechanism benchmark_noinfo(const Prior& prior) {
  return SignallingMechanism::uninformative(prior.high());
}

// Full information reveals theta itself: compliance probability is the prior
// mass of the belief intervals.
inline double fullinfo_value_stateless(const Prior& prior, const std::vector<Interval>& beliefs) {
  double v = 0.0;
  for (const Interval& iv : beliefs) {
    v += std::max(0.0, prior.cdf(iv.hi) - prior.cdf_left(iv.lo));
  }
  return std::min(v, 1.0);
}

// V_j recomputed from the signal table alone: posterior means via the
// discrete-prior Bayes update, compliance via theta_i >= gamma_j. Independent
// of the LP's own bookkeeping.
inline EvaluationReport evaluate_stateful_mech(const std::vector<std::vector<double>>& kernel,
                                               const StatefulScenario& s) {
  const std::size_t N = s.size();
  if (kernel.size() != N) throw std::invalid_argument("evaluate_stateful_mech: row count mismatch");
  const std::size_t S = kernel.front().size();
  EvaluationReport rep;
  rep.conditionals.assign(N, 0.0);
  for (std::size_t i = 0; i < S; ++i) {
    double q = 0.0, num = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      q += s.probs[j] * kernel[j][i];
      num += s.states[j] * s.probs[j] * kernel[j][i];
    }
    if (q <= 1e-15) continue;  // zero-mass signal
    double theta_i = num / q;
    for (std::size_t j = 0; j < N; ++j) {
      if (theta_i >= s.gammas[j] - 1e-9) rep.conditionals[j] += kernel[j][i];
    }
  }
  for (std::size_t j = 0; j < N; ++j) rep.value += s.probs[j] * rep.conditionals[j];
  return rep;
}

struct ExperimentConfig {
  std::size_t groups = 10;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::vector<double> b_grid;  // defaults to 0..1 step 0.05
  double benefit_high = 10.0;
  Prior prior = Prior::uniform(5.0, 20.0);
  CostModel cost;

  static std::vector<double> default_b_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 20; ++i) g.push_back(static_cast<double>(i) / 20.0);
    return g;
  }
};

struct SweepRow {
  double b = 0.0;
  double v_noinfo_analytic = 0.0;
  double v_fullinfo_analytic = 0.0;
  double v_opt_analytic = 0.0;
  double v_noinfo_mc = 0.0;
  double v_fullinfo_mc = 0.0;
  double v_opt_mc = 0.0;
};

struct TrialResult {
  double v_noinfo = 0.0, v_fullinfo = 0.0, v_opt = 0.0;
  bool mc_noinfo = false, mc_fullinfo = false, mc_opt = false;
};

namespace harness_detail {

inline Population sample_population(std::size_t groups, double benefit_high, CounterRng& rng) {
  // uniform on the simplex via exponential spacings
  std::vector<double> x(groups);
  double total = 0.0;
  for (double& xi : x) {
    xi = -std::log(1.0 - rng.uniform());
    total += xi;
  }
  for (double& xi : x) xi /= total;
  double drift = 1.0;
  for (std::size_t k = 0; k + 1 < groups; ++k) drift -= x[k];
  x.back() = drift;  // absorb rounding so the masses sum to 1 exactly

  std::vector<double> v(groups);
  for (double& vi : v) vi = rng.uniform(0.0, benefit_high);
  std::sort(v.begin(), v.end(), std::greater<>());
  for (std::size_t k = 1; k < groups; ++k) {
    if (v[k] >= v[k - 1]) v[k] = v[k - 1] - 1e-9;  // merge ties by perturbation
    if (v[k] <= 0.0) v[k] = v[k - 1] * 0.5;
  }
  return Population(std::move(x), std::move(v));
}

inline double partition_posterior_mean(const SignallingMechanism& mech, const Prior& prior,
                                       double theta_true) {
  for (std::size_t i = 1; i < mech.thresholds.size(); ++i) {
    if (theta_true <= mech.thresholds[i] || i + 1 == mech.thresholds.size()) {
      double Fa = prior.cdf(mech.thresholds[i - 1]);
      double Fb = prior.cdf(mech.thresholds[i]);
      if (Fb - Fa <= 1e-15) continue;
      return (prior.integrated_quantile(Fb) - prior.integrated_quantile(Fa)) / (Fb - Fa);
    }
  }
  return prior.mean();
}

// Draw a signal for the true theta and return the induced posterior mean.
inline double sample_posterior_mean(const SignallingMechanism& mech, const Prior& prior,
                                    double theta_true, CounterRng& rng) {
  switch (mech.kind) {
    case SignallingMechanism::Kind::MonotonePartition:
      return partition_posterior_mean(mech, prior, theta_true);
    case SignallingMechanism::Kind::PiecewiseMixture: {
      double p1 = theta_true <= mech.breakpoint ? mech.lambda_low : mech.alpha_high;
      if (rng.uniform() < p1) {
        return prior.delta(mech.alpha_high, mech.lambda_low, mech.breakpoint);
      }
      return prior.delta(1.0 - mech.alpha_high, 1.0 - mech.lambda_low, mech.breakpoint);
    }
    case SignallingMechanism::Kind::DiscreteTable: {
      // locate the state cell of theta_true, then draw a column
      std::size_t j = 0;
      while (j + 1 < mech.states.size() && mech.states[j + 1] <= theta_true) ++j;
      double u = rng.uniform();
      double acc = 0.0;
      for (std::size_t i = 0; i < mech.rows[j].size(); ++i) {
        acc += mech.rows[j][i];
        if (u < acc || i + 1 == mech.rows[j].size()) {
          double q = 0.0, num = 0.0;
          for (std::size_t jj = 0; jj < mech.states.size(); ++jj) {
            q += mech.state_probs[jj] * mech.rows[jj][i];
            num += mech.states[jj] * mech.state_probs[jj] * mech.rows[jj][i];
          }
          return q > 0.0 ? num / q : prior.mean();
        }
      }
      return prior.mean();
    }
  }
  return prior.mean();
}

}  // namespace harness_detail

// One sweep trial: sample an instance, design the optimal mechanism and
// score it against the two benchmarks, analytically and by simulation.
inline TrialResult run_trial(const ExperimentConfig& cfg, double b, std::size_t b_index,
                             std::size_t trial) {
  CounterRng rng(cfg.seed, b_index, trial);
  Population pop = harness_detail::sample_population(cfg.groups, cfg.benefit_high, rng);
  double theta_true = cfg.prior.quantile(rng.uniform());

  std::vector<Interval> mass = intersect(pop, GoalSpec::capacity(b));
  std::vector<Interval> beliefs = belief_preimage(pop, cfg.cost, mass, cfg.prior.high());
  StatelessDesign opt = design(cfg.prior, beliefs);

  TrialResult r;
  r.v_opt = opt.value;
  r.v_noinfo = harness_detail::in_beliefs(cfg.prior.mean(), beliefs) ? 1.0 : 0.0;
  r.v_fullinfo = fullinfo_value_stateless(cfg.prior, beliefs);

  r.mc_noinfo = harness_detail::in_beliefs(cfg.prior.mean(), beliefs);
  r.mc_fullinfo = harness_detail::in_beliefs(theta_true, beliefs);
  double post = harness_detail::sample_posterior_mean(opt.mechanism, cfg.prior, theta_true, rng);
  r.mc_opt = harness_detail::in_beliefs(post, beliefs);
  return r;
}

inline std::vector<SweepRow> run_capacity_sweep(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  std::vector<double> grid = cfg.b_grid.empty() ? ExperimentConfig::default_b_grid() : cfg.b_grid;
  for (double b : grid) {
    if (b < 0.0 || b > 1.0) throw std::invalid_argument("sweep: b grid outside [0,1]");
  }
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    SweepRow row;
    row.b = grid[bi];
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      TrialResult r = run_trial(cfg, grid[bi], bi, t);
      row.v_noinfo_analytic += r.v_noinfo;
      row.v_fullinfo_analytic += r.v_fullinfo;
      row.v_opt_analytic += r.v_opt;
      row.v_noinfo_mc += r.mc_noinfo ? 1.0 : 0.0;
      row.v_fullinfo_mc += r.mc_fullinfo ? 1.0 : 0.0;
      row.v_opt_mc += r.mc_opt ? 1.0 : 0.0;
    }
    double n = static_cast<double>(cfg.trials);
    row.v_noinfo_analytic /= n;
    row.v_fullinfo_analytic /= n;
    row.v_opt_analytic /= n;
    row.v_noinfo_mc /= n;
    row.v_fullinfo_mc /= n;
    row.v_opt_mc /= n;
    rows.push_back(row);
  }
  return rows;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                            const ExperimentConfig& cfg) {
  os << "b,v_noinfo_analytic,v_fullinfo_analytic,v_opt_analytic,"
        "v_noinfo_mc,v_fullinfo_mc,v_opt_mc,trials,seed\n";
  char buf[256];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%zu,%llu\n", r.b,
                  r.v_noinfo_analytic, r.v_fullinfo_analytic, r.v_opt_analytic, r.v_noinfo_mc,
                  r.v_fullinfo_mc, r.v_opt_mc, cfg.trials,
                  static_cast<unsigned long long>(cfg.seed));
    os << buf;
  }
}

}  // namespace infodesign
