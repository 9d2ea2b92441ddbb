#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "infodesign/equilibrium.hpp"
#include "infodesign/linprog.hpp"

namespace infodesign {

// Discrete states nu_1 < .. < nu_N with probabilities p_j and compliance
// thresholds gamma_j (minimal posterior mean at which the equilibrium meets
// state j's capacity floor), strictly increasing.
struct StatefulScenario {
  std::vector<double> states;  // nu_j
  std::vector<double> probs;   // p_j
  std::vector<double> gammas;  // gamma_j

  StatefulScenario(std::vector<double> nu, std::vector<double> p, std::vector<double> gamma)
      : states(std::move(nu)), probs(std::move(p)), gammas(std::move(gamma)) {
    validate();
  }

  // Derive gammas from capacity floors b_j via the equilibrium threshold map.
  static StatefulScenario from_capacities(std::vector<double> nu, std::vector<double> p,
                                          const std::vector<double>& b, const Population& pop,
                                          const CostModel& cost) {
    std::vector<double> gamma;
    gamma.reserve(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j > 0 && b[j] <= b[j - 1]) {
        throw std::invalid_argument("stateful scenario: capacity floors must be strictly increasing");
      }
      gamma.push_back(gamma_threshold(pop, cost, b[j]));
    }
    return StatefulScenario(std::move(nu), std::move(p), std::move(gamma));
  }

  std::size_t size() const { return states.size(); }

  double mean() const {
    double mu = 0.0;
    for (std::size_t j = 0; j < size(); ++j) mu += probs[j] * states[j];
    return mu;
  }

 private:
  void validate() const {
    const std::size_t N = states.size();
    if (N == 0 || probs.size() != N || gammas.size() != N) {
      throw std::invalid_argument("stateful scenario: inconsistent dimensions");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      if (states[j] <= 0.0 || (j > 0 && states[j] <= states[j - 1])) {
        throw std::invalid_argument("stateful scenario: states must be positive and increasing");
      }
      if (probs[j] < 0.0) throw std::invalid_argument("stateful scenario: negative probability");
      if (j > 0 && gammas[j] <= gammas[j - 1]) {
        throw std::invalid_argument("stateful scenario: gammas must be strictly increasing");
      }
      total += probs[j];
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw std::invalid_argument("stateful scenario: probabilities must sum to 1 within 1e-12");
    }
  }
};

struct StatefulDesign {
  std::vector<std::vector<double>> z;       // z[j][i], joint probabilities, i in [N+1]
  std::vector<std::vector<double>> kernel;  // g_{nu_j}(i) = z[j][i] / p_j
  double value = 0.0;
  std::vector<double> conditionals;  // V_j
};

// The stateful LP: variables z_{ji}, objective counting mass on signals
// i >= j+1, per-state row sums fixed at p_j and each signal's posterior mean
// sandwiched between gamma_{i-1} and gamma_i. The gamma_0 = 0 lower row and
// the gamma_{N+1} = inf upper row are vacuous and omitted.
inline LpProblem build_lp(const StatefulScenario& s,
                          const std::vector<double>* objective_weights = nullptr) {
  const std::size_t N = s.size();
  const std::size_t S = N + 1;  // signals
  LpProblem lp;
  const std::size_t nvars = N * S;  // z[j*S + i]
  lp.objective.assign(nvars, 0.0);
  lp.lower.assign(nvars, 0.0);
  lp.upper.resize(nvars);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t i = 0; i < S; ++i) {
      lp.upper[j * S + i] = s.probs[j];
      if (i >= j + 1) {
        if (objective_weights) {
          double w = (*objective_weights)[j];
          if (w != 0.0 && s.probs[j] <= 0.0) {
            throw std::domain_error("weighted objective: positive weight on zero-probability state");
          }
          lp.objective[j * S + i] = s.probs[j] > 0.0 ? w / s.probs[j] : 0.0;
        } else {
          lp.objective[j * S + i] = 1.0;
        }
      }
    }
  }
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<double> row(nvars, 0.0);
    for (std::size_t i = 0; i < S; ++i) row[j * S + i] = 1.0;
    lp.eq_lhs.push_back(std::move(row));
    lp.eq_rhs.push_back(s.probs[j]);
  }
  for (std::size_t i = 0; i < S; ++i) {
    if (i >= 1) {  // gamma_{i-1} * sum_j z_ji <= sum_j nu_j z_ji
      std::vector<double> row(nvars, 0.0);
      for (std::size_t j = 0; j < N; ++j) row[j * S + i] = s.gammas[i - 1] - s.states[j];
      lp.ineq_lhs.push_back(std::move(row));
      lp.ineq_rhs.push_back(0.0);
    }
    if (i < N) {  // sum_j nu_j z_ji <= gamma_i * sum_j z_ji
      std::vector<double> row(nvars, 0.0);
      for (std::size_t j = 0; j < N; ++j) row[j * S + i] = s.states[j] - s.gammas[i];
      lp.ineq_lhs.push_back(std::move(row));
      lp.ineq_rhs.push_back(0.0);
    }
  }
  return lp;
}

namespace stateful_detail {

inline StatefulDesign from_solution(const StatefulScenario& s, const LpSolution& sol) {
  const std::size_t N = s.size();
  const std::size_t S = N + 1;
  StatefulDesign d;
  d.z.assign(N, std::vector<double>(S, 0.0));
  d.kernel.assign(N, std::vector<double>(S, 0.0));
  d.conditionals.assign(N, 0.0);
  d.value = sol.value;
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t i = 0; i < S; ++i) {
      double z = sol.primal[j * S + i];
      if (z < 0.0) z = 0.0;
      d.z[j][i] = z;
      d.kernel[j][i] = s.probs[j] > 0.0 ? z / s.probs[j] : 0.0;
      if (i >= j + 1) d.conditionals[j] += d.kernel[j][i];
    }
  }
  return d;
}

}  // namespace stateful_detail

inline StatefulDesign design_stateful(const StatefulScenario& s) {
  LpSolution sol = solve(build_lp(s));
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("stateful LP did not solve (uninformative point is always feasible)");
  }
  return stateful_detail::from_solution(s, sol);
}

inline StatefulDesign design_weighted(const StatefulScenario& s,
                                      const std::vector<double>& weights) {
  if (weights.size() != s.size()) {
    throw std::invalid_argument("design_weighted: weight count mismatch");
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("design_weighted: weights must be finite and non-negative");
    }
  }
  LpSolution sol = solve(build_lp(s, &weights));
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("stateful LP did not solve");
  }
  return stateful_detail::from_solution(s, sol);
}

struct StatefulBenchmarks {
  double no_info = 0.0;
  double full_info = 0.0;
  std::vector<double> no_info_conditionals;
  std::vector<double> full_info_conditionals;
};

inline StatefulBenchmarks benchmarks_stateful(const StatefulScenario& s) {
  StatefulBenchmarks b;
  const double mu = s.mean();
  b.no_info_conditionals.resize(s.size());
  b.full_info_conditionals.resize(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    b.no_info_conditionals[j] = s.gammas[j] <= mu ? 1.0 : 0.0;
    b.full_info_conditionals[j] = s.states[j] >= s.gammas[j] ? 1.0 : 0.0;
    b.no_info += s.probs[j] * b.no_info_conditionals[j];
    b.full_info += s.probs[j] * b.full_info_conditionals[j];
  }
  return b;
}

}  // namespace infodesign
