#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "infodesign/goal.hpp"
#include "infodesign/linprog.hpp"
#include "infodesign/mechanism.hpp"
#include "infodesign/prior.hpp"

namespace infodesign {

// Prior discretized into equiprobable quantile cells, each represented by its
// conditional mean. The discretized distribution is a mean-preserving
// contraction of the prior, so any value computed on it is a valid lower
// bound for the continuous problem.
struct DiscretizedInstance {
  std::vector<double> theta;  // cell conditional means
  std::vector<double> prob;   // cell probabilities (all 1/grid)
  std::vector<Interval> beliefs;
};

inline DiscretizedInstance discretize(const Prior& prior, std::size_t grid,
                                      std::vector<Interval> beliefs) {
  if (grid < 2) throw std::domain_error("discretize: grid must be >= 2");
  DiscretizedInstance inst;
  inst.beliefs = std::move(beliefs);
  inst.theta.resize(grid);
  inst.prob.assign(grid, 1.0 / static_cast<double>(grid));
  double prev = 0.0;
  for (std::size_t g = 0; g < grid; ++g) {
    double s = static_cast<double>(g + 1) / static_cast<double>(grid);
    double cur = prior.integrated_quantile(s);
    inst.theta[g] = (cur - prev) * static_cast<double>(grid);
    prev = cur;
  }
  return inst;
}

struct OracleResult {
  double value = 0.0;
  SignallingMechanism table;
};

// Direct-mechanism LP on the discretized prior: one variable z_{g,i} per
// (cell, constrained signal), row sums bounded by the cell mass, and each
// constrained signal's posterior mean sandwiched in its belief interval.
// Signal K+1 is the unconstrained remainder and needs no variables.
inline OracleResult oracle_value(const DiscretizedInstance& inst) {
  const std::size_t G = inst.theta.size();
  const std::size_t K = inst.beliefs.size();
  OracleResult res;
  if (K == 0) {
    res.value = 0.0;
    res.table = SignallingMechanism::table(inst.theta, inst.prob,
                                           std::vector<std::vector<double>>(G, {1.0}));
    return res;
  }

  LpProblem lp;
  const std::size_t nvars = G * K;  // z[g*K + i]
  lp.objective.assign(nvars, 1.0);
  lp.lower.assign(nvars, 0.0);
  lp.upper.resize(nvars);
  for (std::size_t g = 0; g < G; ++g) {
    for (std::size_t i = 0; i < K; ++i) lp.upper[g * K + i] = inst.prob[g];
  }
  if (K >= 2) {
    for (std::size_t g = 0; g < G; ++g) {
      std::vector<double> row(nvars, 0.0);
      for (std::size_t i = 0; i < K; ++i) row[g * K + i] = 1.0;
      lp.ineq_lhs.push_back(std::move(row));
      lp.ineq_rhs.push_back(inst.prob[g]);
    }
  }
  for (std::size_t i = 0; i < K; ++i) {
    std::vector<double> lo_row(nvars, 0.0), hi_row(nvars, 0.0);
    for (std::size_t g = 0; g < G; ++g) {
      lo_row[g * K + i] = inst.beliefs[i].lo - inst.theta[g];
      hi_row[g * K + i] = inst.theta[g] - inst.beliefs[i].hi;
    }
    lp.ineq_lhs.push_back(std::move(lo_row));
    lp.ineq_rhs.push_back(0.0);
    lp.ineq_lhs.push_back(std::move(hi_row));
    lp.ineq_rhs.push_back(0.0);
  }

  LpSolution sol = solve(lp);
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("oracle LP did not solve (uninformative point is always feasible)");
  }
  res.value = sol.value;

  std::vector<std::vector<double>> rows(G, std::vector<double>(K + 1, 0.0));
  for (std::size_t g = 0; g < G; ++g) {
    double used = 0.0;
    for (std::size_t i = 0; i < K; ++i) {
      double z = sol.primal[g * K + i];
      if (z < 0.0) z = 0.0;
      rows[g][i] = z / inst.prob[g];
      used += rows[g][i];
    }
    rows[g][K] = used < 1.0 ? 1.0 - used : 0.0;
  }
  res.table = SignallingMechanism::table(inst.theta, inst.prob, std::move(rows));
  return res;
}

}  // namespace infodesign
