#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace infodesign {

enum class LpStatus { Optimal, Infeasible, Unbounded };

// maximize c^T z  s.t.  G z <= h,  A z = b,  lower <= z <= upper.
// Lower bounds must be finite; upper bounds may be +inf.
struct LpProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> ineq_lhs;
  std::vector<double> ineq_rhs;
  std::vector<std::vector<double>> eq_lhs;
  std::vector<double> eq_rhs;
  std::vector<double> lower;
  std::vector<double> upper;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  std::vector<double> primal;
};

namespace lp_detail {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivTol = 1e-9;

// Bounded-variable primal simplex on a dense tableau with Bland's rule.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), t_(rows, std::vector<double>(cols, 0.0)), xb_(rows, 0.0),
        basis_(rows, 0), span_(cols, kInf), at_upper_(cols, false), basic_(cols, false) {}

  std::size_t m_, n_;
  std::vector<std::vector<double>> t_;  // B^{-1} * M
  std::vector<double> xb_;              // basic variable values
  std::vector<std::size_t> basis_;      // column basic in each row
  std::vector<double> span_;            // upper - lower in shifted space
  std::vector<bool> at_upper_;          // status of nonbasic columns
  std::vector<bool> basic_;

  void set_basic(std::size_t row, std::size_t col, double value) {
    basis_[row] = col;
    basic_[col] = true;
    xb_[row] = value;
  }

  // maximize cost over the current feasible region; returns false on
  // unboundedness. Reduced costs are maintained in d_. Pricing is Dantzig
  // (steepest reduced cost, lowest index on ties) until a degenerate stall,
  // then Bland's rule guarantees termination.
  bool run(const std::vector<double>& cost) {
    d_ = cost;
    for (std::size_t i = 0; i < m_; ++i) {
      double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) d_[j] -= cb * t_[i][j];
    }
    const std::size_t stall_limit = 10 * (m_ + n_) + 100;
    std::size_t stalled = 0;
    for (;;) {
      const bool bland = stalled > stall_limit;
      std::size_t enter = n_;
      double best_d = kPivTol;
      for (std::size_t j = 0; j < n_; ++j) {
        if (basic_[j] || span_[j] <= 0.0) continue;
        double gain = at_upper_[j] ? -d_[j] : d_[j];
        if (gain > best_d) {
          enter = j;
          if (bland) break;  // first eligible index
          best_d = gain;
        }
      }
      if (enter == n_) return true;
      double sigma = at_upper_[enter] ? -1.0 : 1.0;
      double best = span_[enter];
      std::size_t leave_row = m_;
      bool leave_at_upper = false;
      for (std::size_t i = 0; i < m_; ++i) {
        double a = sigma * t_[i][enter];
        double limit = kInf;
        bool to_upper = false;
        if (a > kPivTol) {
          limit = xb_[i] / a;
        } else if (a < -kPivTol) {
          double sp = span_[basis_[i]];
          if (sp == kInf) continue;
          limit = (xb_[i] - sp) / a;
          to_upper = true;
        } else {
          continue;
        }
        if (limit < best - 1e-12 ||
            (limit < best + 1e-12 && leave_row != m_ && basis_[i] < basis_[leave_row])) {
          best = std::max(limit, 0.0);
          leave_row = i;
          leave_at_upper = to_upper;
        }
      }
      if (best == kInf) return false;  // unbounded
      stalled = best > kPivTol ? 0 : stalled + 1;
      if (leave_row == m_) {
        // bound flip, basis unchanged
        for (std::size_t i = 0; i < m_; ++i) xb_[i] -= best * sigma * t_[i][enter];
        at_upper_[enter] = !at_upper_[enter];
        continue;
      }
      double enter_value = (at_upper_[enter] ? span_[enter] : 0.0) + sigma * best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (i != leave_row) xb_[i] -= best * sigma * t_[i][enter];
      }
      std::size_t leaving = basis_[leave_row];
      basic_[leaving] = false;
      at_upper_[leaving] = leave_at_upper;
      pivot(leave_row, enter);
      basic_[enter] = true;
      at_upper_[enter] = false;
      basis_[leave_row] = enter;
      xb_[leave_row] = enter_value;
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    double piv = t_[row][col];
    double inv = 1.0 / piv;
    for (std::size_t j = 0; j < n_; ++j) t_[row][j] *= inv;
    t_[row][col] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      double f = t_[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] -= f * t_[row][j];
      t_[i][col] = 0.0;
    }
    double f = d_[col];
    if (f != 0.0) {
      for (std::size_t j = 0; j < n_; ++j) d_[j] -= f * t_[row][j];
      d_[col] = 0.0;
    }
  }

  // value of column in the current point
  double column_value(std::size_t col) const {
    if (basic_[col]) {
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] == col) return xb_[i];
      }
    }
    return at_upper_[col] ? span_[col] : 0.0;
  }

 private:
  std::vector<double> d_;
};

}  // namespace lp_detail

inline LpSolution solve(const LpProblem& p) {
  using namespace lp_detail;
  const std::size_t n = p.objective.size();
  const std::size_t mI = p.ineq_lhs.size();
  const std::size_t mE = p.eq_lhs.size();
  const std::size_t m = mI + mE;
  if (p.lower.size() != n || p.upper.size() != n) {
    throw std::invalid_argument("lp: bounds size mismatch");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(p.lower[j]) || p.lower[j] > p.upper[j]) {
      throw std::invalid_argument("lp: bounds must satisfy finite lower <= upper");
    }
  }

  // Shift variables by their lower bounds; slack per inequality; artificial
  // per row whose canonical column is unavailable.
  std::vector<std::vector<double>> rows(m, std::vector<double>(n, 0.0));
  std::vector<double> rhs(m, 0.0);
  for (std::size_t r = 0; r < mI; ++r) {
    rows[r] = p.ineq_lhs[r];
    rhs[r] = p.ineq_rhs[r];
  }
  for (std::size_t r = 0; r < mE; ++r) {
    rows[mI + r] = p.eq_lhs[r];
    rhs[mI + r] = p.eq_rhs[r];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) rhs[r] -= rows[r][j] * p.lower[j];
  }
  std::vector<bool> negated(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    if (rhs[r] < 0.0) {
      negated[r] = true;
      rhs[r] = -rhs[r];
      for (double& a : rows[r]) a = -a;
    }
  }
  std::vector<std::size_t> art_rows;  // rows needing an artificial basis column
  for (std::size_t r = 0; r < m; ++r) {
    if (r >= mI || negated[r]) art_rows.push_back(r);
  }
  const std::size_t n_all = n + mI + art_rows.size();

  Tableau tab(m, n_all);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) tab.t_[r][j] = rows[r][j];
  }
  for (std::size_t r = 0; r < mI; ++r) tab.t_[r][n + r] = negated[r] ? -1.0 : 1.0;
  for (std::size_t a = 0; a < art_rows.size(); ++a) tab.t_[art_rows[a]][n + mI + a] = 1.0;
  for (std::size_t j = 0; j < n; ++j) tab.span_[j] = p.upper[j] - p.lower[j];

  // starting basis: slack where it has coefficient +1, artificial elsewhere
  std::vector<bool> is_art(n_all, false);
  {
    std::size_t a = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (r < mI && !negated[r]) {
        tab.set_basic(r, n + r, rhs[r]);
      } else {
        tab.set_basic(r, n + mI + a, rhs[r]);
        is_art[n + mI + a] = true;
        ++a;
      }
    }
  }

  LpSolution sol;
  if (!art_rows.empty()) {
    std::vector<double> phase1(n_all, 0.0);
    for (std::size_t j = 0; j < n_all; ++j) {
      if (is_art[j]) phase1[j] = -1.0;
    }
    tab.run(phase1);  // bounded below by construction, cannot be unbounded
    double infeas = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (is_art[tab.basis_[i]]) infeas += tab.xb_[i];
    }
    if (infeas > 1e-7) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // pin artificials at zero for phase 2
    for (std::size_t j = 0; j < n_all; ++j) {
      if (is_art[j] && !tab.basic_[j]) {
        tab.span_[j] = 0.0;
        tab.at_upper_[j] = false;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_art[tab.basis_[i]]) continue;
      std::size_t piv_col = n_all;
      for (std::size_t j = 0; j < n; ++j) {
        if (!tab.basic_[j] && std::abs(tab.t_[i][j]) > kPivTol) {
          piv_col = j;
          break;
        }
      }
      if (piv_col == n_all) {
        tab.span_[tab.basis_[i]] = 0.0;  // redundant row, keep degenerate basic
        continue;
      }
      std::size_t leaving = tab.basis_[i];
      bool was_upper = tab.at_upper_[piv_col];
      double entering_value = was_upper ? tab.span_[piv_col] : 0.0;
      tab.pivot(i, piv_col);  // reduced costs recomputed at the next run()
      tab.basic_[leaving] = false;
      tab.at_upper_[leaving] = false;
      tab.span_[leaving] = 0.0;
      tab.basic_[piv_col] = true;
      tab.at_upper_[piv_col] = false;
      tab.basis_[i] = piv_col;
      tab.xb_[i] = entering_value;
    }
  }

  std::vector<double> phase2(n_all, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = p.objective[j];
  if (!tab.run(phase2)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.primal.resize(n);
  sol.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sol.primal[j] = p.lower[j] + tab.column_value(j);
    sol.value += p.objective[j] * sol.primal[j];
  }
  return sol;
}

}  // namespace infodesign
