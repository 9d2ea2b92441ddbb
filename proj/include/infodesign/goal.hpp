#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "infodesign/equilibrium.hpp"

namespace infodesign {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Stateless goal set Y: either a capacity floor on the remote mass
// (||y|| >= b) or a general polytope {y : A y <= d}.
struct GoalSpec {
  enum class Kind { Capacity, Polytope };
  Kind kind = Kind::Capacity;
  double b = 0.0;
  std::vector<std::vector<double>> A;
  std::vector<double> d;

  static GoalSpec capacity(double floor) {
    if (floor < 0.0 || floor > 1.0) throw std::invalid_argument("capacity goal: b outside [0,1]");
    GoalSpec g;
    g.kind = Kind::Capacity;
    g.b = floor;
    return g;
  }

  static GoalSpec polytope(std::vector<std::vector<double>> A, std::vector<double> d) {
    if (A.size() != d.size()) throw std::invalid_argument("polytope goal: A/d size mismatch");
    GoalSpec g;
    g.kind = Kind::Polytope;
    g.A = std::move(A);
    g.d = std::move(d);
    return g;
  }
};

// z(x, u): remote vector on the equilibrium manifold with in-person mass u.
inline std::vector<double> manifold_point(const Population& pop, double u) {
  if (u < 0.0 || u > 1.0) throw std::domain_error("manifold_point: u outside [0,1]");
  std::vector<double> y(pop.groups(), 0.0);
  for (std::size_t k = 0; k < pop.groups(); ++k) {
    double sk1 = pop.prefix[k];
    double sk = pop.prefix[k + 1];
    if (sk <= u) {
      y[k] = 0.0;
    } else if (sk1 < u) {
      y[k] = sk - u;
    } else {
      y[k] = pop.masses[k];
    }
  }
  return y;
}

namespace detail {

inline void append_condensed(std::vector<Interval>& out, const Interval& next) {
  if (!out.empty() && next.lo - out.back().hi <= 1e-12) {
    out.back().hi = std::max(out.back().hi, next.hi);
  } else {
    out.push_back(next);
  }
}

}  // namespace detail

// Intersection of the manifold with the goal set, expressed as disjoint
// closed intervals of in-person mass.
inline std::vector<Interval> intersect(const Population& pop, const GoalSpec& goal) {
  if (goal.kind == GoalSpec::Kind::Capacity) {
    if (goal.b > 1.0 - 1e-15) {
      if (goal.b >= 1.0) return {{0.0, 0.0}};
    }
    return {{0.0, 1.0 - goal.b}};
  }
  std::vector<Interval> out;
  for (std::size_t k = 0; k < pop.groups(); ++k) {
    // On segment k the manifold is affine in u: y_j = x_j for j > k,
    // y_k = s_k - u, zeros below.
    double lo = pop.prefix[k];
    double hi = pop.prefix[k + 1];
    bool empty = false;
    for (std::size_t r = 0; r < goal.A.size() && !empty; ++r) {
      if (goal.A[r].size() != pop.groups()) {
        throw std::invalid_argument("polytope goal: row dimension mismatch");
      }
      double cst = goal.A[r][k] * pop.prefix[k + 1];
      for (std::size_t j = k + 1; j < pop.groups(); ++j) cst += goal.A[r][j] * pop.masses[j];
      double slope = -goal.A[r][k];
      double rhs = goal.d[r] - cst;
      if (std::abs(slope) < 1e-15) {
        if (rhs < -1e-12) empty = true;
      } else if (slope > 0.0) {
        hi = std::min(hi, rhs / slope);
      } else {
        lo = std::max(lo, rhs / slope);
      }
    }
    if (!empty && lo <= hi + 1e-12) {
      detail::append_condensed(out, {lo, std::max(lo, hi)});
    }
  }
  return out;
}

// Preimage of the mass intervals under the monotone map theta -> m(theta),
// clamped to [0, M]. Output sorted by increasing lower endpoint (reverses the
// mass-interval order since m is decreasing).
inline std::vector<Interval> belief_preimage(const Population& pop, const CostModel& cost,
                                             const std::vector<Interval>& mass_intervals,
                                             double M) {
  std::vector<Interval> out;
  double m0 = in_person_mass(pop, cost, 0.0);
  double mM = in_person_mass(pop, cost, M);
  for (auto it = mass_intervals.rbegin(); it != mass_intervals.rend(); ++it) {
    double w1 = it->lo, w2 = it->hi;
    if (mM > w2 || m0 < w1) continue;  // m never enters the interval on [0,M]
    double lo_theta;
    if (m0 <= w2) {
      lo_theta = 0.0;
    } else {
      double lo = 0.0, hi = M;  // m(lo) > w2, m(hi) <= w2
      while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (in_person_mass(pop, cost, mid) <= w2) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      lo_theta = hi;
    }
    double hi_theta;
    if (mM >= w1) {
      hi_theta = M;
    } else {
      double lo = 0.0, hi = M;  // m(lo) >= w1, m(hi) < w1
      while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (in_person_mass(pop, cost, mid) >= w1) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      hi_theta = lo;
    }
    if (lo_theta > hi_theta) lo_theta = hi_theta;
    out.push_back({lo_theta, hi_theta});
  }
  return out;
}

}  // namespace infodesign
