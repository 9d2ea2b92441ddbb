#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace infodesign {

// K groups of non-atomic agents. masses sum to 1, benefits strictly
// decreasing.
struct Population {
  std::vector<double> masses;
  std::vector<double> benefits;
  std::vector<double> prefix;  // prefix[j] = sum of masses[0..j-1], prefix[0] = 0

  Population(std::vector<double> x, std::vector<double> v)
      : masses(std::move(x)), benefits(std::move(v)) {
    if (masses.empty() || masses.size() != benefits.size()) {
      throw std::invalid_argument("population: masses/benefits size mismatch");
    }
    double total = 0.0;
    for (double m : masses) {
      if (m <= 0.0) throw std::invalid_argument("population: masses must be positive");
      total += m;
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw std::invalid_argument("population: masses must sum to 1 within 1e-12");
    }
    for (std::size_t k = 0; k < benefits.size(); ++k) {
      if (benefits[k] <= 0.0) throw std::invalid_argument("population: benefits must be positive");
      if (k > 0 && benefits[k] >= benefits[k - 1]) {
        throw std::invalid_argument("population: benefits must be strictly decreasing");
      }
    }
    prefix.resize(masses.size() + 1, 0.0);
    for (std::size_t k = 0; k < masses.size(); ++k) prefix[k + 1] = prefix[k] + masses[k];
    prefix.back() = 1.0;
  }

  std::size_t groups() const { return masses.size(); }
};

// c1(r) = kappa1*(1-r)^p1, c2(r) = kappa2*(1-r)^p2 with r the remote mass.
// Expressed against the in-person mass u = 1-r the cost side is strictly
// increasing and vanishes at u = 0.
struct CostModel {
  double kappa1 = 1.0;
  double p1 = 1.0;
  double kappa2 = 0.0;
  double p2 = 1.0;

  CostModel() = default;
  CostModel(double k1, double e1, double k2, double e2) : kappa1(k1), p1(e1), kappa2(k2), p2(e2) {
    if (!(kappa1 > 0.0) || !(p1 >= 1.0) || !(kappa2 >= 0.0) || !(p2 >= 1.0)) {
      throw std::invalid_argument("cost model: need kappa1>0, kappa2>=0, exponents >= 1");
    }
  }

  // theta*c1(1-u) + c2(1-u) for in-person mass u
  double at_inperson(double theta, double u) const {
    return theta * kappa1 * std::pow(u, p1) + kappa2 * std::pow(u, p2);
  }

  // beta(theta, y) for remote mass r = ||y||
  double beta(double theta, double remote_mass) const {
    return at_inperson(theta, 1.0 - remote_mass);
  }
};

struct EquilibriumOutcome {
  double in_person_mass = 0.0;
  std::vector<double> remote;
  std::size_t critical_group = 0;  // 1-based
};

// v(u): benefit of the marginal in-person agent, v_j on [s_{j-1}, s_j).
inline double step_benefit(const Population& pop, double u) {
  if (u < 0.0 || u > 1.0) throw std::domain_error("step_benefit: u outside [0,1]");
  for (std::size_t j = 0; j < pop.groups(); ++j) {
    if (u < pop.prefix[j + 1]) return pop.benefits[j];
  }
  return pop.benefits.back();
}

// m(theta) = sup{u : v(u) >= theta*c1(1-u) + c2(1-u)}. Scans groups in order;
// the cost side is strictly increasing in u so each segment needs at most one
// bisection.
inline double in_person_mass(const Population& pop, const CostModel& cost, double theta_hat) {
  if (theta_hat < 0.0) throw std::domain_error("in_person_mass: theta_hat < 0");
  for (std::size_t j = 0; j < pop.groups(); ++j) {
    double v = pop.benefits[j];
    double lo = pop.prefix[j];
    double hi = pop.prefix[j + 1];
    if (v >= cost.at_inperson(theta_hat, hi)) continue;  // whole segment affordable
    if (v <= cost.at_inperson(theta_hat, lo)) return lo;
    while (hi - lo > 1e-10) {
      double mid = 0.5 * (lo + hi);
      if (v >= cost.at_inperson(theta_hat, mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  }
  return 1.0;
}

// Remote vector with the threshold shape of the equilibrium: prefix groups
// fully in-person, one partial group with y_k = s_k - m, suffix fully remote.
inline EquilibriumOutcome equilibrium(const Population& pop, const CostModel& cost,
                                      double theta_hat) {
  EquilibriumOutcome out;
  double m = in_person_mass(pop, cost, theta_hat);
  out.in_person_mass = m;
  out.remote.resize(pop.groups(), 0.0);
  out.critical_group = pop.groups();
  for (std::size_t k = 0; k < pop.groups(); ++k) {
    double sk1 = pop.prefix[k];
    double sk = pop.prefix[k + 1];
    if (sk <= m) {
      out.remote[k] = 0.0;
    } else if (sk1 < m) {
      out.remote[k] = sk - m;
    } else {
      out.remote[k] = pop.masses[k];
    }
    if (sk > m && out.critical_group == pop.groups() && sk1 <= m) {
      out.critical_group = k + 1;
    }
  }
  return out;
}

// gamma(b) = inf{theta : m(theta) <= 1-b}; +inf when b = 1 (m stays positive
// for finite theta since the cost vanishes as u -> 0).
inline double gamma_threshold(const Population& pop, const CostModel& cost, double b) {
  if (b < 0.0 || b > 1.0) throw std::domain_error("gamma_threshold: b outside [0,1]");
  if (b <= 0.0) return 0.0;
  double target = 1.0 - b;
  if (in_person_mass(pop, cost, 0.0) <= target) return 0.0;
  if (target <= 0.0) return std::numeric_limits<double>::infinity();
  double hi = 1.0;
  while (in_person_mass(pop, cost, hi) > target) {
    hi *= 2.0;
    if (hi > 1e18) return std::numeric_limits<double>::infinity();
  }
  double lo = 0.0;
  while (hi - lo > 1e-10 * std::max(1.0, hi)) {
    double mid = 0.5 * (lo + hi);
    if (in_person_mass(pop, cost, mid) <= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace infodesign
