#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "infodesign/goal.hpp"
#include "infodesign/mechanism.hpp"
#include "infodesign/oracle.hpp"
#include "infodesign/prior.hpp"

namespace infodesign {

enum class Regime { R1, R2a, R2General, R3, R4, Empty };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::R1: return "R1";
    case Regime::R2a: return "R2a";
    case Regime::R2General: return "R2";
    case Regime::R3: return "R3";
    case Regime::R4: return "R4";
    case Regime::Empty: return "empty";
  }
  return "?";
}

struct R2aWitness {
  std::size_t low_interval = 0;   // interval receiving the low posterior mean
  std::size_t high_interval = 0;
  double t = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  double target_low = 0.0;
  double target_high = 0.0;
};

struct RegimeLabel {
  Regime regime = Regime::Empty;
  std::size_t interval_index = 0;  // R1: containing interval
  std::optional<R2aWitness> witness;
};

struct StatelessDesign {
  SignallingMechanism mechanism;
  DirectMechanism direct;
  double value = 0.0;
  RegimeLabel label;
};

// Feasibility search for the two-signal mixture that lands one posterior mean
// in an interval below the gap and one above it. Any hit certifies V* = 1.
inline std::optional<R2aWitness> search_r2a(const Prior& prior,
                                            const std::vector<Interval>& beliefs) {
  const double mu = prior.mean();
  constexpr std::size_t kTargets = 33;
  constexpr std::size_t kTGrid = 512;
  for (std::size_t k = 0; k < beliefs.size(); ++k) {
    if (beliefs[k].hi >= mu) continue;
    for (std::size_t l = k + 1; l < beliefs.size(); ++l) {
      if (beliefs[l].lo <= mu) continue;
      for (std::size_t ia = 0; ia < kTargets; ++ia) {
        double A = beliefs[k].lo +
                   (beliefs[k].hi - beliefs[k].lo) * static_cast<double>(ia) / (kTargets - 1);
        for (std::size_t ib = 0; ib < kTargets; ++ib) {
          double B = beliefs[l].lo +
                     (beliefs[l].hi - beliefs[l].lo) * static_cast<double>(ib) / (kTargets - 1);
          double w1 = (B - mu) / (B - A);
          if (!(w1 > 0.0 && w1 < 1.0)) continue;
          for (std::size_t g = 1; g < kTGrid; ++g) {
            double t = prior.quantile(static_cast<double>(g) / kTGrid);
            double Ft = prior.cdf(t);
            if (Ft <= 0.0 || Ft >= 1.0) continue;
            double slo = prior.mean_below(t);
            double shi = prior.mean_above(t);
            if (shi - slo <= 1e-12) continue;
            if (A < slo || A > shi) continue;
            double a = w1 * (shi - A) / (shi - slo);
            double b = w1 * (A - slo) / (shi - slo);
            double lambda = a / Ft;
            double alpha = b / (1.0 - Ft);
            if (lambda < -1e-12 || lambda > 1.0 + 1e-12) continue;
            if (alpha < -1e-12 || alpha > 1.0 + 1e-12) continue;
            lambda = std::min(std::max(lambda, 0.0), 1.0);
            alpha = std::min(std::max(alpha, 0.0), 1.0);
            double dl, dh;
            try {
              dl = prior.delta(alpha, lambda, t);
              dh = prior.delta(1.0 - alpha, 1.0 - lambda, t);
            } catch (const std::domain_error&) {
              continue;
            }
            if (std::abs(dl - A) > 1e-7 || std::abs(dh - B) > 1e-7) continue;
            if (dl < beliefs[k].lo - 1e-9 || dl > beliefs[k].hi + 1e-9) continue;
            if (dh < beliefs[l].lo - 1e-9 || dh > beliefs[l].hi + 1e-9) continue;
            return R2aWitness{k, l, t, alpha, lambda, A, B};
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline RegimeLabel classify(const Prior& prior, const std::vector<Interval>& beliefs) {
  RegimeLabel label;
  if (beliefs.empty()) {
    label.regime = Regime::Empty;
    return label;
  }
  const double mu = prior.mean();
  for (std::size_t k = 0; k < beliefs.size(); ++k) {
    if (mu >= beliefs[k].lo && mu <= beliefs[k].hi) {
      label.regime = Regime::R1;
      label.interval_index = k;
      return label;
    }
  }
  if (mu > beliefs.back().hi) {
    label.regime = Regime::R3;
    return label;
  }
  if (mu < beliefs.front().lo) {
    label.regime = Regime::R4;
    return label;
  }
  label.witness = search_r2a(prior, beliefs);
  label.regime = label.witness ? Regime::R2a : Regime::R2General;
  return label;
}

namespace stateless_detail {

// q2* = inf{q >= (lo1-mu)/lo1 : q <= h(lo1 - (lo1-mu)/q)}. A coarse scan
// brackets the feasible region, which must be a single interval ending at 1;
// bisection then sharpens the left edge.
inline std::optional<double> solve_r4_qstar(const Prior& prior, double lo1) {
  const double mu = prior.mean();
  const double q_min = (lo1 - mu) / lo1;
  auto feasible = [&](double q) {
    double target = lo1 - (lo1 - mu) / q;
    if (target < 0.0) return false;
    return q <= prior.h(target) + 1e-12;
  };
  constexpr std::size_t kScan = 1024;
  std::size_t first = kScan;
  bool contiguous = true;
  std::vector<double> qs(kScan);
  for (std::size_t i = 0; i < kScan; ++i) {
    qs[i] = q_min + (1.0 - q_min) * static_cast<double>(i) / (kScan - 1);
    bool f = feasible(qs[i]);
    if (f && first == kScan) first = i;
    if (!f && first != kScan) contiguous = false;
  }
  if (!contiguous) return std::nullopt;  // caller falls back to the oracle
  if (first == kScan) {
    if (feasible(1.0)) return 1.0;
    return std::nullopt;
  }
  if (first == 0) return qs[0];
  double lo = qs[first - 1], hi = qs[first];
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

inline SignallingMechanism two_cell_partition(double t1, double M) {
  if (t1 <= 1e-14 || t1 >= M - 1e-14) return SignallingMechanism::uninformative(M);
  return SignallingMechanism::partition({0.0, t1, M});
}

}  // namespace stateless_detail

// Optimal stateless mechanism for the given belief intervals (sorted,
// disjoint). General R2 is delegated to the discretized LP oracle.
inline StatelessDesign design(const Prior& prior, const std::vector<Interval>& beliefs,
                              std::size_t oracle_grid = 2000) {
  StatelessDesign out;
  out.label = classify(prior, beliefs);
  const double M = prior.high();
  switch (out.label.regime) {
    case Regime::Empty: {
      out.mechanism = SignallingMechanism::uninformative(M);
      out.value = 0.0;
      break;
    }
    case Regime::R1: {
      out.mechanism = SignallingMechanism::uninformative(M);
      out.value = 1.0;
      break;
    }
    case Regime::R2a: {
      const R2aWitness& w = *out.label.witness;
      out.mechanism = SignallingMechanism::mixture(w.t, w.lambda, w.alpha);
      out.value = 1.0;
      break;
    }
    case Regime::R3: {
      double thb = beliefs.back().hi;
      double mu = prior.mean();
      double q1 = prior.h(thb);
      if (thb < M) q1 = std::min(q1, (M - mu) / (M - thb));
      out.mechanism = stateless_detail::two_cell_partition(prior.quantile(q1), M);
      out.value = q1;
      break;
    }
    case Regime::R4: {
      double lo1 = beliefs.front().lo;
      auto q2 = stateless_detail::solve_r4_qstar(prior, lo1);
      if (!q2) {
        // feasible set was not a clean interval; fall back to the oracle
        auto res = oracle_value(discretize(prior, oracle_grid, beliefs));
        out.mechanism = res.table;
        out.value = res.value;
        out.label.regime = Regime::R2General;
        break;
      }
      out.mechanism = stateless_detail::two_cell_partition(prior.quantile(*q2), M);
      out.value = 1.0 - *q2;
      break;
    }
    case Regime::R2General: {
      auto res = oracle_value(discretize(prior, oracle_grid, beliefs));
      out.mechanism = res.table;
      out.value = res.value;
      break;
    }
  }
  out.direct = to_direct(out.mechanism, prior);
  return out;
}

}  // namespace infodesign
