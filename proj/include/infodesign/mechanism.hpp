#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "infodesign/prior.hpp"

namespace infodesign {

struct DirectSignal {
  double q = 0.0;      // signal probability
  double theta = 0.0;  // induced posterior mean
};

using DirectMechanism = std::vector<DirectSignal>;

// Signal-generating kernel g_theta(i), in one of three shapes:
//  - MonotonePartition: thresholds 0 = t_0 < ... < t_m = M, one deterministic
//    signal per interval;
//  - PiecewiseMixture: two signals; signal 1 fires with probability
//    lambda_low below the breakpoint and alpha_high above it;
//  - DiscreteTable: explicit rows over a finite state list.
struct SignallingMechanism {
  enum class Kind { MonotonePartition, PiecewiseMixture, DiscreteTable };
  Kind kind = Kind::MonotonePartition;

  std::vector<double> thresholds;

  double breakpoint = 0.0;
  double lambda_low = 0.0;
  double alpha_high = 0.0;

  std::vector<double> states;
  std::vector<double> state_probs;
  std::vector<std::vector<double>> rows;  // rows[j][i] = g_{states[j]}(i)

  static SignallingMechanism partition(std::vector<double> thresholds) {
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
      if (thresholds[i] <= thresholds[i - 1]) {
        throw std::invalid_argument("partition mechanism: thresholds must be strictly increasing");
      }
    }
    SignallingMechanism m;
    m.kind = Kind::MonotonePartition;
    m.thresholds = std::move(thresholds);
    return m;
  }

  static SignallingMechanism mixture(double t, double lambda, double alpha) {
    if (lambda < 0.0 || lambda > 1.0 || alpha < 0.0 || alpha > 1.0) {
      throw std::invalid_argument("mixture mechanism: probabilities outside [0,1]");
    }
    SignallingMechanism m;
    m.kind = Kind::PiecewiseMixture;
    m.breakpoint = t;
    m.lambda_low = lambda;
    m.alpha_high = alpha;
    return m;
  }

  static SignallingMechanism table(std::vector<double> states, std::vector<double> probs,
                                   std::vector<std::vector<double>> rows) {
    SignallingMechanism m;
    m.kind = Kind::DiscreteTable;
    m.states = std::move(states);
    m.state_probs = std::move(probs);
    m.rows = std::move(rows);
    return m;
  }

  static SignallingMechanism uninformative(double M) { return partition({0.0, M}); }
};

// Reduce a mechanism to its direct form {(q_i, theta_i)}. Zero-probability
// signals are dropped.
inline DirectMechanism to_direct(const SignallingMechanism& mech, const Prior& prior) {
  DirectMechanism out;
  switch (mech.kind) {
    case SignallingMechanism::Kind::MonotonePartition: {
      for (std::size_t i = 1; i < mech.thresholds.size(); ++i) {
        double Fa = prior.cdf(mech.thresholds[i - 1]);
        double Fb = prior.cdf(mech.thresholds[i]);
        double q = Fb - Fa;
        if (q <= 1e-12) continue;
        double theta = (prior.integrated_quantile(Fb) - prior.integrated_quantile(Fa)) / q;
        out.push_back({q, theta});
      }
      break;
    }
    case SignallingMechanism::Kind::PiecewiseMixture: {
      double Ft = prior.cdf(mech.breakpoint);
      double q1 = mech.lambda_low * Ft + mech.alpha_high * (1.0 - Ft);
      if (q1 > 1e-12) {
        out.push_back({q1, prior.delta(mech.alpha_high, mech.lambda_low, mech.breakpoint)});
      }
      double q2 = 1.0 - q1;
      if (q2 > 1e-12) {
        out.push_back(
            {q2, prior.delta(1.0 - mech.alpha_high, 1.0 - mech.lambda_low, mech.breakpoint)});
      }
      break;
    }
    case SignallingMechanism::Kind::DiscreteTable: {
      if (mech.rows.size() != mech.states.size() || mech.states.size() != mech.state_probs.size()) {
        throw std::invalid_argument("table mechanism: inconsistent dimensions");
      }
      std::size_t signals = mech.rows.empty() ? 0 : mech.rows.front().size();
      for (std::size_t i = 0; i < signals; ++i) {
        double q = 0.0, num = 0.0;
        for (std::size_t j = 0; j < mech.states.size(); ++j) {
          q += mech.state_probs[j] * mech.rows[j][i];
          num += mech.states[j] * mech.state_probs[j] * mech.rows[j][i];
        }
        if (q <= 1e-12) continue;
        out.push_back({q, num / q});
      }
      break;
    }
  }
  return out;
}

}  // namespace infodesign
