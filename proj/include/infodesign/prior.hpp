#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace infodesign {

// Bounded scalar distribution over [low, high]. Internally every family is
// normalized to a piecewise-linear quantile path: points (p, t) with p
// non-decreasing from 0 to 1 and t non-decreasing over the support. Atoms are
// flat-t segments, CDF plateaus are flat-p segments. Trapezoid integration of
// the path is exact, so integrated_quantile needs no quadrature.
class Prior {
 public:
  enum class Family { Uniform, Discrete, PwlCdf };

  static Prior uniform(double low, double high) {
    if (!(low >= 0.0) || !(low < high)) {
      throw std::invalid_argument("uniform prior requires 0 <= low < high");
    }
    Prior p;
    p.family_ = Family::Uniform;
    p.path_ = {{0.0, low}, {1.0, high}};
    p.finish();
    return p;
  }

  static Prior discrete(std::vector<double> support, std::vector<double> probs) {
    if (support.size() != probs.size() || support.empty()) {
      throw std::invalid_argument("discrete prior: support/probs size mismatch");
    }
    std::map<double, double> atoms;
    double total = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (support[i] < 0.0) throw std::invalid_argument("discrete prior: negative support point");
      if (probs[i] < 0.0) throw std::invalid_argument("discrete prior: negative probability");
      atoms[support[i]] += probs[i];
      total += probs[i];
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw std::invalid_argument("discrete prior: probabilities must sum to 1 within 1e-12");
    }
    Prior p;
    p.family_ = Family::Discrete;
    double c = 0.0;
    for (const auto& [t, w] : atoms) {
      if (w <= 0.0) continue;
      p.path_.push_back({c, t});
      c += w / total;  // renormalize residual rounding
      p.path_.push_back({c, t});
    }
    p.path_.back().p = 1.0;
    p.finish();
    return p;
  }

  // Knots are (t, F(t)) pairs; F must run from 0 to 1. Repeated t with a jump
  // in F encodes an atom.
  static Prior pwl_cdf(const std::vector<std::pair<double, double>>& knots) {
    if (knots.size() < 2) throw std::invalid_argument("pwl_cdf prior: need at least 2 knots");
    Prior p;
    p.family_ = Family::PwlCdf;
    for (std::size_t i = 0; i < knots.size(); ++i) {
      auto [t, F] = knots[i];
      if (t < 0.0) throw std::invalid_argument("pwl_cdf prior: negative support");
      if (i > 0 && (t < knots[i - 1].first || F < knots[i - 1].second)) {
        throw std::invalid_argument("pwl_cdf prior: knots must be non-decreasing");
      }
      p.path_.push_back({F, t});
    }
    if (std::abs(p.path_.front().p) > 1e-12 || std::abs(p.path_.back().p - 1.0) > 1e-12) {
      throw std::invalid_argument("pwl_cdf prior: F must run from 0 to 1");
    }
    p.path_.front().p = 0.0;
    p.path_.back().p = 1.0;
    // drop zero-length segments
    std::vector<Point> cleaned;
    for (const auto& q : p.path_) {
      if (!cleaned.empty() && q.p == cleaned.back().p && q.t == cleaned.back().t) continue;
      cleaned.push_back(q);
    }
    p.path_ = std::move(cleaned);
    p.finish();
    return p;
  }

  Family family() const { return family_; }
  double low() const { return path_.front().t; }
  double high() const { return path_.back().t; }
  double mean() const { return mean_; }

  double cdf(double t) const {
    double p = 0.0;
    for (std::size_t i = 0; i + 1 < path_.size(); ++i) {
      const Point& a = path_[i];
      const Point& b = path_[i + 1];
      if (t >= b.t) {
        p = b.p;
      } else if (t >= a.t) {
        if (b.t > a.t) p = a.p + (b.p - a.p) * (t - a.t) / (b.t - a.t);
        break;
      } else {
        break;
      }
    }
    return p;
  }

  // Left limit F(t-) = P(theta < t).
  double cdf_left(double t) const {
    double p = 0.0;
    for (std::size_t i = 0; i + 1 < path_.size(); ++i) {
      const Point& a = path_[i];
      const Point& b = path_[i + 1];
      if (t > b.t) {
        p = b.p;
      } else if (t > a.t) {
        if (b.t > a.t) p = a.p + (b.p - a.p) * (t - a.t) / (b.t - a.t);
        break;
      } else {
        break;
      }
    }
    return p;
  }

  // Generalized inverse F^{-1}(p) = inf{t : F(t) >= p}.
  double quantile(double p) const {
    if (p < 0.0 || p > 1.0) throw std::domain_error("quantile: p outside [0,1]");
    if (p <= path_.front().p) return path_.front().t;
    for (std::size_t i = 0; i + 1 < path_.size(); ++i) {
      const Point& a = path_[i];
      const Point& b = path_[i + 1];
      if (p <= b.p) {
        if (b.p > a.p) return a.t + (b.t - a.t) * (p - a.p) / (b.p - a.p);
        // p == a.p == b.p at a CDF plateau: inf convention picks the low end
        return a.t;
      }
    }
    return path_.back().t;
  }

  // int_0^s F^{-1}(t) dt, exact per family.
  double integrated_quantile(double s) const {
    if (s < 0.0 || s > 1.0) throw std::domain_error("integrated_quantile: s outside [0,1]");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < path_.size(); ++i) {
      const Point& a = path_[i];
      const Point& b = path_[i + 1];
      if (b.p <= a.p) continue;
      if (s >= b.p) {
        acc += (b.p - a.p) * 0.5 * (a.t + b.t);
      } else if (s > a.p) {
        double tm = a.t + (b.t - a.t) * (s - a.p) / (b.p - a.p);
        acc += (s - a.p) * 0.5 * (a.t + tm);
        break;
      } else {
        break;
      }
    }
    return acc;
  }

  // E[theta | theta <= t]
  double mean_below(double t) const {
    double Ft = cdf(t);
    if (Ft <= 0.0) throw std::domain_error("mean_below: conditioning on zero-probability event");
    return integrated_quantile(Ft) / Ft;
  }

  // E[theta | theta >= t]
  double mean_above(double t) const {
    double Fl = cdf_left(t);
    if (Fl >= 1.0) throw std::domain_error("mean_above: conditioning on zero-probability event");
    return (mean_ - integrated_quantile(Fl)) / (1.0 - Fl);
  }

  // Posterior mean after a signal generated with probability lambda below t
  // and alpha above t.
  double delta(double alpha, double lambda, double t) const {
    double Ft = cdf(t);
    double wl = lambda * Ft;
    double wh = alpha * (1.0 - Ft);
    if (wl + wh <= 0.0) throw std::domain_error("delta: signal never generated");
    double num = 0.0;
    if (wl > 0.0) num += mean_below(t) * wl;
    if (wh > 0.0) num += mean_above(t) * wh;
    return num / (wl + wh);
  }

  // h(theta) = sup{s : integrated_quantile(s) <= s*theta}. The bottom-s
  // quantile mean is non-decreasing in s, so bisection applies.
  double h(double theta) const {
    if (theta >= mean_) return 1.0;
    if (theta < low()) return 0.0;
    double lo = 0.0, hi = 1.0;  // lo always feasible, hi infeasible (theta < mean)
    while (hi - lo > 1e-10) {
      double mid = 0.5 * (lo + hi);
      if (integrated_quantile(mid) <= mid * theta) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

 private:
  struct Point {
    double p;
    double t;
  };

  void finish() {
    mean_ = 0.0;
    for (std::size_t i = 0; i + 1 < path_.size(); ++i) {
      mean_ += (path_[i + 1].p - path_[i].p) * 0.5 * (path_[i].t + path_[i + 1].t);
    }
  }

  Family family_ = Family::Uniform;
  std::vector<Point> path_;
  double mean_ = 0.0;
};

}  // namespace infodesign
