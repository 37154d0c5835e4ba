// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramadapt/opt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "paramadapt/errors.hpp"

namespace paramadapt::opt {

namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

constexpr int kMaxBracketSteps = 20;
constexpr int kMaxZoomSteps = 30;
constexpr double kMaxStep = 1e10;

struct Sample {
  double alpha = 0.0;
  double f = 0.0;
  double df = 0.0;
  Vec x;
  Vec g;
};

class CountedObjective {
 public:
  CountedObjective(const Objective& f, std::size_t budget) : f_(f), budget_(budget) {}

  bool exhausted() const { return calls_ >= budget_; }
  std::size_t calls() const { return calls_; }

  std::pair<double, Vec> operator()(const Vec& x) {
    ++calls_;
    ValueAndGradient r = f_(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
    if (r.gradient.size() != static_cast<std::size_t>(x.size())) {
      throw InvalidInput("objective returned a gradient of the wrong length");
    }
    Vec g = Eigen::Map<const Vec>(r.gradient.data(), x.size());
    if (!best_ || r.value < best_->first) best_.emplace(r.value, x);
    return {r.value, std::move(g)};
  }

  const std::optional<std::pair<double, Vec>>& best() const { return best_; }

 private:
  const Objective& f_;
  std::size_t budget_;
  std::size_t calls_ = 0;
  std::optional<std::pair<double, Vec>> best_;
};

double cubic_minimizer(const Sample& a, const Sample& b) {
  const double d1 = a.df + b.df - 3.0 * (a.f - b.f) / (a.alpha - b.alpha);
  const double disc = d1 * d1 - a.df * b.df;
  if (!(disc >= 0.0)) return std::numeric_limits<double>::quiet_NaN();
  const double d2 = std::copysign(std::sqrt(disc), b.alpha - a.alpha);
  const double denom = b.df - a.df + 2.0 * d2;
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return b.alpha - (b.alpha - a.alpha) * (b.df + d2 - d1) / denom;
}

// Strong-Wolfe search along p from (x, f0, g0). nullopt on failure.
std::optional<Sample> wolfe_search(CountedObjective& obj, const Vec& x, double f0, double df0,
                                   const Vec& p, double alpha0, const OptimizerConfig& cfg) {
  auto probe = [&](double alpha) -> std::optional<Sample> {
    if (obj.exhausted()) return std::nullopt;
    Sample s;
    s.alpha = alpha;
    s.x = x + alpha * p;
    auto [f, g] = obj(s.x);
    s.f = f;
    s.g = std::move(g);
    s.df = s.g.dot(p);
    if (!std::isfinite(s.f) || !std::isfinite(s.df)) return std::nullopt;
    return s;
  };
  auto armijo_fails = [&](const Sample& s) { return s.f > f0 + cfg.wolfe_c1 * s.alpha * df0; };
  auto curvature_ok = [&](const Sample& s) { return std::abs(s.df) <= -cfg.wolfe_c2 * df0; };

  auto zoom = [&](Sample lo, Sample hi) -> std::optional<Sample> {
    for (int j = 0; j < kMaxZoomSteps; ++j) {
      const double span = hi.alpha - lo.alpha;
      if (std::abs(span) <= 1e-16 * std::max(1.0, std::abs(lo.alpha))) return std::nullopt;
      double alpha = cubic_minimizer(lo, hi);
      const double a_min = std::min(lo.alpha, hi.alpha) + 0.1 * std::abs(span);
      const double a_max = std::max(lo.alpha, hi.alpha) - 0.1 * std::abs(span);
      if (!std::isfinite(alpha) || alpha < a_min || alpha > a_max) {
        alpha = 0.5 * (lo.alpha + hi.alpha);
      }
      auto s = probe(alpha);
      if (!s) return std::nullopt;
      if (armijo_fails(*s) || s->f >= lo.f) {
        hi = std::move(*s);
      } else {
        if (curvature_ok(*s)) return s;
        if (s->df * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
        lo = std::move(*s);
      }
    }
    return std::nullopt;
  };

  Sample prev;
  prev.alpha = 0.0;
  prev.f = f0;
  prev.df = df0;
  double alpha = alpha0;
  for (int i = 0; i < kMaxBracketSteps; ++i) {
    auto s = probe(alpha);
    if (!s) return std::nullopt;
    if (armijo_fails(*s) || (i > 0 && s->f >= prev.f)) return zoom(prev, *s);
    if (curvature_ok(*s)) return s;
    if (s->df >= 0.0) return zoom(*s, prev);
    prev = std::move(*s);
    alpha = std::min(2.0 * alpha, kMaxStep);
  }
  return std::nullopt;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(gtol > 0.0)) throw InvalidInput("gtol must be positive");
  if (!(wolfe_c1 > 0.0 && wolfe_c1 < wolfe_c2 && wolfe_c2 < 1.0)) {
    throw InvalidInput("Wolfe constants must satisfy 0 < c1 < c2 < 1");
  }
  if (max_evals == 0) throw InvalidInput("max_evals must be at least 1");
}

OptimResult bfgs_minimize(const Objective& objective, std::vector<double> theta0,
                          const OptimizerConfig& cfg) {
  cfg.validate();
  const auto n = static_cast<Eigen::Index>(theta0.size());
  CountedObjective obj(objective, cfg.max_evals);

  Vec x = Eigen::Map<const Vec>(theta0.data(), n);
  auto [f, g] = obj(x);
  Mat hinv = Mat::Identity(n, n);
  double f_prev = f + 0.5 * g.norm();

  OptimResult res;
  bool converged = false;
  for (;;) {
    if (n == 0 || g.lpNorm<Eigen::Infinity>() <= cfg.gtol) {
      converged = true;
      break;
    }
    if (obj.exhausted()) break;
    Vec p = -hinv * g;
    double df0 = g.dot(p);
    if (!(df0 < 0.0)) {
      hinv.setIdentity();
      p = -g;
      df0 = g.dot(p);
    }
    double alpha0 = 1.01 * 2.0 * (f - f_prev) / df0;
    if (!(alpha0 > 0.0) || !std::isfinite(alpha0)) alpha0 = 1.0;
    alpha0 = std::min(1.0, alpha0);

    auto step = wolfe_search(obj, x, f, df0, p, alpha0, cfg);
    if (!step) break;
    ++res.iterations;

    const Vec s = step->x - x;
    const Vec y = step->g - g;
    f_prev = f;
    x = step->x;
    f = step->f;
    g = step->g;

    const double ys = y.dot(s);
    if (ys > 0.0) {
      const double rho = 1.0 / ys;
      const Mat left = Mat::Identity(n, n) - rho * s * y.transpose();
      hinv = left * hinv * left.transpose() + rho * s * s.transpose();
    }
  }

  // Report the best point seen; with a failed search that can differ from x.
  const auto& best = obj.best();
  if (best && best->first < f) {
    x = best->second;
    f = best->first;
  }
  res.theta_star.assign(x.data(), x.data() + n);
  res.f_star = f;
  res.n_func_evals = obj.calls();
  res.n_grad_evals = obj.calls();
  res.converged = converged;
  return res;
}

LocalResult local_optimize(const sim::StateVector& base, const pool::ExcitationOp& op,
                           const sim::PauliOperator& sub_h, double theta0,
                           const OptimizerConfig& cfg) {
  const sim::LocalLandscape land(base, op, sub_h);
  Objective f = [&land](std::span<const double> t) {
    return ValueAndGradient{land.value(t[0]), {land.derivative(t[0])}};
  };
  const OptimResult r = bfgs_minimize(f, {theta0}, cfg);
  LocalResult out;
  out.theta_star = r.theta_star[0];
  out.f_star = r.f_star;
  out.initial_gradient = land.derivative(theta0);
  out.evals = r.counters();
  out.converged = r.converged;
  return out;
}

LocalResult local_optimize(const sim::StateVector& base, const pool::ExcitationOp& op,
                           const chem::SpinOrbitalHamiltonian& sub_h, double theta0,
                           const OptimizerConfig& cfg) {
  return local_optimize(base, op, sim::PauliOperator(sub_h.qubit_form()), theta0, cfg);
}

}  // namespace paramadapt::opt
