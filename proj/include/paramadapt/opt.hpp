// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "paramadapt/pool.hpp"
#include "paramadapt/sim.hpp"

namespace paramadapt::opt {

struct OptimizerConfig {
  double gtol = 1e-6;  // stop when ||grad||_inf <= gtol
  std::size_t max_evals = 10'000;
  double wolfe_c1 = 1e-4;
  double wolfe_c2 = 0.9;

  void validate() const;
  friend bool operator==(const OptimizerConfig&, const OptimizerConfig&) = default;
};

struct EvalCounters {
  std::size_t n_func_evals = 0;
  std::size_t n_grad_evals = 0;

  EvalCounters& operator+=(const EvalCounters& o) {
    n_func_evals += o.n_func_evals;
    n_grad_evals += o.n_grad_evals;
    return *this;
  }
  friend bool operator==(const EvalCounters&, const EvalCounters&) = default;
};

struct OptimResult {
  std::vector<double> theta_star;
  double f_star = 0.0;
  std::size_t n_func_evals = 0;
  std::size_t n_grad_evals = 0;
  std::size_t iterations = 0;
  bool converged = false;

  EvalCounters counters() const { return {n_func_evals, n_grad_evals}; }
};

struct ValueAndGradient {
  double value = 0.0;
  std::vector<double> gradient;
};

/// Every call counts as one function and one gradient evaluation.
using Objective = std::function<ValueAndGradient(std::span<const double>)>;

/**
 * BFGS with inverse-Hessian updates and a strong-Wolfe line search.
 * On line-search failure the best point seen is returned with
 * converged = false; f_star never exceeds f(theta0).
 */
OptimResult bfgs_minimize(const Objective& objective, std::vector<double> theta0,
                          const OptimizerConfig& cfg = {});

struct LocalResult {
  double theta_star = 0.0;
  double f_star = 0.0;
  double initial_gradient = 0.0;  // d/dtheta at theta0
  EvalCounters evals;
  bool converged = false;
};

/// 1-D BFGS on theta -> <base|e^{-theta tau} H_i e^{theta tau}|base>.
LocalResult local_optimize(const sim::StateVector& base, const pool::ExcitationOp& op,
                           const sim::PauliOperator& sub_h, double theta0,
                           const OptimizerConfig& cfg = {});
LocalResult local_optimize(const sim::StateVector& base, const pool::ExcitationOp& op,
                           const chem::SpinOrbitalHamiltonian& sub_h, double theta0,
                           const OptimizerConfig& cfg = {});

}  // namespace paramadapt::opt
