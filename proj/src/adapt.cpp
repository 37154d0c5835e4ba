// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramadapt/adapt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "paramadapt/errors.hpp"
#include "paramadapt/sim.hpp"

namespace paramadapt::adapt {

std::string to_string(Criterion c) { return c == Criterion::Gradient ? "gradient" : "parameter"; }
std::string to_string(Start s) { return s == Start::Warm ? "warm" : "hot"; }
std::string to_string(PoolKind p) { return p == PoolKind::Uccsd ? "uccsd" : "hi_uccsd"; }
std::string to_string(Termination t) {
  switch (t) {
    case Termination::Epsilon: return "epsilon";
    case Termination::GradNorm: return "grad_norm";
    case Termination::KMax: return "k_max";
  }
  return "k_max";
}

Criterion parse_criterion(const std::string& s) {
  if (s == "gradient") return Criterion::Gradient;
  if (s == "parameter") return Criterion::Parameter;
  throw InvalidInput("unknown criterion '" + s + "'");
}
Start parse_start(const std::string& s) {
  if (s == "warm") return Start::Warm;
  if (s == "hot") return Start::Hot;
  throw InvalidInput("unknown start '" + s + "'");
}
PoolKind parse_pool_kind(const std::string& s) {
  if (s == "uccsd") return PoolKind::Uccsd;
  if (s == "hi_uccsd") return PoolKind::HiUccsd;
  throw InvalidInput("unknown pool '" + s + "'");
}
Termination parse_termination(const std::string& s) {
  if (s == "epsilon") return Termination::Epsilon;
  if (s == "grad_norm") return Termination::GradNorm;
  if (s == "k_max") return Termination::KMax;
  throw InvalidInput("unknown termination '" + s + "'");
}

void AdaptConfig::validate() const {
  if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
  if (!(grad_norm_tol > 0.0)) throw InvalidInput("grad_norm_tol must be positive");
  if (!(eta >= 0.0)) throw InvalidInput("eta must be non-negative");
  if (criterion == Criterion::Gradient && start == Start::Hot) {
    throw InvalidInput("hot start needs a local theta*, so it requires the parameter criterion");
  }
  optimizer.validate();
}

// ---------------------------------------------------------------------------
// Ledger
// ---------------------------------------------------------------------------

void CostLedger::open_entry(std::uint64_t scan_cost) {
  entries_.push_back({scan_cost, 0});
  cumulative_ += scan_cost;
}

void CostLedger::add_global(std::uint64_t global_cost) {
  if (entries_.empty()) entries_.push_back({});
  entries_.back().global_cost += global_cost;
  cumulative_ += global_cost;
}

CostLedger CostLedger::from_entries(std::vector<LedgerEntry> entries) {
  CostLedger l;
  for (const auto& e : entries) l.cumulative_ += e.scan_cost + e.global_cost;
  l.entries_ = std::move(entries);
  return l;
}

std::uint64_t charge_scan(CostLedger& ledger, Criterion criterion,
                          std::span<const std::size_t> sub_term_counts,
                          std::span<const opt::EvalCounters> evals) {
  std::uint64_t cost = 0;
  if (criterion == Criterion::Parameter) {
    if (evals.size() != sub_term_counts.size()) {
      throw InvalidInput("one evaluation counter per pool operator is required");
    }
    for (std::size_t i = 0; i < sub_term_counts.size(); ++i) {
      const std::uint64_t t = sub_term_counts[i];
      cost += evals[i].n_func_evals * t + evals[i].n_grad_evals * 2 * t;
    }
  } else {
    for (auto t : sub_term_counts) cost += 2 * static_cast<std::uint64_t>(t);
  }
  ledger.open_entry(cost);
  return cost;
}

std::uint64_t charge_global(CostLedger& ledger, std::size_t t_full, std::size_t m,
                            std::size_t n_func_evals, std::size_t n_grad_evals) {
  const std::uint64_t t = t_full;
  const std::uint64_t cost = n_func_evals * t + n_grad_evals * 2 * m * t;
  ledger.add_global(cost);
  return cost;
}

std::size_t select_operator(std::span<const double> scores) {
  if (scores.empty()) throw InvalidInput("cannot select from an empty score vector");
  std::size_t best = 0;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    if (std::abs(scores[k]) > std::abs(scores[best])) best = k;
  }
  return best;
}

std::size_t AdaptTrace::global_evals() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.global_func_evals;
  return n;
}

std::string op_label(const pool::ExcitationOp& op) {
  const auto& ix = op.indices;
  std::ostringstream s;
  if (op.kind == pool::Kind::Single) {
    s << ix[0] << "->" << ix[1];
  } else {
    s << ix[0] << ',' << ix[1] << "->" << ix[2] << ',' << ix[3];
  }
  return s.str();
}

pool::Pool build_pool(const chem::MoleculeData& m, const chem::SpinOrbitalHamiltonian& h,
                      const AdaptConfig& cfg) {
  pool::Pool full = pool::uccsd_pool(m);
  if (cfg.pool_kind == PoolKind::Uccsd) return full;
  return pool::hi_uccsd_filter(full, h, cfg.eta);
}

// ---------------------------------------------------------------------------
// Adaptive loop
// ---------------------------------------------------------------------------

AdaptTrace run_adapt(const chem::SpinOrbitalHamiltonian& h, const chem::MoleculeData& m,
                     const pool::Pool& pool, const AdaptConfig& cfg,
                     std::optional<double> fci_energy) {
  cfg.validate();
  if (pool.empty()) throw InvalidInput("operator pool is empty");

  const std::size_t n_q = h.n_spin_orbitals();
  const sim::PauliOperator full(h.qubit_form());
  const std::size_t t_full = h.fermionic_term_count();

  // Sub-Hamiltonians do not depend on the state, so they are built once.
  std::vector<sim::PauliOperator> subs;
  std::vector<std::size_t> sub_counts;
  subs.reserve(pool.size());
  for (const auto& op : pool) {
    const chem::SpinOrbitalHamiltonian sub = chem::sub_hamiltonian(h, op);
    sub_counts.push_back(sub.fermionic_term_count());
    subs.emplace_back(sub.qubit_form());
  }

  AdaptTrace trace;
  trace.config = cfg;
  trace.n_qubits = n_q;
  trace.n_electrons = m.n_electrons();
  trace.pool_size = pool.size();
  trace.full_term_count = t_full;
  trace.fci_energy = fci_energy;

  sim::Ansatz ansatz{chem::hartree_fock_reference(m), n_q, {}};
  sim::StateVector state = sim::apply_ansatz(ansatz);
  trace.hf_energy = sim::expectation(state, full) + h.constant();
  double e_prev = trace.hf_energy;

  const opt::Objective global_objective = [&](std::span<const double> t) {
    ansatz.set_thetas(t);
    sim::EnergyGradient eg = sim::energy_and_gradient(ansatz, full, h.constant());
    return opt::ValueAndGradient{eg.energy, std::move(eg.gradient)};
  };

  trace.termination = Termination::KMax;
  for (std::size_t k = 1;; ++k) {
    if (k > cfg.k_max) {
      trace.termination = Termination::KMax;
      break;
    }

    // Step 2: score every pool operator from the current state.
    std::vector<double> scores(pool.size(), 0.0);
    std::vector<double> grad0(pool.size(), 0.0);
    std::vector<opt::EvalCounters> evals(pool.size());
    if (cfg.criterion == Criterion::Parameter) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(pool.size()); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const opt::LocalResult r = opt::local_optimize(state, pool[i], subs[i], 0.0, cfg.optimizer);
        scores[i] = r.theta_star;
        grad0[i] = r.initial_gradient;
        evals[i] = r.evals;
      }
    } else {
      scores = sim::pool_gradients(state, pool, subs);
      grad0 = scores;
    }
    charge_scan(trace.ledger, cfg.criterion, sub_counts, evals);

    // Step 3: threshold test.
    if (cfg.criterion == Criterion::Parameter) {
      double max_abs = 0.0;
      for (double s : scores) max_abs = std::max(max_abs, std::abs(s));
      if (max_abs < cfg.epsilon) {
        trace.termination = Termination::Epsilon;
        break;
      }
    } else {
      double sq = 0.0;
      for (double s : scores) sq += s * s;
      if (std::sqrt(sq) < cfg.grad_norm_tol) {
        trace.termination = Termination::GradNorm;
        break;
      }
    }

    // Step 4: append the winner (acts last on the state).
    const std::size_t pick = select_operator(scores);
    const double init = cfg.start == Start::Hot ? scores[pick] : 0.0;
    ansatz.elements.push_back({pool[pick], init});
    std::vector<double> theta0 = ansatz.thetas();

    // Step 5: global re-optimization of every parameter.
    const opt::OptimResult res = opt::bfgs_minimize(global_objective, theta0, cfg.optimizer);
    double e_k = res.f_star;
    std::vector<double> params = res.theta_star;
    if (e_k > e_prev) {
      // Only reachable on a failed search; fall back to the previous optimum.
      params = theta0;
      params.back() = 0.0;
      ansatz.set_thetas(params);
      e_k = sim::energy(ansatz, full, h.constant());
    }
    ansatz.set_thetas(params);
    charge_global(trace.ledger, t_full, ansatz.elements.size(), res.n_func_evals,
                  res.n_grad_evals);

    IterationRecord rec;
    rec.k = k;
    rec.chosen_pool_index = pool[pick].pool_index;
    rec.chosen_label = op_label(pool[pick]);
    rec.selection_score = std::abs(scores[pick]);
    rec.initial_gradient = grad0[pick];
    rec.initial_param = init;
    rec.energy_after_global = e_k;
    if (fci_energy) rec.error_vs_fci = e_k - *fci_energy;
    rec.all_params = params;
    rec.global_func_evals = res.n_func_evals;
    rec.global_grad_evals = res.n_grad_evals;
    rec.global_converged = res.converged;
    rec.ledger_entry = trace.ledger.per_iteration().back();
    rec.cumulative_cost = trace.ledger.cumulative();
    trace.records.push_back(std::move(rec));

    e_prev = e_k;
    state = sim::apply_ansatz(ansatz);
  }

  // Step 6: full-Hamiltonian energy of the final state.
  trace.final_energy = sim::expectation(sim::apply_ansatz(ansatz), full) + h.constant();
  return trace;
}

}  // namespace paramadapt::adapt
