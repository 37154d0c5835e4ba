// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paramadapt/chem.hpp"
#include "paramadapt/opt.hpp"
#include "paramadapt/pool.hpp"

namespace paramadapt::adapt {

/// GRADIENT: largest |<[H, tau]>| (ADAPT-VQE). PARAMETER: largest locally optimized |theta*|.
enum class Criterion { Gradient, Parameter };
/// Initial value of the newly appended parameter: 0 (WARM) or the local theta* (HOT).
enum class Start { Warm, Hot };
enum class PoolKind { Uccsd, HiUccsd };
enum class Termination { Epsilon, GradNorm, KMax };

std::string to_string(Criterion c);
std::string to_string(Start s);
std::string to_string(PoolKind p);
std::string to_string(Termination t);
Criterion parse_criterion(const std::string& s);
Start parse_start(const std::string& s);
PoolKind parse_pool_kind(const std::string& s);
Termination parse_termination(const std::string& s);

struct AdaptConfig {
  Criterion criterion = Criterion::Parameter;
  Start start = Start::Hot;
  double epsilon = 1e-4;
  double grad_norm_tol = 1e-3;
  std::size_t k_max = 120;
  opt::OptimizerConfig optimizer;
  PoolKind pool_kind = PoolKind::HiUccsd;
  double eta = 1e-10;

  /// Rejects non-positive epsilon and the HOT + GRADIENT combination.
  void validate() const;
  friend bool operator==(const AdaptConfig&, const AdaptConfig&) = default;
};

struct LedgerEntry {
  std::uint64_t scan_cost = 0;
  std::uint64_t global_cost = 0;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

/**
 * Measurement cost in units of fermionic Hamiltonian terms. Each scan opens a
 * new entry; the following global optimization is charged to that entry.
 */
class CostLedger {
 public:
  std::uint64_t cumulative() const { return cumulative_; }
  const std::vector<LedgerEntry>& per_iteration() const { return entries_; }

  void open_entry(std::uint64_t scan_cost);
  void add_global(std::uint64_t global_cost);

  /// Rebuilds a ledger from serialized entries.
  static CostLedger from_entries(std::vector<LedgerEntry> entries);

  friend bool operator==(const CostLedger&, const CostLedger&) = default;

 private:
  std::uint64_t cumulative_ = 0;
  std::vector<LedgerEntry> entries_;
};

/**
 * Scan charge, opened as a new ledger entry and returned.
 *   PARAMETER: sum_i n_func_i |H_i| + n_grad_i * 2 |H_i|
 *   GRADIENT:  sum_i 2 |H_i|            (`evals` is ignored)
 */
std::uint64_t charge_scan(CostLedger& ledger, Criterion criterion,
                          std::span<const std::size_t> sub_term_counts,
                          std::span<const opt::EvalCounters> evals);

/// n_func * T_full + n_grad * 2 m T_full, added to the current entry and returned.
std::uint64_t charge_global(CostLedger& ledger, std::size_t t_full, std::size_t m,
                            std::size_t n_func_evals, std::size_t n_grad_evals);

/// argmax |score|; ties go to the lowest index. Throws InvalidInput when empty.
std::size_t select_operator(std::span<const double> scores);

struct IterationRecord {
  std::size_t k = 0;
  std::size_t chosen_pool_index = 0;
  std::string chosen_label;
  double selection_score = 0.0;    // |theta*| or |g| of the chosen operator
  double initial_gradient = 0.0;   // <[H, tau]> of the chosen operator before appending
  double initial_param = 0.0;      // starting value of the new parameter
  double energy_after_global = 0.0;
  std::optional<double> error_vs_fci;
  std::vector<double> all_params;
  std::size_t global_func_evals = 0;
  std::size_t global_grad_evals = 0;
  bool global_converged = false;
  LedgerEntry ledger_entry;
  std::uint64_t cumulative_cost = 0;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct AdaptTrace {
  AdaptConfig config;
  std::string molecule;  // display name
  std::string source;    // integral file as named in the run config
  std::size_t n_qubits = 0;
  int n_electrons = 0;
  std::size_t pool_size = 0;
  std::size_t full_term_count = 0;
  double hf_energy = 0.0;
  std::optional<double> fci_energy;
  std::vector<IterationRecord> records;
  double final_energy = 0.0;
  Termination termination = Termination::KMax;
  CostLedger ledger;

  /// Sum of global-optimization evaluations across all iterations.
  std::size_t global_evals() const;

  friend bool operator==(const AdaptTrace&, const AdaptTrace&) = default;
};

/// "0->2" for singles, "1,0->3,2" for doubles.
std::string op_label(const pool::ExcitationOp& op);

/// Builds the configured pool (UCCSD or the Hamiltonian-informed subset).
pool::Pool build_pool(const chem::MoleculeData& m, const chem::SpinOrbitalHamiltonian& h,
                      const AdaptConfig& cfg);

/**
 * Adaptive ansatz growth. Each iteration scans the pool from the current
 * state (local optimizations or commutator gradients against cached
 * sub-Hamiltonians), stops when the best score is under threshold,
 * otherwise appends the best operator and re-optimizes every parameter.
 */
AdaptTrace run_adapt(const chem::SpinOrbitalHamiltonian& h, const chem::MoleculeData& m,
                     const pool::Pool& pool, const AdaptConfig& cfg,
                     std::optional<double> fci_energy = std::nullopt);

}  // namespace paramadapt::adapt
