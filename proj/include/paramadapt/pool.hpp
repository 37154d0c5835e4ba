// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "paramadapt/chem.hpp"
#include "paramadapt/ops.hpp"

namespace paramadapt::pool {

enum class Kind { Single, Double };

/// One basis pair coupled by a generator: tau|lower> = amplitude |upper>,
/// tau|upper> = -amplitude |lower>.
struct Transition {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  double amplitude = 0.0;
};

/**
 * Anti-Hermitian UCC generator
 *   single (i, a):       a+_a a_i - a+_i a_a
 *   double (i, j, a, b): a+_a a+_b a_i a_j - a+_i a+_j a_a a_b,  i > j, a > b
 * `transitions` is the generator's action on the computational basis,
 * derived from `qubit_generator`; it is what the simulator uses to apply
 * the closed-form exponential.
 */
struct ExcitationOp {
  Kind kind = Kind::Single;
  std::vector<std::size_t> indices;
  ops::FermionSum generator{0};
  ops::PauliSum qubit_generator{0};
  std::vector<Transition> transitions;
  std::size_t pool_index = 0;

  std::uint64_t index_mask() const;
  std::size_t n_qubits() const { return generator.n_modes(); }
};

using Pool = std::vector<ExcitationOp>;

ExcitationOp make_single(std::size_t i, std::size_t a, std::size_t n_spin_orbitals);
ExcitationOp make_double(std::size_t i, std::size_t j, std::size_t a, std::size_t b,
                         std::size_t n_spin_orbitals);

/// Spin- and particle-conserving singles then doubles relative to the HF reference,
/// each block sorted lexicographically by index tuple.
Pool uccsd_pool(const chem::MoleculeData& m);

/**
 * Keeps an excitation when `h` contains a one-body (singles) or two-body
 * (doubles) term over exactly the excitation's index set with |c| > eta.
 * Pool indices are renumbered.
 */
Pool hi_uccsd_filter(const Pool& pool, const chem::SpinOrbitalHamiltonian& h, double eta);

}  // namespace paramadapt::pool
