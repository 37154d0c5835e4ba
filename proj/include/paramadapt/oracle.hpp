// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Sparse>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "paramadapt/chem.hpp"
#include "paramadapt/ops.hpp"

// Reference energies computed independently of the adaptive machinery:
// two exact-diagonalization routes (qubit matrix vs Slater determinants)
// plus the closed-form Hartree-Fock energy.
namespace paramadapt::oracle {

using SparseMatrix = Eigen::SparseMatrix<std::complex<double>>;

inline constexpr std::size_t kMaxMatrixQubits = 16;

/// Particle-number / S_z sector. Alpha spin orbitals are even, beta odd.
struct Sector {
  std::size_t n_alpha = 0;
  std::size_t n_beta = 0;
};

Sector sector_of(const chem::MoleculeData& m);

/// Basis indices (ascending) of all occupations in the sector.
std::vector<std::uint64_t> sector_basis(std::size_t n_spin_orbitals, Sector sector);

/// Full 2^N x 2^N matrix of a Pauli sum. N <= 16.
SparseMatrix hamiltonian_matrix(const ops::PauliSum& h);

/// Matrix restricted to the listed basis states (projector applied first).
SparseMatrix hamiltonian_matrix(const ops::PauliSum& h, const std::vector<std::uint64_t>& basis);

struct LanczosResult {
  double eigenvalue = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// Lowest eigenvalue of a Hermitian sparse matrix; full reorthogonalization.
LanczosResult lanczos_lowest(const SparseMatrix& a, double tol = 1e-10);

/// Ground energy of h.qubit_form in the sector, plus h.constant.
double fci_energy_qubit(const chem::SpinOrbitalHamiltonian& h, Sector sector);

/// Ground energy from the Slater-determinant CI matrix built on the integrals.
double fci_energy_determinant(const chem::MoleculeData& m);

/// Slater-Condon matrix element <bra|H|ket> between determinants (no core energy).
double slater_condon_element(const chem::MoleculeData& m, std::uint64_t bra, std::uint64_t ket);

/// E_HF = sum_i h_ii + 1/2 sum_ij <ij||ij> + core, over HF spin orbitals.
double slater_condon_hf(const chem::MoleculeData& m);

}  // namespace paramadapt::oracle
