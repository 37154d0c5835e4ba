// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

#include "paramadapt/ops.hpp"

namespace paramadapt {
namespace pool {
struct ExcitationOp;
}

namespace chem {

/// Occupation bitmask over spin orbitals; bit p set means spin orbital p is filled.
using Occupation = std::uint64_t;

/**
 * Spatial-orbital electron integrals. Two-body integrals are in chemist
 * notation (pq|rs) and stored fully expanded under 8-fold symmetry.
 */
class MoleculeData {
 public:
  MoleculeData(std::size_t n_spatial, int n_electrons, int ms2, double core_energy);

  std::size_t n_spatial() const { return n_; }
  std::size_t n_spin_orbitals() const { return 2 * n_; }
  int n_electrons() const { return n_electrons_; }
  int ms2() const { return ms2_; }
  double core_energy() const { return core_; }

  double h1(std::size_t p, std::size_t q) const { return h1_[p * n_ + q]; }
  double h2(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return h2_[((p * n_ + q) * n_ + r) * n_ + s];
  }

  /// Sets h1[p,q] and h1[q,p].
  void set_h1(std::size_t p, std::size_t q, double v);
  /// Sets all eight permutations of (pq|rs).
  void set_h2(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double v);
  void set_core_energy(double e) { core_ = e; }

  std::size_t n_alpha() const { return static_cast<std::size_t>((n_electrons_ + ms2_) / 2); }
  std::size_t n_beta() const { return static_cast<std::size_t>((n_electrons_ - ms2_) / 2); }

  /// Throws InvalidInput when electron count, spin, or integral symmetry is inconsistent.
  void validate() const;

 private:
  std::size_t n_;
  int n_electrons_;
  int ms2_;
  double core_;
  std::vector<double> h1_;
  std::vector<double> h2_;
};

/// Parses FCIDUMP text (1-based indices, chemist notation). Throws ParseError.
MoleculeData parse_fcidump(std::istream& in);
MoleculeData parse_fcidump(std::string_view text);
MoleculeData load_fcidump(const std::filesystem::path& path);

/**
 * Normal-ordered fermionic Hamiltonian with its cached Jordan-Wigner image.
 * Spin orbital 2p is the alpha and 2p+1 the beta component of spatial
 * orbital p. The constant (core energy) is kept apart from `body`.
 */
class SpinOrbitalHamiltonian {
 public:
  SpinOrbitalHamiltonian(ops::FermionSum body, double constant);

  const ops::FermionSum& body() const { return body_; }
  const ops::PauliSum& qubit_form() const { return qubit_form_; }
  std::size_t fermionic_term_count() const { return body_.terms().size(); }
  double constant() const { return constant_; }
  std::size_t n_spin_orbitals() const { return body_.n_modes(); }

 private:
  ops::FermionSum body_;
  ops::PauliSum qubit_form_;
  double constant_;
};

SpinOrbitalHamiltonian assemble_hamiltonian(const MoleculeData& m);

/// Aufbau fill: n_alpha alpha and n_beta beta orbitals in ascending spatial index.
Occupation hartree_fock_reference(const MoleculeData& m);

/// Terms of `h` whose spin-orbital index set meets `index_mask`; constant dropped.
SpinOrbitalHamiltonian sub_hamiltonian(const SpinOrbitalHamiltonian& h, std::uint64_t index_mask);
SpinOrbitalHamiltonian sub_hamiltonian(const SpinOrbitalHamiltonian& h,
                                       const pool::ExcitationOp& op);

}  // namespace chem
}  // namespace paramadapt
