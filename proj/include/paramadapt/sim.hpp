// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "paramadapt/chem.hpp"
#include "paramadapt/ops.hpp"
#include "paramadapt/pool.hpp"

namespace paramadapt::sim {

using ops::Complex;

/// Dense 2^N amplitude register; basis index bit p is the occupation of qubit p.
class StateVector {
 public:
  explicit StateVector(std::size_t n_qubits);
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  std::size_t n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  Complex operator[](std::size_t k) const { return amps_[k]; }
  Complex& operator[](std::size_t k) { return amps_[k]; }

  double norm() const;
  Complex inner(const StateVector& other) const;  // <this|other>

 private:
  std::size_t n_;
  std::vector<Complex> amps_;
};

/**
 * Pauli sum prepared for repeated application: words are grouped by their
 * flip pattern so each group touches the register once.
 */
class PauliOperator {
 public:
  explicit PauliOperator(const ops::PauliSum& h);

  std::size_t n_qubits() const { return n_; }
  std::size_t term_count() const { return n_terms_; }

  /// out = H in. Zero amplitudes of `in` are skipped.
  void apply(std::span<const Complex> in, std::span<Complex> out) const;
  StateVector apply(const StateVector& s) const;
  /// <s|H|s> without materializing H|s>.
  Complex expectation(const StateVector& s) const;

 private:
  struct Word {
    Complex coefficient;  // includes the i^{#Y} phase
    std::uint64_t z;
  };
  struct Group {
    std::uint64_t flip;
    std::vector<Word> words;
  };
  std::size_t n_;
  std::size_t n_terms_ = 0;
  std::vector<Group> groups_;
};

/// Real part of <s|H|s>; throws ExpectationNotReal when |Im| > 1e-10.
double expectation(const StateVector& s, const ops::PauliSum& h);
double expectation(const StateVector& s, const PauliOperator& h);

StateVector prepare_reference(chem::Occupation mask, std::size_t n_qubits);

/// tau|s>.
StateVector apply_generator(const StateVector& s, const pool::ExcitationOp& op);
/// e^{theta tau}|s> = (I + sin(theta) tau + (1 - cos(theta)) tau^2)|s>.
StateVector apply_excitation(const StateVector& s, const pool::ExcitationOp& op, double theta);
void apply_excitation_inplace(StateVector& s, const pool::ExcitationOp& op, double theta);

struct AnsatzElement {
  pool::ExcitationOp op;
  double theta = 0.0;
};

/// Elements act on the reference in order: the last element is applied last.
struct Ansatz {
  chem::Occupation reference = 0;
  std::size_t n_qubits = 0;
  std::vector<AnsatzElement> elements;

  std::vector<double> thetas() const;
  void set_thetas(std::span<const double> t);
};

StateVector apply_ansatz(const Ansatz& a);

double energy(const Ansatz& a, const chem::SpinOrbitalHamiltonian& h);
double energy(const Ansatz& a, const PauliOperator& h, double constant);

struct EnergyGradient {
  double energy = 0.0;
  std::vector<double> gradient;
};

/// Exact dE/dtheta_k by one forward pass and one reverse (adjoint) sweep.
EnergyGradient energy_and_gradient(const Ansatz& a, const PauliOperator& h, double constant);
std::vector<double> gradient(const Ansatz& a, const chem::SpinOrbitalHamiltonian& h);

/// g_i = <s|[H, tau_i]|s>, each evaluated with the operator's own sub-Hamiltonian.
std::vector<double> pool_gradients(const StateVector& s, const pool::Pool& pool,
                                   std::span<const PauliOperator> sub_hamiltonians);
std::vector<double> pool_gradients(const StateVector& s, const pool::Pool& pool,
                                   const chem::SpinOrbitalHamiltonian& h);

/**
 * theta -> <base|e^{-theta tau} H e^{theta tau}|base> for a single appended
 * generator. With u0 = |base>, u1 = tau|base>, u2 = tau^2|base> the state is
 * u0 + sin(theta) u1 + (1 - cos(theta)) u2, so the landscape is fixed by the
 * six projections Re<u_a|H|u_b>.
 */
class LocalLandscape {
 public:
  LocalLandscape(const StateVector& base, const pool::ExcitationOp& op, const PauliOperator& h);

  double value(double theta) const;
  double derivative(double theta) const;

 private:
  double m00_, m11_, m22_, m01_, m02_, m12_;
};

}  // namespace paramadapt::sim
