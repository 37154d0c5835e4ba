// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace paramadapt::ops {

using Complex = std::complex<double>;

/// Coefficients with magnitude at or below this are dropped by simplification.
inline constexpr double kDropTol = 1e-12;

/// Word width of PauliString; fermionic mode counts above this are rejected.
inline constexpr std::size_t kMaxQubits = 64;

// ---------------------------------------------------------------------------
// Second-quantized operators
// ---------------------------------------------------------------------------

enum class Action : std::uint8_t { Create, Annihilate };

struct Ladder {
  std::size_t orbital = 0;
  Action action = Action::Create;

  friend bool operator==(const Ladder&, const Ladder&) = default;
};

/// Shorthands used throughout the tests and the Hamiltonian builder.
inline Ladder cre(std::size_t p) { return {p, Action::Create}; }
inline Ladder ann(std::size_t p) { return {p, Action::Annihilate}; }

struct FermionTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<Ladder> ladder;  // empty = scalar term
};

/**
 * A linear combination of ladder-operator products over a fixed number of
 * spin orbitals. Terms are stored in insertion order until `normal_order`
 * canonicalizes them.
 */
class FermionSum {
 public:
  explicit FermionSum(std::size_t n_modes);
  FermionSum(std::size_t n_modes, std::vector<FermionTerm> terms);

  std::size_t n_modes() const { return n_modes_; }
  const std::vector<FermionTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  FermionSum operator+(const FermionSum& other) const;
  FermionSum operator-(const FermionSum& other) const;
  FermionSum operator*(Complex scale) const;

 private:
  std::size_t n_modes_;
  std::vector<FermionTerm> terms_;
};

/**
 * Canonical form: creators left of annihilators, each group in strictly
 * decreasing orbital order. Anticommutation signs and contractions are
 * applied; like terms are merged and terms with |c| <= drop_tol removed.
 * Resulting terms are sorted by (length, ladder sequence).
 */
FermionSum normal_order(const FermionSum& s, double drop_tol = kDropTol);

FermionSum hermitian_conjugate(const FermionSum& s);

/// Spin-orbital indices touched by a term (as a bitmask).
std::uint64_t index_mask(const FermionTerm& t);

/// True when (creators..., annihilators...) are in canonical order.
bool is_normal_ordered(const FermionTerm& t);

// ---------------------------------------------------------------------------
// Pauli operators
// ---------------------------------------------------------------------------

enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/**
 * Tensor product of single-qubit Paulis in symplectic form: qubit q carries
 * X when only x bit q is set, Z when only z bit q is set, Y when both are set.
 * The word denotes the plain product of letters (Y itself, not iXZ).
 */
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  PauliString() = default;
  PauliString(std::uint64_t x_bits, std::uint64_t z_bits) : x(x_bits), z(z_bits) {}
  explicit PauliString(const std::map<std::size_t, Letter>& letters);

  Letter letter(std::size_t q) const;
  std::map<std::size_t, Letter> letters() const;
  std::uint64_t support() const { return x | z; }
  bool is_identity() const { return (x | z) == 0; }
  int y_count() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Lexicographic order over the sorted (qubit, letter) sequence, I<X<Y<Z.
bool lex_less(const PauliString& a, const PauliString& b);

struct PauliTerm {
  Complex coefficient{1.0, 0.0};
  PauliString word;
};

/// Single-qubit multiplication with exact phase tracking.
PauliTerm pauli_product(const PauliTerm& a, const PauliTerm& b);

class PauliSum {
 public:
  explicit PauliSum(std::size_t n_qubits);
  PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  PauliSum operator+(const PauliSum& other) const;
  PauliSum operator-(const PauliSum& other) const;
  PauliSum operator*(const PauliSum& other) const;
  PauliSum operator*(Complex scale) const;

  /// Conjugate transpose; Pauli words are Hermitian so only coefficients change.
  PauliSum adjoint() const;

  double max_imag() const;
  double max_real() const;

 private:
  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Merge like words, drop |c| <= drop_tol, sort with `lex_less`.
PauliSum simplify(const PauliSum& s, double drop_tol = kDropTol);

/**
 * Jordan-Wigner image. Qubit p holds the occupation of mode p and
 *   a_p  -> (X_p + iY_p)/2 Z_{p-1} ... Z_0
 *   a+_p -> (X_p - iY_p)/2 Z_{p-1} ... Z_0
 * Result is simplified with the default tolerance.
 */
PauliSum jordan_wigner(const FermionSum& s);

}  // namespace paramadapt::ops
