// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "paramadapt/chem.hpp"
#include "paramadapt/ops.hpp"
#include "paramadapt/sim.hpp"

namespace paramadapt::testing {

using ops::Complex;
using Dense = Eigen::MatrixXcd;

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(PARAMADAPT_FIXTURE_DIR) / name;
}

inline chem::MoleculeData load(const std::string& name) { return chem::load_fcidump(fixture(name)); }

// Ladder operator built directly in the occupation basis (no Pauli algebra).
inline Dense ladder_matrix(std::size_t p, bool create, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Dense m = Dense::Zero(dim, dim);
  const std::uint64_t bit = std::uint64_t{1} << p;
  for (std::uint64_t col = 0; col < dim; ++col) {
    if (bool(col & bit) == create) continue;
    const double sign = (std::popcount(col & (bit - 1)) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(col ^ bit), static_cast<Eigen::Index>(col)) = sign;
  }
  return m;
}

// Each term applied to every occupation basis state, right to left.
inline Dense fermion_matrix(const ops::FermionSum& s) {
  const std::size_t n = s.n_modes();
  const std::size_t dim = std::size_t{1} << n;
  Dense total = Dense::Zero(dim, dim);
  for (const auto& t : s.terms()) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      std::uint64_t occ = col;
      double sign = 1.0;
      bool alive = true;
      for (auto it = t.ladder.rbegin(); it != t.ladder.rend() && alive; ++it) {
        const std::uint64_t bit = std::uint64_t{1} << it->orbital;
        const bool create = it->action == ops::Action::Create;
        if (bool(occ & bit) == create) {
          alive = false;
          break;
        }
        if (std::popcount(occ & (bit - 1)) & 1) sign = -sign;
        occ ^= bit;
      }
      if (alive) total(static_cast<Eigen::Index>(occ), static_cast<Eigen::Index>(col)) += t.coefficient * sign;
    }
  }
  return total;
}

// Pauli sum as a dense matrix via single-qubit factors.
inline Dense pauli_matrix(const ops::PauliSum& s) {
  const std::size_t n = s.n_qubits();
  const std::size_t dim = std::size_t{1} << n;
  const Complex I(0, 1);
  auto elem = [&](ops::Letter l, int r, int c) -> Complex {
    switch (l) {
      case ops::Letter::I: return r == c ? 1.0 : 0.0;
      case ops::Letter::X: return r != c ? 1.0 : 0.0;
      case ops::Letter::Y: return r == c ? Complex(0) : (r == 1 ? I : -I);
      case ops::Letter::Z: return r == c ? (r == 0 ? 1.0 : -1.0) : 0.0;
    }
    return 0.0;
  };
  Dense m = Dense::Zero(dim, dim);
  for (const auto& t : s.terms()) {
    std::size_t flip = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const ops::Letter l = t.word.letter(q);
      if (l == ops::Letter::X || l == ops::Letter::Y) flip |= std::size_t{1} << q;
    }
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t r = c ^ flip;
      Complex v = t.coefficient;
      for (std::size_t q = 0; q < n; ++q) {
        v *= elem(t.word.letter(q), int((r >> q) & 1U), int((c >> q) & 1U));
      }
      m(Eigen::Index(r), Eigen::Index(c)) += v;
    }
  }
  return m;
}

inline Eigen::VectorXcd to_eigen(const sim::StateVector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t k = 0; k < s.dim(); ++k) v[Eigen::Index(k)] = s[k];
  return v;
}

inline sim::StateVector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& z : a) {
    z = Complex(g(rng), g(rng));
    norm += std::norm(z);
  }
  for (auto& z : a) z /= std::sqrt(norm);
  return sim::StateVector(n, std::move(a));
}

inline double max_abs(const Dense& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace paramadapt::testing
