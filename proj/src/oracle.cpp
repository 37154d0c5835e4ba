// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramadapt/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <random>
#include <unordered_map>

#include "paramadapt/errors.hpp"

namespace paramadapt::oracle {

namespace {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Spin-orbital integrals from spatial ones (alpha even, beta odd).
double h_so(const chem::MoleculeData& m, std::size_t p, std::size_t q) {
  return (p & 1U) == (q & 1U) ? m.h1(p / 2, q / 2) : 0.0;
}

// <pq|rs> = (pr|qs) with spin deltas.
double g_so(const chem::MoleculeData& m, std::size_t p, std::size_t q, std::size_t r,
            std::size_t s) {
  if ((p & 1U) != (r & 1U) || (q & 1U) != (s & 1U)) return 0.0;
  return m.h2(p / 2, r / 2, q / 2, s / 2);
}

double g_anti(const chem::MoleculeData& m, std::size_t p, std::size_t q, std::size_t r,
              std::size_t s) {
  return g_so(m, p, q, r, s) - g_so(m, p, q, s, r);
}

std::vector<std::size_t> occupied(std::uint64_t det) {
  std::vector<std::size_t> out;
  for (; det; det &= det - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(det)));
  return out;
}

// Applies a_p (create = false) or a+_p (create = true); returns the sign.
int ladder(std::uint64_t& det, std::size_t p, bool create) {
  const std::uint64_t bit = std::uint64_t{1} << p;
  const bool occupied_p = det & bit;
  if (occupied_p == create) return 0;
  const int sign = (std::popcount(det & (bit - 1)) & 1) ? -1 : 1;
  det ^= bit;
  return sign;
}

}  // namespace

Sector sector_of(const chem::MoleculeData& m) { return {m.n_alpha(), m.n_beta()}; }

std::vector<std::uint64_t> sector_basis(std::size_t n_so, Sector sector) {
  const std::size_t n_spatial = n_so / 2;
  auto strings = [n_spatial](std::size_t k) {
    std::vector<std::uint64_t> out;
    if (k > n_spatial) return out;
    if (k == 0) return std::vector<std::uint64_t>{0};
    // Gosper's hack over spatial-orbital strings.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n_spatial;
    while (s < limit) {
      out.push_back(s);
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
  };
  auto spread = [n_spatial](std::uint64_t s, unsigned offset) {
    std::uint64_t out = 0;
    for (std::size_t p = 0; p < n_spatial; ++p) {
      if ((s >> p) & 1U) out |= std::uint64_t{1} << (2 * p + offset);
    }
    return out;
  };
  std::vector<std::uint64_t> basis;
  for (auto a : strings(sector.n_alpha)) {
    for (auto b : strings(sector.n_beta)) basis.push_back(spread(a, 0) | spread(b, 1));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

SparseMatrix hamiltonian_matrix(const ops::PauliSum& h) {
  if (h.n_qubits() > kMaxMatrixQubits) {
    throw InvalidInput("matrix oracle limited to " + std::to_string(kMaxMatrixQubits) + " qubits");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.n_qubits());
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(h.size() * static_cast<std::size_t>(dim));
  for (const auto& t : h.terms()) {
    const Complex c = t.coefficient * kIPow[t.word.y_count() % 4];
    for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
      const bool neg = std::popcount(col & t.word.z) & 1;
      trips.emplace_back(static_cast<Eigen::Index>(col ^ t.word.x), static_cast<Eigen::Index>(col),
                         neg ? -c : c);
    }
  }
  SparseMatrix a(dim, dim);
  a.setFromTriplets(trips.begin(), trips.end());
  a.prune(Complex{0.0, 0.0});
  return a;
}

SparseMatrix hamiltonian_matrix(const ops::PauliSum& h, const std::vector<std::uint64_t>& basis) {
  std::unordered_map<std::uint64_t, Eigen::Index> pos;
  pos.reserve(basis.size() * 2);
  for (std::size_t k = 0; k < basis.size(); ++k) pos.emplace(basis[k], static_cast<Eigen::Index>(k));
  std::vector<Eigen::Triplet<Complex>> trips;
  for (const auto& t : h.terms()) {
    const Complex c = t.coefficient * kIPow[t.word.y_count() % 4];
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::uint64_t col = basis[k];
      auto it = pos.find(col ^ t.word.x);
      if (it == pos.end()) continue;
      const bool neg = std::popcount(col & t.word.z) & 1;
      trips.emplace_back(it->second, static_cast<Eigen::Index>(k), neg ? -c : c);
    }
  }
  const auto dim = static_cast<Eigen::Index>(basis.size());
  SparseMatrix a(dim, dim);
  a.setFromTriplets(trips.begin(), trips.end());
  return a;
}

LanczosResult lanczos_lowest(const SparseMatrix& a, double tol) {
  const Eigen::Index dim = a.rows();
  if (dim == 0 || a.cols() != dim) throw OracleFailure("Lanczos needs a non-empty square matrix");

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CVec v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) v[k] = Complex(1.0 + 0.5 * u(rng), 0.0);
  v.normalize();

  std::vector<CVec> basis{v};
  std::vector<double> alpha, beta;
  LanczosResult out;
  for (Eigen::Index j = 0; j < dim; ++j) {
    CVec w = a * basis.back();
    alpha.push_back(basis.back().dot(w).real());
    // Two rounds of full Gram-Schmidt keep the basis orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= q.dot(w) * q;
    }
    const double b = w.norm();

    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = Eigen::VectorXd::Zero(std::max<Eigen::Index>(m - 1, 0));
    for (Eigen::Index k = 0; k + 1 < m; ++k) sub[k] = beta[static_cast<std::size_t>(k)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    out.eigenvalue = es.eigenvalues()[0];
    out.residual = b * std::abs(es.eigenvectors()(m - 1, 0));
    out.iterations = static_cast<std::size_t>(m);
    if (out.residual <= tol || b < 1e-14 || m == dim) return out;

    beta.push_back(b);
    basis.push_back(w / b);
  }
  throw OracleFailure("Lanczos did not converge");
}

double fci_energy_qubit(const chem::SpinOrbitalHamiltonian& h, Sector sector) {
  const auto basis = sector_basis(h.n_spin_orbitals(), sector);
  if (basis.empty()) throw InvalidInput("empty particle-number sector");
  const SparseMatrix a = hamiltonian_matrix(h.qubit_form(), basis);
  const LanczosResult r = lanczos_lowest(a);
  if (r.residual > 1e-10) throw OracleFailure("Lanczos residual above tolerance");
  return r.eigenvalue + h.constant();
}

double slater_condon_element(const chem::MoleculeData& m, std::uint64_t bra, std::uint64_t ket) {
  if (std::popcount(bra) != std::popcount(ket)) return 0.0;
  const std::uint64_t diff = bra ^ ket;
  const int nd = std::popcount(diff);
  if (nd == 0) {
    const auto occ = occupied(ket);
    double e = 0.0;
    for (auto i : occ) e += h_so(m, i, i);
    for (auto i : occ) {
      for (auto j : occ) e += 0.5 * g_anti(m, i, j, i, j);
    }
    return e;
  }
  if (nd == 2) {
    const auto i = static_cast<std::size_t>(std::countr_zero(ket & diff));
    const auto a = static_cast<std::size_t>(std::countr_zero(bra & diff));
    std::uint64_t d = ket;
    int sign = ladder(d, i, false);
    sign *= ladder(d, a, true);
    double v = h_so(m, a, i);
    for (auto j : occupied(ket)) {
      if (j != i) v += g_anti(m, a, j, i, j);
    }
    return sign * v;
  }
  if (nd == 4) {
    const auto from = occupied(ket & diff);
    const auto to = occupied(bra & diff);
    const std::size_t i = from[0], j = from[1], a = to[0], b = to[1];
    // |bra> = sign * a+_a a+_b a_j a_i |ket>
    std::uint64_t d = ket;
    int sign = ladder(d, i, false);
    sign *= ladder(d, j, false);
    sign *= ladder(d, b, true);
    sign *= ladder(d, a, true);
    return sign * g_anti(m, a, b, i, j);
  }
  return 0.0;
}

double fci_energy_determinant(const chem::MoleculeData& m) {
  m.validate();
  const auto dets = sector_basis(m.n_spin_orbitals(), sector_of(m));
  const auto dim = static_cast<Eigen::Index>(dets.size());
  if (dim == 0) throw InvalidInput("empty determinant space");
  Eigen::MatrixXd ci(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c <= r; ++c) {
      const double v = slater_condon_element(m, dets[static_cast<std::size_t>(r)],
                                             dets[static_cast<std::size_t>(c)]);
      ci(r, c) = v;
      ci(c, r) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ci, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw OracleFailure("CI diagonalization failed");
  return es.eigenvalues()[0] + m.core_energy();
}

double slater_condon_hf(const chem::MoleculeData& m) {
  const auto occ = occupied(chem::hartree_fock_reference(m));
  double e = m.core_energy();
  for (auto i : occ) e += h_so(m, i, i);
  for (auto i : occ) {
    for (auto j : occ) e += 0.5 * (g_so(m, i, j, i, j) - g_so(m, i, j, j, i));
  }
  return e;
}

}  // namespace paramadapt::oracle
