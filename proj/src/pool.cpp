// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramadapt/pool.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "paramadapt/errors.hpp"

namespace paramadapt::pool {

namespace {

// Tabulates tau on the computational basis from its Pauli form. All words of
// a UCC generator flip the same qubits, so tau|n> = d(n) |n ^ flip>.
std::vector<Transition> tabulate(const ops::PauliSum& g) {
  if (g.empty()) return {};
  const std::uint64_t flip = g.terms().front().word.x;
  for (const auto& t : g.terms()) {
    if (t.word.x != flip) throw std::logic_error("generator words do not share a flip mask");
  }
  static const ops::Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<std::pair<ops::Complex, std::uint64_t>> phased;
  for (const auto& t : g.terms()) {
    phased.emplace_back(t.coefficient * kIPow[t.word.y_count() % 4], t.word.z);
  }
  std::vector<Transition> out;
  const std::uint64_t dim = std::uint64_t{1} << g.n_qubits();
  for (std::uint64_t n = 0; n < dim; ++n) {
    const std::uint64_t partner = n ^ flip;
    if (partner < n) continue;
    ops::Complex d{};
    for (const auto& [c, z] : phased) d += (std::popcount(n & z) & 1) ? -c : c;
    if (std::abs(d) < 0.5) continue;
    if (std::abs(d.imag()) > 1e-12) throw std::logic_error("generator is not real");
    out.push_back({n, partner, d.real()});
  }
  return out;
}

ExcitationOp finish(Kind kind, std::vector<std::size_t> idx, ops::FermionSum gen) {
  ExcitationOp op;
  op.kind = kind;
  op.indices = std::move(idx);
  op.generator = ops::normal_order(gen);
  op.qubit_generator = ops::jordan_wigner(op.generator);
  op.transitions = tabulate(op.qubit_generator);
  return op;
}

void check_distinct(const std::vector<std::size_t>& idx, std::size_t n) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= n) throw InvalidInput("excitation index out of range");
    for (std::size_t l = 0; l < k; ++l) {
      if (idx[k] == idx[l]) throw InvalidInput("excitation indices must be distinct");
    }
  }
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::uint64_t ExcitationOp::index_mask() const {
  std::uint64_t m = 0;
  for (auto p : indices) m |= std::uint64_t{1} << p;
  return m;
}

ExcitationOp make_single(std::size_t i, std::size_t a, std::size_t n) {
  check_distinct({i, a}, n);
  if ((i & 1U) != (a & 1U)) throw InvalidInput("single excitation must conserve spin");
  using ops::ann;
  using ops::cre;
  ops::FermionSum gen(n, {{1.0, {cre(a), ann(i)}}, {-1.0, {cre(i), ann(a)}}});
  return finish(Kind::Single, {i, a}, gen);
}

ExcitationOp make_double(std::size_t i, std::size_t j, std::size_t a, std::size_t b,
                         std::size_t n) {
  check_distinct({i, j, a, b}, n);
  if (i < j || a < b) throw InvalidInput("double excitation indices need i > j and a > b");
  if ((i & 1U) + (j & 1U) != (a & 1U) + (b & 1U)) {
    throw InvalidInput("double excitation must conserve spin");
  }
  using ops::ann;
  using ops::cre;
  ops::FermionSum gen(n, {{1.0, {cre(a), cre(b), ann(i), ann(j)}},
                          {-1.0, {cre(i), cre(j), ann(a), ann(b)}}});
  return finish(Kind::Double, {i, j, a, b}, gen);
}

Pool uccsd_pool(const chem::MoleculeData& m) {
  const std::size_t n = m.n_spin_orbitals();
  const chem::Occupation hf = chem::hartree_fock_reference(m);
  std::vector<std::size_t> occ, virt;
  for (std::size_t p = 0; p < n; ++p) ((hf >> p) & 1U ? occ : virt).push_back(p);

  auto alpha = [](std::size_t p) { return (p & 1U) == 0 ? 1 : 0; };
  Pool out;
  for (auto i : occ) {
    for (auto a : virt) {
      if (alpha(i) == alpha(a)) out.push_back(make_single(i, a, n));
    }
  }
  // occ/virt are ascending, so iterating i > j and a > b this way gives
  // lexicographic (i, j, a, b) order.
  for (auto i : occ) {
    for (auto j : occ) {
      if (j >= i) break;
      for (auto a : virt) {
        for (auto b : virt) {
          if (b >= a) break;
          if (alpha(i) + alpha(j) != alpha(a) + alpha(b)) continue;
          out.push_back(make_double(i, j, a, b, n));
        }
      }
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k].pool_index = k;
  return out;
}

Pool hi_uccsd_filter(const Pool& pool, const chem::SpinOrbitalHamiltonian& h, double eta) {
  if (!(eta >= 0.0)) throw InvalidInput("eta must be non-negative");
  std::set<std::vector<std::size_t>> keys;
  for (const auto& t : h.body().terms()) {
    if (!(std::abs(t.coefficient) > eta)) continue;
    std::vector<std::size_t> idx;
    for (const auto& l : t.ladder) idx.push_back(l.orbital);
    keys.insert(sorted(std::move(idx)));
  }
  Pool out;
  for (const auto& op : pool) {
    if (keys.count(sorted(op.indices))) out.push_back(op);
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k].pool_index = k;
  return out;
}

}  // namespace paramadapt::pool
