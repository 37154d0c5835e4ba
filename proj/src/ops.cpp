// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramadapt/ops.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>
#include <utility>

#include "paramadapt/errors.hpp"

namespace paramadapt::ops {

namespace {

void check_modes(std::size_t n_modes) {
  if (n_modes > kMaxQubits) {
    throw InvalidInput("mode count " + std::to_string(n_modes) + " exceeds " +
                       std::to_string(kMaxQubits));
  }
}

struct LadderLess {
  bool operator()(const std::vector<Ladder>& a, const std::vector<Ladder>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].action != b[k].action) return a[k].action < b[k].action;
      if (a[k].orbital != b[k].orbital) return a[k].orbital > b[k].orbital;
    }
    return false;
  }
};

// Position of the first adjacent pair violating canonical order, or npos.
std::size_t first_violation(const std::vector<Ladder>& l) {
  for (std::size_t k = 0; k + 1 < l.size(); ++k) {
    const Ladder& u = l[k];
    const Ladder& v = l[k + 1];
    if (u.action == Action::Annihilate && v.action == Action::Create) return k;
    if (u.action == v.action && u.orbital <= v.orbital) return k;
  }
  return std::string::npos;
}

}  // namespace

// ---------------------------------------------------------------------------
// FermionSum
// ---------------------------------------------------------------------------

FermionSum::FermionSum(std::size_t n_modes) : n_modes_(n_modes) { check_modes(n_modes); }

FermionSum::FermionSum(std::size_t n_modes, std::vector<FermionTerm> terms)
    : n_modes_(n_modes), terms_(std::move(terms)) {
  check_modes(n_modes);
  for (const auto& t : terms_) {
    for (const auto& l : t.ladder) {
      if (l.orbital >= n_modes_) {
        throw InvalidInput("orbital index " + std::to_string(l.orbital) +
                           " out of range for " + std::to_string(n_modes_) + " modes");
      }
    }
  }
}

FermionSum FermionSum::operator+(const FermionSum& other) const {
  std::vector<FermionTerm> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return FermionSum(std::max(n_modes_, other.n_modes_), std::move(out));
}

FermionSum FermionSum::operator-(const FermionSum& other) const { return *this + other * -1.0; }

FermionSum FermionSum::operator*(Complex scale) const {
  std::vector<FermionTerm> out = terms_;
  for (auto& t : out) t.coefficient *= scale;
  return FermionSum(n_modes_, std::move(out));
}

FermionSum normal_order(const FermionSum& s, double drop_tol) {
  std::map<std::vector<Ladder>, Complex, LadderLess> acc;
  std::vector<FermionTerm> work;
  for (const auto& t : s.terms()) {
    work.push_back(t);
    while (!work.empty()) {
      FermionTerm cur = std::move(work.back());
      work.pop_back();
      for (;;) {
        const std::size_t k = first_violation(cur.ladder);
        if (k == std::string::npos) {
          acc[cur.ladder] += cur.coefficient;
          break;
        }
        Ladder& u = cur.ladder[k];
        Ladder& v = cur.ladder[k + 1];
        if (u.action == v.action) {
          if (u.orbital == v.orbital) break;  // a_p a_p = 0
          std::swap(u, v);
          cur.coefficient = -cur.coefficient;
          continue;
        }
        // a_p a+_q = delta_pq - a+_q a_p
        if (u.orbital == v.orbital) {
          FermionTerm contracted;
          contracted.coefficient = cur.coefficient;
          contracted.ladder.reserve(cur.ladder.size() - 2);
          for (std::size_t j = 0; j < cur.ladder.size(); ++j) {
            if (j != k && j != k + 1) contracted.ladder.push_back(cur.ladder[j]);
          }
          work.push_back(std::move(contracted));
        }
        std::swap(u, v);
        cur.coefficient = -cur.coefficient;
      }
    }
  }
  std::vector<FermionTerm> out;
  out.reserve(acc.size());
  for (auto& [ladder, c] : acc) {
    if (std::abs(c) > drop_tol) out.push_back({c, ladder});
  }
  return FermionSum(s.n_modes(), std::move(out));
}

FermionSum hermitian_conjugate(const FermionSum& s) {
  std::vector<FermionTerm> out;
  out.reserve(s.terms().size());
  for (const auto& t : s.terms()) {
    FermionTerm c;
    c.coefficient = std::conj(t.coefficient);
    c.ladder.reserve(t.ladder.size());
    for (auto it = t.ladder.rbegin(); it != t.ladder.rend(); ++it) {
      c.ladder.push_back({it->orbital, it->action == Action::Create ? Action::Annihilate
                                                                    : Action::Create});
    }
    out.push_back(std::move(c));
  }
  return FermionSum(s.n_modes(), std::move(out));
}

std::uint64_t index_mask(const FermionTerm& t) {
  std::uint64_t m = 0;
  for (const auto& l : t.ladder) m |= std::uint64_t{1} << l.orbital;
  return m;
}

bool is_normal_ordered(const FermionTerm& t) {
  return first_violation(t.ladder) == std::string::npos;
}

// ---------------------------------------------------------------------------
// PauliString / PauliTerm
// ---------------------------------------------------------------------------

PauliString::PauliString(const std::map<std::size_t, Letter>& letters) {
  for (const auto& [q, l] : letters) {
    if (q >= kMaxQubits) throw InvalidInput("qubit index out of range");
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (l == Letter::X || l == Letter::Y) x |= bit;
    if (l == Letter::Z || l == Letter::Y) z |= bit;
  }
}

Letter PauliString::letter(std::size_t q) const {
  const bool xb = (x >> q) & 1U;
  const bool zb = (z >> q) & 1U;
  if (xb && zb) return Letter::Y;
  if (xb) return Letter::X;
  if (zb) return Letter::Z;
  return Letter::I;
}

std::map<std::size_t, Letter> PauliString::letters() const {
  std::map<std::size_t, Letter> out;
  for (std::uint64_t s = support(); s; s &= s - 1) {
    const auto q = static_cast<std::size_t>(std::countr_zero(s));
    out.emplace(q, letter(q));
  }
  return out;
}

int PauliString::y_count() const { return std::popcount(x & z); }

bool lex_less(const PauliString& a, const PauliString& b) {
  const std::uint64_t diff = (a.x ^ b.x) | (a.z ^ b.z);
  if (diff == 0) return false;
  const int q = std::countr_zero(diff);
  const std::uint64_t upto = q == 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << q) - 1;
  const Letter la = a.letter(static_cast<std::size_t>(q));
  const Letter lb = b.letter(static_cast<std::size_t>(q));
  // A sequence that stops at a shared prefix sorts first; otherwise the one
  // whose next entry sits on the lower qubit sorts first.
  if (la == Letter::I) return (a.support() & ~upto) == 0;
  if (lb == Letter::I) return (b.support() & ~upto) != 0;
  return la < lb;
}

PauliTerm pauli_product(const PauliTerm& a, const PauliTerm& b) {
  // Powers of i for the ordered product of two distinct non-identity letters.
  static constexpr int kPhase[4][4] = {
      {0, 0, 0, 0},  // I
      {0, 0, 1, 3},  // X: XY = iZ, XZ = -iY
      {0, 3, 0, 1},  // Y: YX = -iZ, YZ = iX
      {0, 1, 3, 0},  // Z: ZX = iY, ZY = -iX
  };
  int power = 0;
  for (std::uint64_t s = a.word.support() & b.word.support(); s; s &= s - 1) {
    const auto q = static_cast<std::size_t>(std::countr_zero(s));
    power += kPhase[static_cast<int>(a.word.letter(q))][static_cast<int>(b.word.letter(q))];
  }
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  PauliTerm out;
  out.coefficient = a.coefficient * b.coefficient * kIPow[power % 4];
  out.word = PauliString(a.word.x ^ b.word.x, a.word.z ^ b.word.z);
  return out;
}

// ---------------------------------------------------------------------------
// PauliSum
// ---------------------------------------------------------------------------

PauliSum::PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) { check_modes(n_qubits); }

PauliSum::PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  check_modes(n_qubits);
  const std::uint64_t allowed =
      n_qubits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_qubits) - 1;
  for (const auto& t : terms_) {
    if (t.word.support() & ~allowed) throw InvalidInput("Pauli term acts outside register");
  }
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  std::vector<PauliTerm> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return PauliSum(std::max(n_qubits_, other.n_qubits_), std::move(out));
}

PauliSum PauliSum::operator-(const PauliSum& other) const { return *this + other * -1.0; }

PauliSum PauliSum::operator*(const PauliSum& other) const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) out.push_back(pauli_product(a, b));
  }
  return simplify(PauliSum(std::max(n_qubits_, other.n_qubits_), std::move(out)), 0.0);
}

PauliSum PauliSum::operator*(Complex scale) const {
  std::vector<PauliTerm> out = terms_;
  for (auto& t : out) t.coefficient *= scale;
  return PauliSum(n_qubits_, std::move(out));
}

PauliSum PauliSum::adjoint() const {
  std::vector<PauliTerm> out = terms_;
  for (auto& t : out) t.coefficient = std::conj(t.coefficient);
  return PauliSum(n_qubits_, std::move(out));
}

double PauliSum::max_imag() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coefficient.imag()));
  return m;
}

double PauliSum::max_real() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coefficient.real()));
  return m;
}

PauliSum simplify(const PauliSum& s, double drop_tol) {
  struct WordHash {
    std::size_t operator()(const PauliString& w) const noexcept {
      return std::hash<std::uint64_t>{}(w.x * 0x9E3779B97F4A7C15ULL ^ w.z);
    }
  };
  std::unordered_map<PauliString, Complex, WordHash> acc;
  acc.reserve(s.size());
  for (const auto& t : s.terms()) acc[t.word] += t.coefficient;
  std::vector<PauliTerm> out;
  out.reserve(acc.size());
  for (const auto& [w, c] : acc) {
    if (std::abs(c) > drop_tol) out.push_back({c, w});
  }
  std::sort(out.begin(), out.end(),
            [](const PauliTerm& a, const PauliTerm& b) { return lex_less(a.word, b.word); });
  return PauliSum(s.n_qubits(), std::move(out));
}

PauliSum jordan_wigner(const FermionSum& s) {
  const std::size_t n = s.n_modes();
  std::vector<PauliTerm> out;
  for (const auto& t : s.terms()) {
    std::vector<PauliTerm> partial{{t.coefficient, PauliString{}}};
    for (const auto& l : t.ladder) {
      const std::uint64_t bit = std::uint64_t{1} << l.orbital;
      const std::uint64_t zstring = bit - 1;
      const double ysign = l.action == Action::Annihilate ? 1.0 : -1.0;
      const PauliTerm xpart{{0.5, 0.0}, PauliString(bit, zstring)};
      const PauliTerm ypart{{0.0, 0.5 * ysign}, PauliString(bit, zstring | bit)};
      std::vector<PauliTerm> next;
      next.reserve(partial.size() * 2);
      for (const auto& p : partial) {
        next.push_back(pauli_product(p, xpart));
        next.push_back(pauli_product(p, ypart));
      }
      // Collapse as we go so long ladders stay small.
      partial = simplify(PauliSum(n, std::move(next)), 0.0).terms();
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return simplify(PauliSum(n, std::move(out)));
}

}  // namespace paramadapt::ops
