// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramadapt/chem.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <map>
#include <sstream>
#include <string>

#include "paramadapt/errors.hpp"
#include "paramadapt/pool.hpp"

namespace paramadapt::chem {

namespace {

constexpr double kDuplicateTol = 1e-10;

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_double(std::string tok, double& out) {
  for (char& c : tok) {
    if (c == 'D' || c == 'd') c = 'E';
  }
  char* end = nullptr;
  out = std::strtod(tok.c_str(), &end);
  return end != tok.c_str() && *end == '\0' && std::isfinite(out);
}

bool parse_int(const std::string& tok, long& out) {
  char* end = nullptr;
  out = std::strtol(tok.c_str(), &end, 10);
  return end != tok.c_str() && *end == '\0';
}

// Namelist body -> key/value-list map. Values are kept as raw tokens.
std::map<std::string, std::vector<std::string>> parse_namelist(const std::string& text,
                                                               std::size_t line) {
  std::string norm;
  norm.reserve(text.size() * 2);
  for (char c : text) {
    if (c == ',') {
      norm += ' ';
    } else if (c == '=') {
      norm += " = ";
    } else {
      norm += c;
    }
  }
  std::istringstream ss(norm);
  std::vector<std::string> toks;
  for (std::string t; ss >> t;) toks.push_back(t);

  std::map<std::string, std::vector<std::string>> out;
  std::string key;
  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (k + 1 < toks.size() && toks[k + 1] == "=") {
      key = upper(toks[k]);
      out[key];
      ++k;
      continue;
    }
    if (toks[k] == "=" || key.empty()) throw ParseError("malformed namelist header", line);
    out[key].push_back(toks[k]);
  }
  return out;
}

long header_int(const std::map<std::string, std::vector<std::string>>& nl, const char* key,
                std::size_t line, std::optional<long> fallback = std::nullopt) {
  auto it = nl.find(key);
  if (it == nl.end()) {
    if (fallback) return *fallback;
    throw ParseError(std::string("header missing ") + key, line);
  }
  long v = 0;
  if (it->second.size() != 1 || !parse_int(it->second.front(), v)) {
    throw ParseError(std::string("header field ") + key + " is not an integer", line);
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// MoleculeData
// ---------------------------------------------------------------------------

MoleculeData::MoleculeData(std::size_t n_spatial, int n_electrons, int ms2, double core_energy)
    : n_(n_spatial),
      n_electrons_(n_electrons),
      ms2_(ms2),
      core_(core_energy),
      h1_(n_spatial * n_spatial, 0.0),
      h2_(n_spatial * n_spatial * n_spatial * n_spatial, 0.0) {
  if (n_spatial == 0 || 2 * n_spatial > ops::kMaxQubits) {
    throw InvalidInput("spatial orbital count must be in [1, 32]");
  }
}

void MoleculeData::set_h1(std::size_t p, std::size_t q, double v) {
  h1_[p * n_ + q] = v;
  h1_[q * n_ + p] = v;
}

void MoleculeData::set_h2(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double v) {
  auto at = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> double& {
    return h2_[((a * n_ + b) * n_ + c) * n_ + d];
  };
  at(p, q, r, s) = v;
  at(q, p, r, s) = v;
  at(p, q, s, r) = v;
  at(q, p, s, r) = v;
  at(r, s, p, q) = v;
  at(s, r, p, q) = v;
  at(r, s, q, p) = v;
  at(s, r, q, p) = v;
}

void MoleculeData::validate() const {
  if (n_electrons_ <= 0 || static_cast<std::size_t>(n_electrons_) > 2 * n_) {
    throw InvalidInput("electron count must satisfy 0 < n_electrons <= 2 n_spatial");
  }
  for (std::size_t p = 0; p < n_; ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      if (std::abs(h1(p, q) - h1(q, p)) > kDuplicateTol) {
        throw InvalidInput("one-body integrals are not symmetric");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// FCIDUMP
// ---------------------------------------------------------------------------

MoleculeData parse_fcidump(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);

  std::size_t k = 0;
  while (k < lines.size() && trim(lines[k]).empty()) ++k;
  if (k == lines.size()) throw ParseError("empty input", 0);
  const std::size_t header_line = k + 1;

  std::string first = trim(lines[k]);
  if (upper(first).rfind("&FCI", 0) != 0) throw ParseError("expected &FCI namelist", header_line);

  std::string header;
  bool terminated = false;
  std::string rest = first.substr(4);
  for (;;) {
    const std::string up = upper(rest);
    const auto end_pos = up.find("&END");
    const auto slash_pos = rest.find('/');
    if (end_pos != std::string::npos || slash_pos != std::string::npos) {
      header += ' ' + rest.substr(0, std::min(end_pos, slash_pos));
      terminated = true;
      ++k;
      break;
    }
    header += ' ' + rest;
    if (++k == lines.size()) break;
    rest = trim(lines[k]);
  }
  if (!terminated) throw ParseError("unterminated namelist header", header_line);

  const auto nl = parse_namelist(header, header_line);
  const long norb = header_int(nl, "NORB", header_line);
  const long nelec = header_int(nl, "NELEC", header_line);
  const long ms2 = header_int(nl, "MS2", header_line, 0L);
  if (norb <= 0 || 2 * norb > static_cast<long>(ops::kMaxQubits)) {
    throw ParseError("NORB out of supported range", header_line);
  }
  if (nelec <= 0 || nelec > 2 * norb) throw ParseError("NELEC out of range", header_line);

  const auto n = static_cast<std::size_t>(norb);
  MoleculeData m(n, static_cast<int>(nelec), static_cast<int>(ms2), 0.0);
  std::vector<char> seen1(n * n, 0);
  std::vector<char> seen2(n * n * n * n, 0);
  bool seen_core = false;

  for (; k < lines.size(); ++k) {
    const std::size_t lineno = k + 1;
    std::istringstream ss(lines[k]);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() != 5) throw ParseError("expected 'value i j k l'", lineno);
    double v = 0.0;
    if (!parse_double(toks[0], v)) throw ParseError("bad integral value '" + toks[0] + "'", lineno);
    std::array<long, 4> idx{};
    for (int j = 0; j < 4; ++j) {
      if (!parse_int(toks[j + 1], idx[j])) throw ParseError("bad index", lineno);
      if (idx[j] < 0 || idx[j] > norb) throw ParseError("index out of range", lineno);
    }
    const auto [i, j, kk, l] = idx;
    auto conflict = [&](double old) { return std::abs(old - v) > kDuplicateTol; };
    if (i == 0 && j == 0 && kk == 0 && l == 0) {
      if (seen_core && conflict(m.core_energy())) {
        throw ParseError("conflicting core energy entries", lineno);
      }
      m.set_core_energy(v);
      seen_core = true;
    } else if (i > 0 && j > 0 && kk == 0 && l == 0) {
      const auto p = static_cast<std::size_t>(i - 1), q = static_cast<std::size_t>(j - 1);
      if (seen1[p * n + q] && conflict(m.h1(p, q))) {
        throw ParseError("conflicting duplicate one-body entry", lineno);
      }
      m.set_h1(p, q, v);
      seen1[p * n + q] = seen1[q * n + p] = 1;
    } else if (i > 0 && j == 0 && kk == 0 && l == 0) {
      continue;  // orbital energy line
    } else if (i > 0 && j > 0 && kk > 0 && l > 0) {
      const auto p = static_cast<std::size_t>(i - 1), q = static_cast<std::size_t>(j - 1);
      const auto r = static_cast<std::size_t>(kk - 1), s = static_cast<std::size_t>(l - 1);
      const std::size_t flat = ((p * n + q) * n + r) * n + s;
      if (seen2[flat] && conflict(m.h2(p, q, r, s))) {
        throw ParseError("conflicting duplicate two-body entry", lineno);
      }
      m.set_h2(p, q, r, s, v);
      for (auto [a, b, c, d] : {std::array{p, q, r, s}, std::array{q, p, r, s},
                                std::array{p, q, s, r}, std::array{q, p, s, r},
                                std::array{r, s, p, q}, std::array{s, r, p, q},
                                std::array{r, s, q, p}, std::array{s, r, q, p}}) {
        seen2[((a * n + b) * n + c) * n + d] = 1;
      }
    } else {
      throw ParseError("unsupported index pattern", lineno);
    }
  }
  return m;
}

MoleculeData parse_fcidump(std::string_view text) {
  std::istringstream ss{std::string(text)};
  return parse_fcidump(ss);
}

MoleculeData load_fcidump(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_fcidump(f);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

// ---------------------------------------------------------------------------
// Hamiltonian
// ---------------------------------------------------------------------------

SpinOrbitalHamiltonian::SpinOrbitalHamiltonian(ops::FermionSum body, double constant)
    : body_(ops::normal_order(body)), qubit_form_(ops::jordan_wigner(body_)), constant_(constant) {}

SpinOrbitalHamiltonian assemble_hamiltonian(const MoleculeData& m) {
  m.validate();
  const std::size_t n_so = m.n_spin_orbitals();
  std::vector<ops::FermionTerm> terms;
  for (std::size_t p = 0; p < n_so; ++p) {
    for (std::size_t q = 0; q < n_so; ++q) {
      if ((p & 1U) != (q & 1U)) continue;
      const double v = m.h1(p / 2, q / 2);
      if (v != 0.0) terms.push_back({v, {ops::cre(p), ops::ann(q)}});
    }
  }
  // 1/2 sum <pq|rs> a+_p a+_q a_s a_r with <pq|rs> = (pr|qs) and matching spins.
  for (std::size_t p = 0; p < n_so; ++p) {
    for (std::size_t q = 0; q < n_so; ++q) {
      if (p == q) continue;
      for (std::size_t r = 0; r < n_so; ++r) {
        if ((p & 1U) != (r & 1U)) continue;
        for (std::size_t s = 0; s < n_so; ++s) {
          if (r == s || (q & 1U) != (s & 1U)) continue;
          const double v = m.h2(p / 2, r / 2, q / 2, s / 2);
          if (v == 0.0) continue;
          terms.push_back({0.5 * v, {ops::cre(p), ops::cre(q), ops::ann(s), ops::ann(r)}});
        }
      }
    }
  }
  return SpinOrbitalHamiltonian(ops::FermionSum(n_so, std::move(terms)), m.core_energy());
}

Occupation hartree_fock_reference(const MoleculeData& m) {
  const int ne = m.n_electrons();
  const int ms2 = m.ms2();
  if ((ne + ms2) % 2 != 0 || std::abs(ms2) > ne) {
    throw InvalidInput("MS2=" + std::to_string(ms2) + " inconsistent with " +
                       std::to_string(ne) + " electrons");
  }
  const std::size_t na = m.n_alpha();
  const std::size_t nb = m.n_beta();
  if (na > m.n_spatial() || nb > m.n_spatial()) {
    throw InvalidInput("not enough orbitals for requested spin state");
  }
  Occupation occ = 0;
  for (std::size_t p = 0; p < na; ++p) occ |= Occupation{1} << (2 * p);
  for (std::size_t p = 0; p < nb; ++p) occ |= Occupation{1} << (2 * p + 1);
  return occ;
}

SpinOrbitalHamiltonian sub_hamiltonian(const SpinOrbitalHamiltonian& h, std::uint64_t index_mask) {
  std::vector<ops::FermionTerm> kept;
  for (const auto& t : h.body().terms()) {
    if (ops::index_mask(t) & index_mask) kept.push_back(t);
  }
  return SpinOrbitalHamiltonian(ops::FermionSum(h.n_spin_orbitals(), std::move(kept)), 0.0);
}

SpinOrbitalHamiltonian sub_hamiltonian(const SpinOrbitalHamiltonian& h,
                                       const pool::ExcitationOp& op) {
  return sub_hamiltonian(h, op.index_mask());
}

}  // namespace paramadapt::chem
