// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramadapt/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "paramadapt/errors.hpp"

namespace paramadapt::sim {

namespace {

constexpr double kImagTol = 1e-10;

void check_register(std::size_t n) {
  if (n > 30) throw InvalidInput("statevector register too large: " + std::to_string(n));
}

inline bool odd_parity(std::uint64_t v) { return std::popcount(v) & 1; }

void check_compatible(std::size_t state_n, std::size_t op_n) {
  if (op_n > state_n) throw InvalidInput("operator acts on more qubits than the state holds");
}

// <a| tau |b> using the tabulated transitions.
Complex inner_with_generator(std::span<const Complex> a, const pool::ExcitationOp& op,
                             std::span<const Complex> b) {
  Complex acc{};
  for (const auto& t : op.transitions) {
    acc += t.amplitude * (std::conj(a[t.upper]) * b[t.lower] - std::conj(a[t.lower]) * b[t.upper]);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// StateVector
// ---------------------------------------------------------------------------

StateVector::StateVector(std::size_t n_qubits) : n_(n_qubits) {
  check_register(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  check_register(n_qubits);
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw InvalidInput("amplitude count does not match 2^n_qubits");
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dim() != dim()) throw InvalidInput("state dimensions differ");
  Complex acc{};
  for (std::size_t k = 0; k < amps_.size(); ++k) acc += std::conj(amps_[k]) * other.amps_[k];
  return acc;
}

// ---------------------------------------------------------------------------
// PauliOperator
// ---------------------------------------------------------------------------

PauliOperator::PauliOperator(const ops::PauliSum& h) : n_(h.n_qubits()) {
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::map<std::uint64_t, std::size_t> slot;
  for (const auto& t : h.terms()) {
    auto [it, fresh] = slot.emplace(t.word.x, groups_.size());
    if (fresh) groups_.push_back({t.word.x, {}});
    // P|i> = i^{#Y} (-1)^{popcount(i & z)} |i ^ x>
    groups_[it->second].words.push_back({t.coefficient * kIPow[t.word.y_count() % 4], t.word.z});
    ++n_terms_;
  }
}

void PauliOperator::apply(std::span<const Complex> in, std::span<Complex> out) const {
  check_compatible(static_cast<std::size_t>(std::countr_zero(in.size())), n_);
  std::fill(out.begin(), out.end(), Complex{});
  const std::size_t dim = in.size();
  for (const auto& g : groups_) {
    for (std::size_t i = 0; i < dim; ++i) {
      const Complex a = in[i];
      if (a == Complex{}) continue;
      Complex c{};
      for (const auto& w : g.words) c += odd_parity(i & w.z) ? -w.coefficient : w.coefficient;
      out[i ^ g.flip] += c * a;
    }
  }
}

StateVector PauliOperator::apply(const StateVector& s) const {
  StateVector out(s.n_qubits());
  apply(s.amplitudes(), out.amplitudes());
  return out;
}

Complex PauliOperator::expectation(const StateVector& s) const {
  check_compatible(s.n_qubits(), n_);
  const auto amps = s.amplitudes();
  const std::size_t dim = amps.size();
  Complex acc{};
  for (const auto& g : groups_) {
    Complex part{};
    for (std::size_t i = 0; i < dim; ++i) {
      const Complex a = amps[i];
      if (a == Complex{}) continue;
      const Complex b = amps[i ^ g.flip];
      if (b == Complex{}) continue;
      Complex c{};
      for (const auto& w : g.words) c += odd_parity(i & w.z) ? -w.coefficient : w.coefficient;
      part += std::conj(b) * c * a;
    }
    acc += part;
  }
  return acc;
}

double expectation(const StateVector& s, const PauliOperator& h) {
  const Complex e = h.expectation(s);
  if (std::abs(e.imag()) > kImagTol) {
    std::ostringstream msg;
    msg << "expectation has imaginary part " << e.imag() << " (operator not Hermitian)";
    throw ExpectationNotReal(msg.str());
  }
  return e.real();
}

double expectation(const StateVector& s, const ops::PauliSum& h) {
  return expectation(s, PauliOperator(h));
}

// ---------------------------------------------------------------------------
// Excitations
// ---------------------------------------------------------------------------

StateVector prepare_reference(chem::Occupation mask, std::size_t n_qubits) {
  StateVector s(n_qubits);
  if (mask >= s.dim()) throw InvalidInput("reference mask exceeds register");
  s[mask] = 1.0;
  return s;
}

StateVector apply_generator(const StateVector& s, const pool::ExcitationOp& op) {
  check_compatible(s.n_qubits(), op.n_qubits());
  StateVector out(s.n_qubits());
  for (const auto& t : op.transitions) {
    out[t.upper] += t.amplitude * s[t.lower];
    out[t.lower] -= t.amplitude * s[t.upper];
  }
  return out;
}

void apply_excitation_inplace(StateVector& s, const pool::ExcitationOp& op, double theta) {
  check_compatible(s.n_qubits(), op.n_qubits());
  if (theta == 0.0) return;
  const double sn = std::sin(theta);
  const double omc = 1.0 - std::cos(theta);
  for (const auto& t : op.transitions) {
    const Complex lo = s[t.lower];
    const Complex up = s[t.upper];
    const double d = t.amplitude;
    // tau and tau^2 restricted to the coupled pair.
    const Complex tau_lo = -d * up;
    const Complex tau_up = d * lo;
    const Complex tau2_lo = -d * tau_up;
    const Complex tau2_up = d * tau_lo;
    s[t.lower] = lo + sn * tau_lo + omc * tau2_lo;
    s[t.upper] = up + sn * tau_up + omc * tau2_up;
  }
}

StateVector apply_excitation(const StateVector& s, const pool::ExcitationOp& op, double theta) {
  StateVector out = s;
  apply_excitation_inplace(out, op, theta);
  return out;
}

// ---------------------------------------------------------------------------
// Ansatz
// ---------------------------------------------------------------------------

std::vector<double> Ansatz::thetas() const {
  std::vector<double> t;
  t.reserve(elements.size());
  for (const auto& e : elements) t.push_back(e.theta);
  return t;
}

void Ansatz::set_thetas(std::span<const double> t) {
  if (t.size() != elements.size()) throw InvalidInput("parameter count mismatch");
  for (std::size_t k = 0; k < t.size(); ++k) elements[k].theta = t[k];
}

StateVector apply_ansatz(const Ansatz& a) {
  StateVector s = prepare_reference(a.reference, a.n_qubits);
  for (const auto& e : a.elements) apply_excitation_inplace(s, e.op, e.theta);
  return s;
}

double energy(const Ansatz& a, const PauliOperator& h, double constant) {
  return expectation(apply_ansatz(a), h) + constant;
}

double energy(const Ansatz& a, const chem::SpinOrbitalHamiltonian& h) {
  return energy(a, PauliOperator(h.qubit_form()), h.constant());
}

EnergyGradient energy_and_gradient(const Ansatz& a, const PauliOperator& h, double constant) {
  StateVector psi = apply_ansatz(a);
  StateVector lambda = h.apply(psi);
  const Complex e = psi.inner(lambda);
  if (std::abs(e.imag()) > kImagTol) throw ExpectationNotReal("energy has imaginary part");

  EnergyGradient out;
  out.energy = e.real() + constant;
  out.gradient.assign(a.elements.size(), 0.0);
  for (std::size_t k = a.elements.size(); k-- > 0;) {
    const auto& el = a.elements[k];
    out.gradient[k] = 2.0 * inner_with_generator(lambda.amplitudes(), el.op, psi.amplitudes()).real();
    if (k == 0) break;
    apply_excitation_inplace(psi, el.op, -el.theta);
    apply_excitation_inplace(lambda, el.op, -el.theta);
  }
  return out;
}

std::vector<double> gradient(const Ansatz& a, const chem::SpinOrbitalHamiltonian& h) {
  return energy_and_gradient(a, PauliOperator(h.qubit_form()), h.constant()).gradient;
}

std::vector<double> pool_gradients(const StateVector& s, const pool::Pool& pool,
                                   std::span<const PauliOperator> sub_hamiltonians) {
  if (sub_hamiltonians.size() != pool.size()) {
    throw InvalidInput("one sub-Hamiltonian per pool operator is required");
  }
  std::vector<double> g(pool.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(pool.size()); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const StateVector hs = sub_hamiltonians[idx].apply(s);
    g[idx] = 2.0 * inner_with_generator(hs.amplitudes(), pool[idx], s.amplitudes()).real();
  }
  return g;
}

std::vector<double> pool_gradients(const StateVector& s, const pool::Pool& pool,
                                   const chem::SpinOrbitalHamiltonian& h) {
  std::vector<PauliOperator> subs;
  subs.reserve(pool.size());
  for (const auto& op : pool) subs.emplace_back(chem::sub_hamiltonian(h, op).qubit_form());
  return pool_gradients(s, pool, subs);
}

// ---------------------------------------------------------------------------
// LocalLandscape
// ---------------------------------------------------------------------------

LocalLandscape::LocalLandscape(const StateVector& base, const pool::ExcitationOp& op,
                               const PauliOperator& h) {
  const StateVector u1 = apply_generator(base, op);
  const StateVector u2 = apply_generator(u1, op);
  const StateVector hu1 = h.apply(u1);
  const StateVector hu2 = h.apply(u2);
  m00_ = expectation(base, h);
  m01_ = base.inner(hu1).real();
  m02_ = base.inner(hu2).real();
  m11_ = u1.inner(hu1).real();
  m12_ = u1.inner(hu2).real();
  m22_ = u2.inner(hu2).real();
}

double LocalLandscape::value(double theta) const {
  const double s = std::sin(theta);
  const double w = 1.0 - std::cos(theta);
  return m00_ + s * s * m11_ + w * w * m22_ + 2.0 * (s * m01_ + w * m02_ + s * w * m12_);
}

double LocalLandscape::derivative(double theta) const {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double w = 1.0 - c;
  // d/dtheta of (1, s, w) is (0, c, s)
  return 2.0 * (c * (m01_ + s * m11_ + w * m12_) + s * (m02_ + s * m12_ + w * m22_));
}

}  // namespace paramadapt::sim
