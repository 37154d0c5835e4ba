// Copyright 2026 The paramadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "paramadapt/errors.hpp"
#include "paramadapt/ops.hpp"

namespace paramadapt {
namespace {

using namespace ops;
using testing::Dense;
using testing::fermion_matrix;
using testing::max_abs;
using testing::pauli_matrix;

FermionSum one(std::size_t n, Complex c, std::vector<Ladder> l) { return FermionSum(n, {{c, std::move(l)}}); }

PauliTerm pt(Complex c, std::map<std::size_t, Letter> l) { return {c, PauliString(l)}; }

FermionSum random_fermion_sum(std::size_t n, std::mt19937_64& rng, int n_terms = 6) {
  std::uniform_int_distribution<std::size_t> mode(0, n - 1);
  std::uniform_int_distribution<int> len(0, 4), coin(0, 1);
  std::normal_distribution<double> g;
  std::vector<FermionTerm> terms;
  for (int t = 0; t < n_terms; ++t) {
    FermionTerm ft{{g(rng), g(rng)}, {}};
    const int l = len(rng);
    for (int k = 0; k < l; ++k) ft.ladder.push_back({mode(rng), coin(rng) ? Action::Create : Action::Annihilate});
    terms.push_back(ft);
  }
  return FermionSum(n, terms);
}

TEST(NormalOrder, AnnihilateCreateSameMode) {
  const FermionSum r = normal_order(one(1, 1.0, {ann(0), cre(0)}));
  ASSERT_EQ(r.terms().size(), 2u);
  EXPECT_TRUE(r.terms()[0].ladder.empty());
  EXPECT_NEAR(std::abs(r.terms()[0].coefficient - 1.0), 0.0, 1e-15);
  EXPECT_EQ(r.terms()[1].ladder, (std::vector<Ladder>{cre(0), ann(0)}));
  EXPECT_NEAR(std::abs(r.terms()[1].coefficient + 1.0), 0.0, 1e-15);
}

TEST(NormalOrder, RepeatedCreatorVanishes) {
  EXPECT_TRUE(normal_order(one(1, 1.0, {cre(0), cre(0)})).empty());
  EXPECT_TRUE(normal_order(one(3, 2.0, {ann(2), ann(1), ann(2)})).empty());
}

TEST(NormalOrder, DistinctModesAnticommute) {
  const FermionSum r = normal_order(one(2, 1.0, {ann(1), cre(0)}));
  ASSERT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(r.terms()[0].ladder, (std::vector<Ladder>{cre(0), ann(1)}));
  EXPECT_NEAR(std::abs(r.terms()[0].coefficient + 1.0), 0.0, 1e-15);
}

TEST(NormalOrder, GroupsInDecreasingOrder) {
  const FermionSum r = normal_order(one(4, 1.0, {cre(0), cre(3), ann(1), ann(2)}));
  ASSERT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(r.terms()[0].ladder, (std::vector<Ladder>{cre(3), cre(0), ann(2), ann(1)}));
  EXPECT_NEAR(std::abs(r.terms()[0].coefficient - 1.0), 0.0, 1e-15);
  EXPECT_TRUE(is_normal_ordered(r.terms()[0]));
}

TEST(NormalOrder, PreservesMatrixAndIsIdempotent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const FermionSum s = random_fermion_sum(4, rng);
    const FermionSum n1 = normal_order(s);
    const FermionSum n2 = normal_order(n1);
    EXPECT_LE(max_abs(fermion_matrix(s) - fermion_matrix(n1)), 1e-12);
    ASSERT_EQ(n1.terms().size(), n2.terms().size());
    for (std::size_t k = 0; k < n1.terms().size(); ++k) {
      EXPECT_EQ(n1.terms()[k].ladder, n2.terms()[k].ladder);
      EXPECT_EQ(n1.terms()[k].coefficient, n2.terms()[k].coefficient);
      EXPECT_TRUE(is_normal_ordered(n1.terms()[k]));
    }
  }
}

TEST(FermionSum, RejectsOutOfRangeModes) {
  EXPECT_THROW(FermionSum(2, {{1.0, {cre(2)}}}), InvalidInput);
}

TEST(HermitianConjugate, Examples) {
  const FermionSum h = hermitian_conjugate(one(2, 1.0, {cre(1), ann(0)}));
  ASSERT_EQ(h.terms().size(), 1u);
  EXPECT_EQ(h.terms()[0].ladder, (std::vector<Ladder>{cre(0), ann(1)}));

  const FermionSum c = hermitian_conjugate(one(1, Complex(2, 1), {cre(0)}));
  EXPECT_EQ(c.terms()[0].coefficient, Complex(2, -1));
  EXPECT_EQ(c.terms()[0].ladder, (std::vector<Ladder>{ann(0)}));
}

TEST(HermitianConjugate, MatchesMatrixAdjoint) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const FermionSum s = random_fermion_sum(3, rng);
    EXPECT_LE(max_abs(fermion_matrix(hermitian_conjugate(s)) - fermion_matrix(s).adjoint()), 1e-13);
  }
}

TEST(JordanWigner, SingleCreator) {
  const PauliSum p = jordan_wigner(one(1, 1.0, {cre(0)}));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.terms()[0].word, PauliString({{0, Letter::X}}));
  EXPECT_NEAR(std::abs(p.terms()[0].coefficient - Complex(0.5, 0)), 0.0, 1e-15);
  EXPECT_EQ(p.terms()[1].word, PauliString({{0, Letter::Y}}));
  EXPECT_NEAR(std::abs(p.terms()[1].coefficient - Complex(0, -0.5)), 0.0, 1e-15);
}

TEST(JordanWigner, NumberOperator) {
  const PauliSum p = jordan_wigner(one(1, 1.0, {cre(0), ann(0)}));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_TRUE(p.terms()[0].word.is_identity());
  EXPECT_NEAR(std::abs(p.terms()[0].coefficient - 0.5), 0.0, 1e-15);
  EXPECT_EQ(p.terms()[1].word, PauliString({{0, Letter::Z}}));
  EXPECT_NEAR(std::abs(p.terms()[1].coefficient + 0.5), 0.0, 1e-15);
}

TEST(JordanWigner, SingleExcitationMatchesOccupationBasis) {
  const FermionSum tau(2, {{1.0, {cre(1), ann(0)}}, {-1.0, {cre(0), ann(1)}}});
  const PauliSum p = jordan_wigner(tau);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_LE(max_abs(pauli_matrix(p) - fermion_matrix(tau)), 1e-12);
}

TEST(JordanWigner, RandomSumsMatchLadderMatrices) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const FermionSum s = random_fermion_sum(n, rng);
      EXPECT_LE(max_abs(pauli_matrix(jordan_wigner(s)) - fermion_matrix(s)), 1e-12) << "n=" << n;
    }
  }
}

TEST(JordanWigner, ConjugateCommutesWithMapping) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const FermionSum s = random_fermion_sum(4, rng);
    const PauliSum a = jordan_wigner(hermitian_conjugate(s));
    const PauliSum b = jordan_wigner(s).adjoint();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a.terms()[k].word, b.terms()[k].word);
      EXPECT_NEAR(std::abs(a.terms()[k].coefficient - b.terms()[k].coefficient), 0.0, 1e-12);
    }
  }
}

TEST(Simplify, MergesLikeTerms) {
  const PauliSum s = simplify(PauliSum(1, {pt(0.5, {{0, Letter::X}}), pt(0.5, {{0, Letter::X}})}));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.terms()[0].coefficient, Complex(1.0));
}

TEST(Simplify, DropsBelowTolerance) {
  EXPECT_TRUE(simplify(PauliSum(1, {pt(1e-15, {{0, Letter::Z}})}), 1e-12).empty());
}

TEST(Simplify, DeterministicOrderWithoutMerging) {
  const PauliTerm x0 = pt(1.0, {{0, Letter::X}});
  const PauliTerm z1 = pt(1.0, {{1, Letter::Z}});
  const PauliTerm x0z1 = pt(1.0, {{0, Letter::X}, {1, Letter::Z}});
  const PauliSum a = simplify(PauliSum(2, {x0, z1, x0z1}));
  const PauliSum b = simplify(PauliSum(2, {x0z1, z1, x0}));
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(a.terms()[k].word, b.terms()[k].word);
  for (std::size_t k = 0; k + 1 < 3; ++k) EXPECT_TRUE(lex_less(a.terms()[k].word, a.terms()[k + 1].word));
}

TEST(PauliProduct, Examples) {
  const PauliTerm xy = pauli_product(pt(1.0, {{0, Letter::X}}), pt(1.0, {{0, Letter::Y}}));
  EXPECT_EQ(xy.word, PauliString({{0, Letter::Z}}));
  EXPECT_EQ(xy.coefficient, Complex(0, 1));

  const PauliTerm xx = pauli_product(pt(1.0, {{0, Letter::X}}), pt(1.0, {{0, Letter::X}}));
  EXPECT_TRUE(xx.word.is_identity());
  EXPECT_EQ(xx.coefficient, Complex(1.0));

  const PauliTerm xz = pauli_product(pt(1.0, {{0, Letter::X}}), pt(1.0, {{1, Letter::Z}}));
  EXPECT_EQ(xz.word, PauliString({{0, Letter::X}, {1, Letter::Z}}));
  EXPECT_EQ(xz.coefficient, Complex(1.0));
}

TEST(PauliProduct, MatchesMatrixProductAndAssociates) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint64_t> bits(0, 7);
  std::normal_distribution<double> g;
  auto rnd = [&] { return PauliTerm{{g(rng), g(rng)}, PauliString(bits(rng), bits(rng))}; };
  for (int trial = 0; trial < 100; ++trial) {
    const PauliTerm a = rnd(), b = rnd(), c = rnd();
    const PauliTerm l = pauli_product(pauli_product(a, b), c);
    const PauliTerm r = pauli_product(a, pauli_product(b, c));
    EXPECT_EQ(l.word, r.word);
    EXPECT_NEAR(std::abs(l.coefficient - r.coefficient), 0.0, 1e-12);
    const Dense ab = pauli_matrix(PauliSum(3, {pauli_product(a, b)}));
    const Dense ref = pauli_matrix(PauliSum(3, {a})) * pauli_matrix(PauliSum(3, {b}));
    EXPECT_LE(max_abs(ab - ref), 1e-12);
  }
}

TEST(PauliString, LetterRoundTrip) {
  const std::map<std::size_t, Letter> l{{0, Letter::X}, {2, Letter::Y}, {5, Letter::Z}};
  const PauliString p(l);
  EXPECT_EQ(p.letters(), l);
  EXPECT_EQ(p.y_count(), 1);
  EXPECT_EQ(p.letter(1), Letter::I);
}

}  // namespace
}  // namespace paramadapt
