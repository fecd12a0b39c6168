#include <gtest/gtest.h>

#include <thread>

#include "error.hpp"
#include "support/random_tableau.hpp"
#include "tableau/tableau.hpp"

using namespace tbx;
using tbx::testing::cr_tableau;
using tbx::testing::random_tableau;

TEST(Tableau, MakeBasics) {
  EXPECT_EQ(Tableau::zero(2, 3).dim(), 0u);
  EXPECT_EQ(Tableau::full(2, 3).dim(), 6u);
  EXPECT_EQ(cr_tableau().dim(), 2u);
  Matrix a(2, 2);
  a(0, 0) = 1;
  const auto t = Tableau::make(2, 2, {a, 2 * a, Matrix(2, 2)});
  EXPECT_EQ(t.dim(), 1u);
  EXPECT_EQ(t.generators().size(), 3u);
  EXPECT_THROW(Tableau::make(2, 2, {Matrix(2, 3)}), Error);
}

TEST(Tableau, KernelRestricted) {
  const auto cr = cr_tableau();
  EXPECT_EQ(kernel_restricted(cr, Subspace(2)).dim(), 2u);
  EXPECT_EQ(kernel_restricted(Tableau::full(2, 2), Subspace::full(2)).dim(), 0u);
  EXPECT_EQ(kernel_restricted(cr, Subspace::span(2, {unit_vector(2, 0)})).dim(), 0u);
  EXPECT_THROW(kernel_restricted(cr, Subspace(3)), Error);
}

TEST(Characters, Examples) {
  EXPECT_EQ(characters(Tableau::zero(3, 2)).s, (std::vector<std::size_t>{0, 0, 0}));
  const auto full = characters(Tableau::full(2, 3));
  EXPECT_EQ(full.s, (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(full.cartan_integer, 2u);
  const auto cr = characters(cr_tableau(), {5, 7, 10});
  EXPECT_EQ(cr.s, (std::vector<std::size_t>{2, 0}));
  EXPECT_EQ(cr.principal, 2u);
  EXPECT_EQ(cr.cartan_integer, 1u);
  EXPECT_EQ(cr.seed, 7u);
  const auto zero = characters(Tableau::zero(2, 2));
  EXPECT_EQ(zero.cartan_integer, 0u);
  EXPECT_EQ(zero.principal, 0u);
}

TEST(Prolong, Examples) {
  const auto zero = Tableau::zero(2, 2);
  for (int h = 0; h <= 3; ++h) EXPECT_EQ(zero.prolongation(h).dim(), 0u);
  EXPECT_EQ(Tableau::full(2, 2).prolongation(1).dim(), 6u);
  const auto cr = cr_tableau();
  EXPECT_EQ(cr.prolongation(1).dim(), 2u);
  EXPECT_EQ(cr.prolongation(2).dim(), 2u);
  EXPECT_EQ(cr.prolongation(-1).dim(), 2u);
}

TEST(Prolong, ContractionsStayInPreviousOrder) {
  const auto cr = cr_tableau();
  const auto p = prolong(prolong(cr));
  EXPECT_EQ(p.h, 2);
  EXPECT_EQ(p.space, cr.prolongation(2));
}

TEST(CartanTest, Examples) {
  const auto full = cartan_test(Tableau::full(2, 2));
  EXPECT_EQ(full.bound, 6u);
  EXPECT_TRUE(full.involutive);
  const auto cr = cartan_test(cr_tableau());
  EXPECT_EQ(cr.bound, 2u);
  EXPECT_EQ(cr.dim_prolong, 2u);
  EXPECT_TRUE(cr.involutive);
  EXPECT_TRUE(cartan_test(Tableau::zero(3, 1)).involutive);
}

TEST(InvolutivityOrder, Examples) {
  EXPECT_EQ(involutivity_order(cr_tableau(), 3), 0);
  EXPECT_EQ(involutivity_order(Tableau::zero(2, 2), 3), 0);
}

// Regression fixture: seed 1 random 2-dim tableau in Hom(R^3, R^2).
TEST(InvolutivityOrder, RandomNonInvolutiveFixture) {
  SeededRng rng(1);
  const auto t = Tableau::make(3, 2, {rng.matrix(2, 3, 5), rng.matrix(2, 3, 5)});
  ASSERT_EQ(t.dim(), 2u);
  EXPECT_FALSE(cartan_test(t).involutive);
  const auto h0 = involutivity_order(t, 3);
  ASSERT_TRUE(h0);
  EXPECT_GE(*h0, 1);
  EXPECT_LE(*h0, 3);
}

TEST(ProlongedCharacters, Examples) {
  const auto full = prolonged_characters_formula_check(Tableau::full(2, 2));
  EXPECT_TRUE(full.holds);
  EXPECT_EQ(full.prolonged.s, (std::vector<std::size_t>{4, 2}));
  const auto cr = prolonged_characters_formula_check(cr_tableau());
  EXPECT_TRUE(cr.holds);
  EXPECT_EQ(cr.prolonged.s, (std::vector<std::size_t>{2, 0}));

  SeededRng rng(1);
  const auto t = Tableau::make(3, 2, {rng.matrix(2, 3, 5), rng.matrix(2, 3, 5)});
  try {
    prolonged_characters_formula_check(t);
    FAIL() << "expected NotInvolutive";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvolutive);
  }
}

TEST(PolynomialOracle, Examples) {
  for (int q = 0; q <= 3; ++q) EXPECT_EQ(polynomial_solutions_dim(Tableau::zero(2, 2), q), 0u);
  EXPECT_EQ(polynomial_solutions_dim(Tableau::full(2, 2), 1), 6u);
  EXPECT_EQ(polynomial_solutions_dim(cr_tableau(), 1), 2u);
  EXPECT_EQ(polynomial_solutions_dim(cr_tableau(), 2), 2u);
}

TEST(TableauProperties, CartanInequalityOracleAndProlongAgreement) {
  SeededRng rng(17);
  for (int t = 0; t < 60; ++t) {
    const auto a = random_tableau(rng);
    const auto ct = cartan_test(a);
    EXPECT_LE(ct.dim_prolong, ct.bound);
    EXPECT_EQ(ct.characters.total(), a.dim());
    for (std::size_t j = 1; j < ct.characters.s.size(); ++j)
      EXPECT_LE(ct.characters.s[j], ct.characters.s[j - 1]);
    if (!ct.characters.s.empty()) EXPECT_LE(ct.characters.s[0], a.s());
    for (int q = 1; q <= 2; ++q)
      EXPECT_EQ(a.prolongation(q).dim(), polynomial_solutions_dim(a, q));
    const auto cur = order_zero(a);
    EXPECT_EQ(prolong_by_kernel(cur), prolong_by_intersection(cur));
    if (ct.involutive) EXPECT_TRUE(prolonged_characters_formula_check(a).holds);
  }
}

TEST(TableauProperties, CharactersAreBasisIndependent) {
  SeededRng rng(23);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_tableau(rng);
    const auto base = characters(a).s;
    // Same span, different generators.
    std::vector<Matrix> mixed;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Matrix m = a.basis()[i];
      if (i + 1 < a.dim()) m = m + Rational(rng.uniform(1, 3)) * a.basis()[i + 1];
      mixed.push_back(m);
    }
    EXPECT_EQ(characters(Tableau::make(a.n(), a.s(), mixed)).s, base);
    // Change of basis of a.
    const Matrix g = rng.invertible(a.n(), 3);
    std::vector<Matrix> conj;
    for (const auto& m : a.basis()) conj.push_back(m * g);
    EXPECT_EQ(characters(Tableau::make(a.n(), a.s(), conj)).s, base);
  }
}

TEST(Tableau, ConcurrentProlongationIsConsistent) {
  const auto a = Tableau::full(3, 2);
  std::vector<std::size_t> dims(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < dims.size(); ++i)
    threads.emplace_back([&, i] { dims[i] = a.prolongation(2).dim(); });
  for (auto& th : threads) th.join();
  for (auto d : dims) EXPECT_EQ(d, 2u * 10u);
}
