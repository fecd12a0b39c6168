#include <gtest/gtest.h>

#include "lie/lie_algebra.hpp"

using namespace tbx;

namespace {

// `extra` perturbs the coefficient of e_0 in [e_0, e_1].
LieAlgebra so3(const Rational& extra = 0) {
  return LieAlgebra::make(3, {{0, 1, 2, 1}, {0, 1, 0, extra}, {1, 2, 0, 1}, {2, 0, 1, 1}});
}

Matrix mat2(long a, long b, long c, long d) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// Basis H, X, Y.
LieAlgebra sl2() {
  return LieAlgebra::from_matrices({mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)},
                                   {"H", "X", "Y"});
}

Vector v3(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

}  // namespace

TEST(LieAlgebra, MakeValidates) {
  EXPECT_EQ(so3().dim(), 3u);
  EXPECT_TRUE(LieAlgebra::abelian(4).is_abelian());
  // Rescaling a single constant of so(3) keeps Jacobi; a new one breaks it.
  EXPECT_NO_THROW(LieAlgebra::make(3, {{0, 1, 2, 2}, {1, 2, 0, 1}, {2, 0, 1, 1}}));
  try {
    so3(2);
    FAIL() << "expected a Jacobi violation";
  } catch (const JacobiViolationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::JacobiViolation);
    EXPECT_EQ(e.i, 0u);
    EXPECT_EQ(e.j, 1u);
    EXPECT_EQ(e.k, 2u);
    EXPECT_FALSE(is_zero(e.residual));
  }
  EXPECT_THROW(LieAlgebra::make(2, {{0, 1, 0, 1}, {1, 0, 0, 1}}), Error);
  EXPECT_THROW(LieAlgebra::make(2, {{0, 0, 1, 1}}), Error);
  EXPECT_THROW(LieAlgebra::make(2, {{0, 3, 1, 1}}), Error);
}

TEST(LieAlgebra, Bracket) {
  const auto g = so3();
  EXPECT_TRUE(is_zero(g.bracket(v3(1, 2, 3), v3(1, 2, 3))));
  EXPECT_EQ(g.bracket(v3(1, 0, 0), v3(0, 1, 0)), v3(0, 0, 1));
  EXPECT_EQ(sl2().bracket(v3(1, 0, 0), v3(0, 1, 0)), v3(0, 2, 0));
  EXPECT_THROW(g.bracket(v3(1, 0, 0), Vector(2)), Error);
}

TEST(LieAlgebra, MatrixCommutatorOracle) {
  const std::vector<Matrix> basis{mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)};
  const auto g = LieAlgebra::from_matrices(basis);
  SeededRng rng(8);
  for (int t = 0; t < 20; ++t) {
    const Vector x = rng.vector(3, 5), y = rng.vector(3, 5);
    auto realize = [&](const Vector& v) {
      Matrix m(2, 2);
      for (std::size_t i = 0; i < 3; ++i) m = m + v[i] * basis[i];
      return m;
    };
    EXPECT_EQ(realize(g.bracket(x, y)), realize(x) * realize(y) - realize(y) * realize(x));
  }
  EXPECT_THROW(LieAlgebra::from_matrices({mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)}), Error);
}

TEST(LieAlgebra, KillingForm) {
  EXPECT_TRUE(LieAlgebra::abelian(3).killing_form().is_zero());
  EXPECT_EQ(sl2().killing_form()(0, 0), Rational(8));
  EXPECT_EQ(so3().killing_form(), Rational(-2) * Matrix::identity(3));
}

TEST(LieAlgebra, CentralizerAndPerp) {
  const auto g = sl2();
  const auto g0 = Subspace::span(3, {v3(0, 1, -1)});
  const auto h = Subspace::span(3, {v3(1, 0, 0)});
  EXPECT_EQ(centralizer_in(g, g0, Subspace(3)), g0);
  EXPECT_EQ(centralizer_in(LieAlgebra::abelian(3), g0, h), g0);
  EXPECT_EQ(centralizer_in(g, g0, h).dim(), 0u);
  EXPECT_EQ(killing_perp(g, Subspace(3)).dim(), 3u);
  EXPECT_EQ(killing_perp(g, Subspace::full(3)).dim(), 0u);
  EXPECT_EQ(killing_perp(g, h), Subspace::span(3, {v3(0, 1, 0), v3(0, 0, 1)}));
}

TEST(CartanDecomposition, Sl2) {
  const auto g = sl2();
  const auto g0 = Subspace::span(3, {v3(0, 1, -1)});
  const auto g1 = Subspace::span(3, {v3(1, 0, 0), v3(0, 1, 1)});
  const auto cd = CartanDecomposition::make(g, g0, g1);
  const auto a = Subspace::span(3, {v3(1, 0, 0)});
  EXPECT_TRUE(is_regular(cd, a, v3(1, 0, 0)));
  EXPECT_FALSE(is_regular(cd, a, v3(0, 0, 0)));
  EXPECT_THROW(is_regular(cd, a, v3(0, 1, 0)), Error);
  try {
    is_regular(cd, g1, v3(1, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAbelian);
  }
  try {
    CartanDecomposition::make(LieAlgebra::abelian(3), g0, g1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSemisimple);
  }
  // g0 must be a subalgebra with the right bracket rules.
  EXPECT_THROW(CartanDecomposition::make(g, Subspace::span(3, {v3(0, 1, 0)}),
                                         Subspace::span(3, {v3(1, 0, 0), v3(0, 0, 1)})),
               Error);
}
