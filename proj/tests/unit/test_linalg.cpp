#include <gtest/gtest.h>

#include "error.hpp"
#include "linalg/matrix.hpp"

using namespace tbx;

namespace {

Matrix m2(long a, long b, long c, long d) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(format_rational(Rational(0)), "0");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("0.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Rational, RoundTripIsExact) {
  SeededRng rng(11);
  for (int i = 0; i < 100; ++i) {
    Rational r(rng.uniform(-1000000, 1000000), rng.uniform(1, 1000000));
    r.canonicalize();
    EXPECT_EQ(parse_rational(format_rational(r)), r);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix::identity(2)), 2u);
  EXPECT_EQ(rank(Matrix(3, 3)), 0u);
  EXPECT_EQ(rank(m2(1, 2, 2, 4)), 1u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Matrix::identity(3)).dim(), 0u);
  EXPECT_EQ(kernel_basis(Matrix(2, 3)).dim(), 3u);
  Matrix m(1, 3);
  m(0, 0) = 1;
  m(0, 1) = 1;
  const auto k = kernel_basis(m);
  EXPECT_EQ(k.dim(), 2u);
  for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(m.apply(v)));
}

TEST(Image, Examples) {
  EXPECT_EQ(image_basis(Matrix::identity(3)).dim(), 3u);
  EXPECT_EQ(image_basis(Matrix(2, 2)).dim(), 0u);
  const auto im = image_basis(m2(1, 2, 2, 4));
  EXPECT_EQ(im.dim(), 1u);
  EXPECT_TRUE(im.contains(vec({1, 2})));
  EXPECT_FALSE(im.contains(vec({1, 0})));
}

TEST(Contains, Examples) {
  const auto e2 = Subspace::span(2, {vec({0, 1})});
  EXPECT_TRUE(e2.contains(vec({0, 0})));
  EXPECT_FALSE(e2.contains(vec({1, 0})));
  EXPECT_TRUE(Subspace::span(2, {vec({1, 2})}).contains(vec({2, 4})));
  EXPECT_THROW(e2.contains(vec({1, 2, 3})), Error);
}

TEST(Intersect, Examples) {
  const auto s = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  const auto t = Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  EXPECT_EQ(intersect(s, s), s);
  EXPECT_EQ(intersect(Subspace::span(3, {vec({1, 0, 0})}), Subspace::span(3, {vec({0, 1, 0})})).dim(),
            0u);
  EXPECT_EQ(intersect(s, t), Subspace::span(3, {vec({0, 1, 0})}));
  EXPECT_THROW(intersect(s, Subspace(2)), Error);
}

TEST(SolveAffine, Examples) {
  const auto id = solve_affine(Matrix::identity(2), vec({3, -5}));
  ASSERT_TRUE(id);
  EXPECT_EQ(id->particular, vec({3, -5}));
  EXPECT_EQ(id->homogeneous.dim(), 0u);

  Matrix row(1, 2);
  row(0, 0) = 1;
  row(0, 1) = 1;
  const auto line = solve_affine(row, vec({0}));
  ASSERT_TRUE(line);
  EXPECT_EQ(line->homogeneous.dim(), 1u);

  EXPECT_FALSE(solve_affine(m2(1, 0, 1, 0), vec({1, 2})));
  EXPECT_THROW(solve_affine(row, vec({1, 2})), Error);
}

TEST(SeededRandom, DeterministicAndInvertible) {
  EXPECT_EQ(seeded_random_matrix(3, 4, 42, 10), seeded_random_matrix(3, 4, 42, 10));
  EXPECT_FALSE(seeded_random_matrix(3, 4, 42, 10) == seeded_random_matrix(3, 4, 43, 10));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = seeded_random_matrix(4, 4, seed, 1, true);
    EXPECT_EQ(rank(m), 4u);
    for (const auto& x : m.entries()) EXPECT_TRUE(abs(x) <= 1);
  }
}

TEST(Inverse, Roundtrip) {
  const auto m = seeded_random_matrix(4, 4, 5, 10, true);
  EXPECT_EQ(m * inverse(m), Matrix::identity(4));
  EXPECT_THROW(inverse(m2(1, 2, 2, 4)), Error);
}

TEST(LinalgProperties, RankNullityAndKernel) {
  SeededRng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
    Matrix m = rng.matrix(rows, cols, 3);
    // Force some rank deficiency.
    if (rows > 1 && rng.uniform(0, 1) == 0) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 2;
    }
    const auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.dim(), cols);
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(image_basis(m).dim(), rank(m));
  }
}

TEST(LinalgProperties, GrassmannFormula) {
  SeededRng rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto ambient = static_cast<std::size_t>(rng.uniform(1, 6));
    auto random_subspace = [&] {
      std::vector<Vector> vs;
      const auto count = rng.uniform(0, static_cast<std::int64_t>(ambient));
      for (std::int64_t i = 0; i < count; ++i) vs.push_back(rng.vector(ambient, 2));
      return Subspace::span(ambient, vs);
    };
    const auto s1 = random_subspace();
    const auto s2 = random_subspace();
    const auto cap = intersect(s1, s2);
    EXPECT_EQ(s1.dim() + s2.dim(), sum(s1, s2).dim() + cap.dim());
    for (const auto& v : cap.basis()) {
      EXPECT_TRUE(s1.contains(v));
      EXPECT_TRUE(s2.contains(v));
    }
  }
}

TEST(Subspace, CanonicalFormAndCoordinates) {
  const auto a = Subspace::span(3, {vec({1, 1, 0}), vec({0, 1, 1})});
  const auto b = Subspace::span(3, {vec({1, 2, 1}), vec({1, 0, -1})});
  EXPECT_EQ(a, b);
  const auto c = a.coordinates(vec({2, 3, 1}));
  ASSERT_TRUE(c);
  Vector back = zero_vector(3);
  for (std::size_t i = 0; i < a.dim(); ++i) axpy((*c)[i], a.basis()[i], back);
  EXPECT_EQ(back, vec({2, 3, 1}));
  EXPECT_FALSE(a.coordinates(vec({1, 0, 0})));
  EXPECT_EQ(a.complement_indices().size(), 1u);
  EXPECT_EQ(annihilator(a).dim(), 1u);
}
