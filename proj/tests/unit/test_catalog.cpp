#include <gtest/gtest.h>

#include "catalog/catalog.hpp"

using namespace tbx;

TEST(Catalog, EveryEntryReproducesItsExpectations) {
  for (const auto& name : catalog_names()) {
    const auto entry = catalog_get(name);
    EXPECT_FALSE(entry.expected.empty()) << name;
    const auto v = verify_entry(entry);
    for (const auto& c : v.checks)
      EXPECT_TRUE(c.ok) << name << " " << c.expected.key << ": expected " << c.expected.value
                        << ", got " << c.actual;
    EXPECT_TRUE(v.ok) << name;
  }
}

TEST(Catalog, UnknownName) {
  try {
    catalog_get("so5");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownName);
  }
  EXPECT_THROW(catalog_get("full(2)"), Error);
  EXPECT_THROW(catalog_get("full(0,2)"), Error);
}

TEST(Catalog, Parametrized) {
  EXPECT_EQ(catalog_get("full(3,2)").lie_tableau.tableau.dim(), 6u);
  const auto f = catalog_get("so41_family(1/2, 1, -3)");
  EXPECT_EQ(f.name, "so41_family(1/2,1,-3)");
  EXPECT_TRUE(f.lie_tableau.has_offset());
}

TEST(So41, Construction) {
  for (const Rational c : {Rational(-1, 2), Rational(-1)}) {
    const auto so = build_so41(c);
    EXPECT_EQ(so.algebra.dim(), 10u);
    EXPECT_EQ(rank(so.algebra.killing_form()), 10u);
    EXPECT_EQ(so.split.dim_a(), 2u);
    EXPECT_EQ(so.split.dim_b(), 8u);
    for (std::size_t r = 0; r < 10; ++r)
      for (std::size_t b = 0; b < 10; ++b)
        EXPECT_EQ(dot(so.coframe.row(r), so.matrices[b].entries()), Rational(r == b ? 1 : 0));
    for (const auto& x : so.matrices) EXPECT_TRUE((x.transpose() * so.gram + so.gram * x).is_zero());
    for (const auto& e : so.algebra.entries()) EXPECT_EQ(e.value.get_den(), 1);
  }
  EXPECT_THROW(build_so41(0), Error);
}

TEST(So41, BothGramConventionsGiveTheLemma) {
  for (const Rational c : {Rational(-1, 2), Rational(-1)}) {
    CatalogOptions o;
    o.so41_c = c;
    const auto m = catalog_get("so41_mobius", o);
    EXPECT_EQ(m.lie_tableau.tableau.dim(), 5u);
    EXPECT_TRUE(check_condition2(m.lie_tableau).holds);
  }
}

TEST(So41, FamilyUnderBothReadings) {
  const Rational params[][3] = {{0, 0, 0}, {Rational(1, 2), 1, -3}, {2, -1, 4}};
  for (bool alt : {false, true}) {
    CatalogOptions o;
    o.family_p2_reading = alt;
    for (const auto& p : params) {
      const auto v = verify_entry(so41_family(p[0], p[1], p[2], o));
      EXPECT_TRUE(v.ok) << "reading " << alt << " u=" << format_rational(p[0]);
    }
  }
}

TEST(So41, CirclePoint) {
  const auto [c, s] = circle_point(Rational(1, 2));
  EXPECT_EQ(c, Rational(3, 5));
  EXPECT_EQ(s, Rational(4, 5));
  EXPECT_EQ(c * c + s * s, 1);
}

TEST(So41, UnknownGenerator) { EXPECT_THROW(so41_generator("q3"), Error); }

TEST(Sl3, RegularElements) {
  const auto entry = catalog_get("sl3_so3_cartan");
  const auto& g = entry.lie_tableau.split.algebra();
  std::vector<Vector> g0, g1;
  for (std::size_t i = 0; i < 8; ++i) (i >= 5 ? g0 : g1).push_back(unit_vector(8, i));
  const auto cd = CartanDecomposition::make(g, Subspace::span(8, g0), Subspace::span(8, g1));
  const auto a = Subspace::span(8, {unit_vector(8, 0), unit_vector(8, 1)});
  auto diag = [](const Rational& h1, const Rational& h2) {
    Vector v = zero_vector(8);
    v[0] = h1;
    v[1] = h2;
    return v;
  };
  // diag(1,2,-3): distinct eigenvalues.
  EXPECT_TRUE(is_regular(cd, a, diag(Rational(-1, 2), Rational(3, 2))));
  // diag(1,-1,0) = H1 also has distinct eigenvalues.
  EXPECT_TRUE(is_regular(cd, a, diag(1, 0)));
  // diag(1,1,-2) = H2 has a repeated eigenvalue.
  EXPECT_FALSE(is_regular(cd, a, diag(0, 1)));
}
