#include <gtest/gtest.h>

#include "io/reports.hpp"
#include "support/random_tableau.hpp"

using namespace tbx;

namespace {

std::string parse_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    return e.what();
  }
  ADD_FAILURE() << "no error";
  return "";
}

}  // namespace

TEST(Json, RationalsAreStrings) {
  EXPECT_EQ(to_json(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_json(Rational(5)), "5");
  EXPECT_EQ(rational_from_json(Json("-6/4"), "x"), Rational(-3, 2));
  EXPECT_EQ(rational_from_json(Json(7), "x"), 7);
  EXPECT_NE(parse_error([] { rational_from_json(Json("1/0"), "x.y"); }).find("x.y"),
            std::string::npos);
  EXPECT_NE(parse_error([] { rational_from_json(Json(0.5), "w"); }).find("w"), std::string::npos);
}

TEST(Json, TableauRoundTrip) {
  SeededRng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto a = tbx::testing::random_tableau(rng);
    const auto back = tableau_from_json(Json::parse(tableau_to_json(a).dump()));
    EXPECT_EQ(back.span(), a.span());
    EXPECT_EQ(back.generators(), a.generators());
  }
}

TEST(Json, TableauErrorsNameTheField) {
  const auto j = Json::parse(R"({"n": 2, "s": 1, "generators": [[["1", "x"]]]})");
  EXPECT_NE(parse_error([&] { tableau_from_json(j); }).find("tableau.generators[0][0][1]"),
            std::string::npos);
  const auto k = Json::parse(R"({"n": 2, "generators": []})");
  EXPECT_NE(parse_error([&] { tableau_from_json(k); }).find("\"s\""), std::string::npos);
  EXPECT_THROW(parse_json_text("{", "input"), Error);
}

TEST(Json, LieAlgebraRoundTrip) {
  const auto e = catalog_get("sl3_so3_cartan");
  const auto& g = e.lie_tableau.split.algebra();
  const auto back = lie_algebra_from_json(Json::parse(lie_algebra_to_json(g).dump()));
  EXPECT_EQ(back.entries().size(), g.entries().size());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) EXPECT_EQ(back.bracket_basis(i, j), g.bracket_basis(i, j));
  EXPECT_EQ(back.labels(), g.labels());
}

TEST(Json, LieAlgebraJacobiViolation) {
  const auto j = Json::parse(R"({"dim": 3, "structure": [[0, 1, [[0, "2"], [2, "1"]]],
                                  [0, 2, [[1, "-1"]]], [1, 2, [[0, "1"]]]]})");
  EXPECT_THROW(lie_algebra_from_json(j), JacobiViolationError);
  const auto r = lie_validate_report(j, RunConfig{});
  EXPECT_FALSE(r.verified);
  const auto bad = Json::parse(R"({"dim": 2, "structure": [[0, 1, [[5, "1"]]]]})");
  EXPECT_NE(parse_error([&] { lie_algebra_from_json(bad); }).find("structure[0][2][0]"),
            std::string::npos);
}

TEST(Json, CatalogBundlesRoundTrip) {
  for (const std::string name : {"so41_family(1/2,1,-3)", "sl3_so3_cartan", "so3_broken"}) {
    const auto e = catalog_get(name);
    const auto j = Json::parse(catalog_entry_to_json(e).dump());
    const auto lt = lie_tableau_from_json(j);
    EXPECT_EQ(lt.tableau.span(), e.lie_tableau.tableau.span()) << name;
    EXPECT_EQ(lt.offset, e.lie_tableau.offset) << name;
    EXPECT_EQ(lt.cartan.has_value(), e.lie_tableau.cartan.has_value()) << name;
    EXPECT_EQ(certify(lt).ok, certify(e.lie_tableau).ok) << name;
    EXPECT_EQ(j["catalog"]["expected"].size(), e.expected.size());
  }
}

TEST(Json, BundleRejectsForgedCartanBlock) {
  const auto e = catalog_get("sl2_cartan");
  auto j = Json::parse(catalog_entry_to_json(e).dump());
  j["cartan"]["m_basis"] = Json::array({Json::array({"1", "0", "0"})});
  EXPECT_THROW(lie_tableau_from_json(j), Error);
}

TEST(Json, CochainRoundTrip) {
  SeededRng rng(8);
  for (int t = 0; t < 20; ++t) {
    const Grading g{static_cast<std::size_t>(rng.uniform(1, 3)),
                    static_cast<std::size_t>(rng.uniform(1, 3)), static_cast<int>(rng.uniform(0, 3)),
                    0};
    Grading h = g;
    h.p = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(g.n)));
    const SpencerCochain c{h, rng.vector(h.size(), 4)};
    const auto back = cochain_from_json(Json::parse(cochain_to_json(c).dump()));
    EXPECT_EQ(back.grading, c.grading);
    EXPECT_EQ(back.coords, c.coords);
  }
  const auto bad = Json::parse(R"({"n": 2, "s": 1, "q": 1, "p": 1, "terms": [[0, [2, 0], [0], "1"]]})");
  EXPECT_NE(parse_error([&] { cochain_from_json(bad); }).find("terms[0][1]"), std::string::npos);
}

TEST(Reports, Deterministic) {
  RunConfig cfg;
  cfg.command = "catalog verify";
  const auto names = catalog_names();
  const auto a = catalog_verify_report(names, cfg).json.dump();
  const auto b = catalog_verify_report(names, cfg).json.dump();
  EXPECT_EQ(a, b);
  const auto j = Json::parse(a);
  ASSERT_EQ(j["entries"].size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    EXPECT_EQ(j["entries"][i]["name"], catalog_get(names[i]).name);
  EXPECT_EQ(j["config"]["seed"], 1);
  EXPECT_EQ(j["config"]["version"], kLibraryVersion);
}

TEST(Reports, TextRendering) {
  const auto j = Json::parse(R"({"a": 1, "b": {"c": [1, 2], "d": [{"x": 1}, {"y": [[1], [2]]}]}})");
  EXPECT_EQ(render_text(j), "a: 1\nb:\n  c: [1, 2]\n  d:\n    - x=1\n    -\n      y: [[1], [2]]\n");
}
