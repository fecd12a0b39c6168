#include "io/json_io.hpp"

#include "error.hpp"

namespace tbx {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorCode::Parse, path + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::size_t>();
  if (j.is_string()) {
    const auto r = rational_from_json(j, path);
    if (r.get_den() == 1 && sgn(r) >= 0 && r.get_num().fits_ulong_p()) return r.get_num().get_ui();
  }
  bad(path, "expected a non-negative integer");
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::vector<Vector> vectors_from_json(const Json& j, const std::string& path, std::size_t size) {
  std::vector<Vector> out;
  const Json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(vector_from_json(arr[i], at(path, i), size));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Vector vector_from_json(const Json& j, const std::string& path, std::optional<std::size_t> size) {
  const Json& arr = array_at(j, path);
  if (size && arr.size() != *size)
    bad(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(arr.size()));
  Vector v;
  for (std::size_t i = 0; i < arr.size(); ++i) v.push_back(rational_from_json(arr[i], at(path, i)));
  return v;
}

Matrix matrix_from_json(const Json& j, const std::string& path, std::size_t rows,
                        std::size_t cols) {
  const Json& arr = array_at(j, path);
  if (arr.size() != rows)
    bad(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(arr.size()));
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector r = vector_from_json(arr[i], at(path, i), cols);
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

Json tableau_to_json(const Tableau& a) {
  Json out;
  out["n"] = a.n();
  out["s"] = a.s();
  Json gens = Json::array();
  for (const auto& g : a.generators()) gens.push_back(to_json(g));
  out["generators"] = gens;
  return out;
}

Tableau tableau_from_json(const Json& j, const std::string& path) {
  const std::size_t n = index_from_json(field(j, path, "n"), path + ".n");
  const std::size_t s = index_from_json(field(j, path, "s"), path + ".s");
  const std::string gp = path + ".generators";
  const Json& gens = array_at(field(j, path, "generators"), gp);
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < gens.size(); ++i) ms.push_back(matrix_from_json(gens[i], at(gp, i), s, n));
  return Tableau::make(n, s, ms);
}

Json lie_algebra_to_json(const LieAlgebra& g) {
  Json out;
  out["dim"] = g.dim();
  Json structure = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t jj = i + 1; jj < g.dim(); ++jj) {
      const Vector& c = g.bracket_basis(i, jj);
      Json terms = Json::array();
      for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) terms.push_back(Json::array({k, format_rational(c[k])}));
      if (!terms.empty()) structure.push_back(Json::array({i, jj, terms}));
    }
  out["structure"] = structure;
  out["labels"] = g.labels();
  return out;
}

LieAlgebra lie_algebra_from_json(const Json& j, const std::string& path) {
  const std::size_t dim = index_from_json(field(j, path, "dim"), path + ".dim");
  const std::string sp = path + ".structure";
  const Json& st = array_at(field(j, path, "structure"), sp);
  std::vector<StructureEntry> entries;
  for (std::size_t r = 0; r < st.size(); ++r) {
    const std::string rp = at(sp, r);
    const Json& row = array_at(st[r], rp);
    if (row.size() != 3) bad(rp, "expected [i, j, [[k, \"p/q\"], ...]]");
    const std::size_t i = index_from_json(row[0], at(rp, 0));
    const std::size_t jj = index_from_json(row[1], at(rp, 1));
    const std::string tp = at(rp, 2);
    const Json& terms = array_at(row[2], tp);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string ep = at(tp, t);
      const Json& term = array_at(terms[t], ep);
      if (term.size() != 2) bad(ep, "expected [k, \"p/q\"]");
      const std::size_t k = index_from_json(term[0], at(ep, 0));
      if (i >= dim || jj >= dim || k >= dim) bad(ep, "index out of range for dim " + std::to_string(dim));
      entries.push_back({i, jj, k, rational_from_json(term[1], at(ep, 1))});
    }
  }
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    const Json& arr = array_at(*it, path + ".labels");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_string()) bad(at(path + ".labels", i), "expected a string");
      labels.push_back(arr[i].get<std::string>());
    }
    if (!labels.empty() && labels.size() != dim)
      bad(path + ".labels", "expected " + std::to_string(dim) + " labels");
  }
  return LieAlgebra::make(dim, entries, labels);
}

Json lie_tableau_to_json(const LieTableau& lt) {
  Json out;
  out["lie_algebra"] = lie_algebra_to_json(lt.split.algebra());
  out["a_basis"] = to_json(lt.split.a_basis());
  out["b_basis"] = to_json(lt.split.b_basis());
  out["tableau"] = tableau_to_json(lt.tableau);
  out["mode"] = to_string(lt.mode);
  if (lt.has_offset()) out["offset"] = to_json(lt.offset);
  if (lt.cartan) {
    Json c;
    c["regular_element"] = to_json(lt.cartan->regular_element);
    c["a_basis"] = to_json(lt.cartan->a_basis);
    c["m_basis"] = to_json(lt.cartan->m_basis);
    c["b_basis"] = to_json(lt.cartan->b_basis);
    c["centralizer_basis"] = to_json(lt.cartan->centralizer_basis);
    out["cartan"] = c;
  }
  return out;
}

LieTableau lie_tableau_from_json(const Json& j, const std::string& path) {
  LieAlgebra g = lie_algebra_from_json(field(j, path, "lie_algebra"), path + ".lie_algebra");
  const std::size_t d = g.dim();
  auto a = vectors_from_json(field(j, path, "a_basis"), path + ".a_basis", d);
  auto b = vectors_from_json(field(j, path, "b_basis"), path + ".b_basis", d);
  auto split = SplitLieAlgebra::make(g, a, b);
  Tableau t = tableau_from_json(field(j, path, "tableau"), path + ".tableau");
  CertifyMode mode = CertifyMode::Involutive;
  if (auto it = j.find("mode"); it != j.end()) {
    if (!it->is_string()) bad(path + ".mode", "expected \"involutive\" or \"2acyclic\"");
    try {
      mode = parse_certify_mode(it->get<std::string>());
    } catch (const Error& e) {
      bad(path + ".mode", e.what());
    }
  }
  std::optional<Matrix> offset;
  if (auto it = j.find("offset"); it != j.end())
    offset = matrix_from_json(*it, path + ".offset", b.size(), a.size());
  LieTableau lt = LieTableau::make(std::move(split), std::move(t), mode, offset);
  if (auto it = j.find("cartan"); it != j.end()) {
    const std::string cp = path + ".cartan";
    CartanData cd;
    cd.regular_element = vector_from_json(field(*it, cp, "regular_element"), cp + ".regular_element", d);
    cd.a_basis = vectors_from_json(field(*it, cp, "a_basis"), cp + ".a_basis", d);
    cd.m_basis = vectors_from_json(field(*it, cp, "m_basis"), cp + ".m_basis", d);
    cd.b_basis = vectors_from_json(field(*it, cp, "b_basis"), cp + ".b_basis", d);
    cd.centralizer_basis =
        vectors_from_json(field(*it, cp, "centralizer_basis"), cp + ".centralizer_basis", d);
    lt.cartan = std::move(cd);
    if (!check_cartan_tableau(lt).holds()) bad(cp, "data does not describe a Cartan tableau");
  }
  return lt;
}

Json cochain_to_json(const SpencerCochain& c) {
  const Grading& g = c.grading;
  Json out;
  out["n"] = g.n;
  out["s"] = g.s;
  out["q"] = g.q;
  out["p"] = g.p;
  const Flattening f(g);
  Json terms = Json::array();
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    if (sgn(c.coords[i]) == 0) continue;
    const auto k = f.key(i);
    terms.push_back(Json::array({k.b, f.monomials()[k.mono], f.exts()[k.ext], format_rational(c.coords[i])}));
  }
  out["terms"] = terms;
  return out;
}

SpencerCochain cochain_from_json(const Json& j, const std::string& path) {
  Grading g;
  g.n = index_from_json(field(j, path, "n"), path + ".n");
  g.s = index_from_json(field(j, path, "s"), path + ".s");
  g.q = static_cast<int>(index_from_json(field(j, path, "q"), path + ".q"));
  g.p = static_cast<int>(index_from_json(field(j, path, "p"), path + ".p"));
  if (!g.valid()) bad(path, "p must lie in 0..n");
  const Flattening f(g);
  SpencerCochain c = SpencerCochain::zero(g);
  const std::string tp = path + ".terms";
  const Json& terms = array_at(field(j, path, "terms"), tp);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string ep = at(tp, t);
    const Json& term = array_at(terms[t], ep);
    if (term.size() != 4) bad(ep, "expected [b_index, exponents, ext_indices, \"p/q\"]");
    const std::size_t b = index_from_json(term[0], at(ep, 0));
    if (b >= g.s) bad(at(ep, 0), "b index out of range");
    Exponents e;
    for (std::size_t i = 0; i < array_at(term[1], at(ep, 1)).size(); ++i)
      e.push_back(static_cast<unsigned>(index_from_json(term[1][i], at(at(ep, 1), i))));
    ExtIndex x;
    for (std::size_t i = 0; i < array_at(term[2], at(ep, 2)).size(); ++i)
      x.push_back(index_from_json(term[2][i], at(at(ep, 2), i)));
    std::size_t mono = 0, ext = 0;
    try {
      mono = f.monomials().index_of(e);
    } catch (const Error&) {
      bad(at(ep, 1), "not a degree-" + std::to_string(g.q) + " exponent list in " + std::to_string(g.n) + " variables");
    }
    try {
      ext = f.exts().index_of(x);
    } catch (const Error&) {
      bad(at(ep, 2), "not a strictly increasing list of " + std::to_string(g.p) + " indices below " + std::to_string(g.n));
    }
    c.coords[f.index(b, mono, ext)] += rational_from_json(term[3], at(ep, 3));
  }
  return c;
}

Json vector_polynomial_to_json(const VectorPolynomial& p) {
  Json out = Json::array();
  for (const auto& [mono, v] : p.terms) {
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) coeffs.push_back(Json::array({i, format_rational(v[i])}));
    if (!coeffs.empty()) out.push_back(Json::array({mono, coeffs}));
  }
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms()) out.push_back(Json::array({mono, format_rational(c)}));
  return out;
}

Json characters_to_json(const Characters& c) {
  Json out;
  out["s"] = c.s;
  out["principal"] = c.principal;
  out["cartan_integer"] = c.cartan_integer;
  out["cartan_bound"] = c.cartan_bound();
  out["trials_used"] = c.trials_used;
  out["seed"] = c.seed;
  return out;
}

Json expectation_to_json(const Expectation& e) {
  Json out;
  out["key"] = e.key;
  out["value"] = e.value;
  out["origin"] = to_string(e.origin);
  return out;
}

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json out = lie_tableau_to_json(e.lie_tableau);
  Json c;
  c["name"] = e.name;
  c["description"] = e.description;
  Json exp = Json::array();
  for (const auto& x : e.expected) exp.push_back(expectation_to_json(x));
  c["expected"] = exp;
  c["keep_a_basis"] = e.keep_a_basis;
  if (!e.matrix_basis.empty()) {
    Json ms = Json::array();
    for (const auto& m : e.matrix_basis) ms.push_back(to_json(m));
    c["matrix_basis"] = ms;
  }
  out["catalog"] = c;
  return out;
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, what + ": malformed JSON (" + e.what() + ")");
  }
}

Tableau tableau_from_any(const Json& j) {
  if (j.is_object() && j.contains("lie_algebra")) return tableau_from_json(field(j, "lie_tableau", "tableau"), "lie_tableau.tableau");
  return tableau_from_json(j);
}

LieAlgebra lie_algebra_from_any(const Json& j) {
  if (j.is_object() && j.contains("lie_algebra")) return lie_algebra_from_json(j["lie_algebra"], "lie_tableau.lie_algebra");
  return lie_algebra_from_json(j);
}

}  // namespace tbx
