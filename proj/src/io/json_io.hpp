#pragma once

// JSON file formats. Rationals are strings "p/q" (or "p"); indices are
// 0-based. Parse errors name the offending field path.

#include <string>

#include <json.hpp>

#include "catalog/catalog.hpp"

namespace tbx {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);  // list of rows
Json to_json(const std::vector<Vector>& vs);

Rational rational_from_json(const Json& j, const std::string& path);
Vector vector_from_json(const Json& j, const std::string& path, std::optional<std::size_t> size = {});
Matrix matrix_from_json(const Json& j, const std::string& path, std::size_t rows, std::size_t cols);

/// { "n", "s", "generators": [s x n matrices] }
Json tableau_to_json(const Tableau& a);
Tableau tableau_from_json(const Json& j, const std::string& path = "tableau");

/// { "dim", "structure": [[i, j, [[k, "p/q"], ...]], ...], "labels" }
Json lie_algebra_to_json(const LieAlgebra& g);
LieAlgebra lie_algebra_from_json(const Json& j, const std::string& path = "lie_algebra");

/// { "lie_algebra", "a_basis", "b_basis", "tableau", "mode", "offset"?, "cartan"? }
Json lie_tableau_to_json(const LieTableau& lt);
LieTableau lie_tableau_from_json(const Json& j, const std::string& path = "lie_tableau");

/// { "n", "s", "q", "p", "terms": [[b, exponents, ext, "p/q"], ...] }
Json cochain_to_json(const SpencerCochain& c);
SpencerCochain cochain_from_json(const Json& j, const std::string& path = "cochain");

/// Sparse polynomial: [[monomial, [[flat_index, "p/q"], ...]], ...]
Json vector_polynomial_to_json(const VectorPolynomial& p);
Json polynomial_to_json(const Polynomial& p);

Json characters_to_json(const Characters& c);
Json expectation_to_json(const Expectation& e);
/// Bundle plus a "catalog" block with name, description and expectations.
Json catalog_entry_to_json(const CatalogEntry& e);

Json parse_json_text(const std::string& text, const std::string& what);

/// A tableau block, either standalone or inside a lie-tableau bundle.
Tableau tableau_from_any(const Json& j);
LieAlgebra lie_algebra_from_any(const Json& j);

}  // namespace tbx
