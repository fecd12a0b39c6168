#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie_tableau/lie_tableau.hpp"
#include "pds/pds.hpp"

namespace tbx {

/// Where an expected value comes from: the published examples, an
/// independent computation, or a trivial identity.
enum class Origin { Published, Derived, Trivial };
const char* to_string(Origin origin);

struct Expectation {
  std::string key;
  std::string value;
  Origin origin = Origin::Derived;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  LieTableau lie_tableau;
  std::vector<Expectation> expected;
  /// Matrix realization of g in the algebra's basis order, when there is one.
  std::vector<Matrix> matrix_basis;
  /// Build the PDS on the split's own a-basis.
  bool keep_a_basis = false;
};

struct CatalogOptions {
  /// Gram entry H_04 = H_40 of the so(4,1) realization.
  Rational so41_c = Rational(-1, 2);
  /// Read the family's line as lying in the (p1, p2) plane.
  bool family_p2_reading = false;
};

/// Base names; parametrized entries also accept "full(n,s)" and
/// "so41_family(u,b1,b2)".
std::vector<std::string> catalog_names();
CatalogEntry catalog_get(const std::string& name, const CatalogOptions& opts = {});

/// so(4,1) as 5x5 matrices X with X^T H + H X = 0, H_04 = H_40 = c,
/// H_kk = 1 (k = 1, 2, 3), in the basis (A1, A2, B1..B4, C1..C4) dual to the
/// coframe alpha^1 = x_10, alpha^2 = x_20, beta^1 = x_00, beta^2 = x_01,
/// beta^3 = x_02, beta^4 = x_21, gamma^1 = x_03, gamma^2 = x_30,
/// gamma^3 = x_10 - x_31, gamma^4 = x_20 + x_32.
struct So41 {
  LieAlgebra algebra;
  SplitLieAlgebra split;   // a = (A1, A2), b = (B1..B4, C1..C4)
  std::vector<Matrix> matrices;
  Matrix gram;
  Matrix coframe;          // rows: coframe functionals on the flattened 5x5 matrix
};

/// c = -1/2 is the quadratic form -x^0 x^4 + sum (x^k)^2; c = -1 gives the
/// frame matrix with x_4k = x_k0 and x_k4 = x_0k.
So41 build_so41(const Rational& c = Rational(-1, 2));

/// Hom(a, b) coordinates for the Moebius generators, b = (B1..B4, C1..C4).
Matrix so41_generator(const std::string& which);  // q1, q2, p1, p2, p3

/// Rational point on the unit circle: ((1-u^2)/(1+u^2), 2u/(1+u^2)).
std::pair<Rational, Rational> circle_point(const Rational& u);

/// The affine family with p1 = t cos a + b1, p3 = t sin a + b2 and p2 free.
/// With `p2_reading` the line lies in the (p1, p2) plane and p3 is free.
CatalogEntry so41_family(const Rational& u, const Rational& b1, const Rational& b2,
                         const CatalogOptions& opts = {});

CatalogEntry full_entry(std::size_t n, std::size_t s);

struct ExpectationCheck {
  Expectation expected;
  std::string actual;
  bool ok = false;
};

struct EntryVerification {
  std::string name;
  bool ok = false;
  CertifyReport certification;
  std::optional<Theorem41Report> theorem;
  std::vector<ExpectationCheck> checks;
};

/// Certifies the entry, runs the end-to-end system check when it certifies
/// and compares every expectation.
EntryVerification verify_entry(const CatalogEntry& entry, const GenericityOptions& opts = {},
                               int q_max = 4, std::size_t sample_points = 20);

std::string format_characters(const std::vector<std::size_t>& s);

}  // namespace tbx
