#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lie/lie_algebra.hpp"
#include "spencer/spencer.hpp"
#include "tableau/tableau.hpp"

namespace tbx {

/// g = a (+) b with projections along the splitting.
class SplitLieAlgebra {
 public:
  /// Throws NotComplementary unless a_basis + b_basis is a basis of g.
  static SplitLieAlgebra make(const LieAlgebra& g, const std::vector<Vector>& a_basis,
                              const std::vector<Vector>& b_basis);

  const LieAlgebra& algebra() const noexcept { return g_; }
  std::size_t dim_a() const noexcept { return a_basis_.size(); }
  std::size_t dim_b() const noexcept { return b_basis_.size(); }
  const std::vector<Vector>& a_basis() const noexcept { return a_basis_; }
  const std::vector<Vector>& b_basis() const noexcept { return b_basis_; }

  /// Coordinates along (a_basis, b_basis); first dim_a entries are the a part.
  Vector coordinates(const Vector& x) const;
  Vector a_part(const Vector& x) const;  // in a_basis coordinates
  Vector b_part(const Vector& x) const;  // in b_basis coordinates
  Vector from_a(const Vector& coords) const;
  Vector from_b(const Vector& coords) const;

  const Matrix& proj_a() const noexcept { return proj_a_; }
  const Matrix& proj_b() const noexcept { return proj_b_; }

 private:
  LieAlgebra g_;
  std::vector<Vector> a_basis_;
  std::vector<Vector> b_basis_;
  Matrix basis_;       // columns: a_basis then b_basis
  Matrix inverse_;
  Matrix proj_a_;
  Matrix proj_b_;
};

enum class CertifyMode { Involutive, TwoAcyclic };
const char* to_string(CertifyMode mode);
CertifyMode parse_certify_mode(const std::string& text);

/// Data kept for tableaux produced from a Cartan decomposition. a, m, b and
/// the centralizer are recorded as g-vectors; b' = (b, m, (g0)_a) in that
/// order is the b side of the splitting.
struct CartanData {
  Vector regular_element;
  std::vector<Vector> a_basis;
  std::vector<Vector> m_basis;
  std::vector<Vector> b_basis;
  std::vector<Vector> centralizer_basis;
};

/// A tableau A in Hom(a, b) attached to a splitting of g. The elements are
/// Q = offset + p^e Q_e with Q_e the tableau's parameter basis; the offset is
/// zero except for affine families.
struct LieTableau {
  SplitLieAlgebra split;
  Tableau tableau;
  CertifyMode mode = CertifyMode::Involutive;
  Matrix offset;  // dim b x dim a
  std::optional<CartanData> cartan;

  static LieTableau make(SplitLieAlgebra split, Tableau tableau,
                         CertifyMode mode = CertifyMode::Involutive,
                         std::optional<Matrix> offset = std::nullopt);

  /// offset + sum_e p[e] Q_e
  Matrix element(const Vector& p) const;
  bool has_offset() const { return !offset.is_zero(); }
};

/// A polynomial in the tableau parameters p^e with coefficients in some
/// vector space. Monomials are sorted index lists: {} is the constant term,
/// {e, e, f} is (p^e)^2 p^f.
struct VectorPolynomial {
  using Monomial = std::vector<std::size_t>;

  std::size_t vars = 0;
  std::size_t width = 0;
  std::map<Monomial, Vector> terms;

  Vector evaluate(const Vector& p) const;
  int degree() const;
  bool is_zero() const;
  /// Coefficient of `mono`, zero vector when absent.
  Vector coefficient(const Monomial& mono) const;
  void add(const Monomial& mono, const Vector& v);
};

std::string monomial_to_string(const VectorPolynomial::Monomial& mono);

/// tau(Q)(A_i, A_j) = [A_i + Q A_i, A_j + Q A_j]_b - Q([A_i + Q A_i, A_j + Q A_j]_a)
/// as an element of b (x) L^2(a*), Q = element(p).
SpencerCochain tau_eval(const LieTableau& lt, const Vector& p);

/// tau as an exact polynomial in p (degree at most 3), recovered
/// from finitely many evaluations and checked at `checks` random points.
VectorPolynomial tau_polynomial(const LieTableau& lt, std::uint64_t seed = 1,
                                std::size_t checks = 20);

struct Condition2Witness {
  VectorPolynomial::Monomial monomial;
  TorsionClass cls;
};

struct Condition2Report {
  bool holds = true;
  VectorPolynomial tau;
  std::vector<Condition2Witness> witnesses;
};

/// tau(Q) lies in Im delta^{1,1} for every Q iff every coefficient of the
/// tau polynomial does, since that image is a linear subspace.
Condition2Report check_condition2(const LieTableau& lt, std::uint64_t seed = 1);

struct CertifyReport {
  bool ok = false;
  CertifyMode mode = CertifyMode::Involutive;
  bool condition1 = false;
  std::optional<CartanTest> cartan;            // involutive mode
  std::optional<AcyclicityVerdict> acyclicity;  // 2-acyclic mode
  Condition2Report condition2;
  GenericityOptions options;
  int q_max = 0;
};

CertifyReport certify(const LieTableau& lt, const GenericityOptions& opts = {}, int q_max = 4);

struct AdaptedBasis {
  std::vector<Vector> a_vecs;  // in g
  std::vector<Vector> b_vecs;  // in g, spanning Im A
  std::vector<Vector> c_vecs;  // in g, completing b
  Matrix a_change;             // new a-basis in old a coordinates (columns)
  Matrix b_change;             // (B | C) in old b coordinates (columns)
  Matrix change_of_basis;      // columns: a_vecs, b_vecs, c_vecs
  bool generic_flag = true;    // false when the given a-basis was kept
};

/// Im A = span of all generator columns. With `keep_a_basis` the split's
/// a-basis is used as is; otherwise a seeded random flag whose prefix
/// codimensions reproduce the character sums.
AdaptedBasis adapted_basis(const LieTableau& lt, const GenericityOptions& opts = {},
                           bool keep_a_basis = false);

/// Cartan tableau of (cd, a, A_reg): m in Hom(a, b'), X -> -ad_X, with
/// b' = (b, m, (g0)_a). Throws InvalidArgument if A_reg is not regular.
LieTableau cartan_tableau(const CartanDecomposition& cd, const Subspace& a,
                          const Vector& a_reg);

struct CartanCheck {
  bool ad_bijective = false;
  bool embedding_injective = false;
  bool condition2 = false;
  std::size_t dim_m = 0;
  std::size_t dim_b = 0;
  std::size_t tableau_dim = 0;
  bool holds() const { return ad_bijective && embedding_injective && condition2; }
};

/// Rechecks the properties promised for a Cartan tableau.
CartanCheck check_cartan_tableau(const LieTableau& lt);

}  // namespace tbx
