#pragma once

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg/matrix.hpp"

namespace tbx {

class JacobiViolationError : public Error {
 public:
  JacobiViolationError(std::size_t i, std::size_t j, std::size_t k, Vector residual);

  std::size_t i, j, k;
  Vector residual;  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};

/// One structure-constant entry: [e_i, e_j] has coefficient `value` on e_k.
struct StructureEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational value;
};

/// A finite-dimensional Lie algebra given by structure constants in a basis.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Entries for (i, j) imply the antisymmetric (j, i) ones; repeated data must
  /// be consistent. Throws JacobiViolation naming the first failing triple.
  static LieAlgebra make(std::size_t dim, const std::vector<StructureEntry>& entries,
                         std::vector<std::string> labels = {});
  /// Structure constants of the matrix Lie algebra spanned by `basis`, via
  /// commutators. Throws InvalidArgument when the span is not closed.
  static LieAlgebra from_matrices(const std::vector<Matrix>& basis,
                                  std::vector<std::string> labels = {});
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t i) const;

  /// [e_i, e_j] in coordinates.
  const Vector& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad_x: column j is [x, e_j].
  Matrix ad(const Vector& x) const;
  Matrix killing_form() const;

  /// Sparse i < j listing of the nonzero constants.
  std::vector<StructureEntry> entries() const;

  bool is_abelian() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> table_;
  std::vector<std::string> labels_;
};

/// {X in S : [X, t] = 0 for every t in T}
Subspace centralizer_in(const LieAlgebra& g, const Subspace& s, const Subspace& t);
/// Killing-orthogonal of S inside g.
Subspace killing_perp(const LieAlgebra& g, const Subspace& s);
/// span([x, y]) for x in S, y in T.
Subspace bracket_span(const LieAlgebra& g, const Subspace& s, const Subspace& t);
bool brackets_into(const LieAlgebra& g, const Subspace& s, const Subspace& t,
                   const Subspace& target);

/// g = g0 (+) g1 with [g0,g0] in g0, [g0,g1] in g1, [g1,g1] in g0 and a
/// nondegenerate Killing form.
class CartanDecomposition {
 public:
  /// Throws NotComplementary, NotSemisimple or InvalidArgument (bracket rules).
  static CartanDecomposition make(const LieAlgebra& g, const Subspace& g0, const Subspace& g1);

  const LieAlgebra& algebra() const noexcept { return g_; }
  const Subspace& g0() const noexcept { return g0_; }
  const Subspace& g1() const noexcept { return g1_; }

 private:
  LieAlgebra g_;
  Subspace g0_;
  Subspace g1_;
};

/// The spaces attached to an abelian a inside g1.
struct CartanSpaces {
  Subspace a;
  Subspace m;            // a^perp cap g1
  Subspace centralizer;  // (g0)_a
  Subspace b;            // g0 cap (g0)_a^perp
};

/// Throws NotAbelian if [a, a] != 0 and NotInDecomposition if a is not in g1.
CartanSpaces cartan_spaces(const CartanDecomposition& cd, const Subspace& a);

/// ad_A maps m injectively onto b. Throws as cartan_spaces, and
/// NotInDecomposition when A is not in a.
bool is_regular(const CartanDecomposition& cd, const Subspace& a, const Vector& a_reg);

}  // namespace tbx
