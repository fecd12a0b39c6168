#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "linalg/matrix.hpp"

namespace tbx {

/// Seeded genericity parameters shared by every randomized flag computation.
struct GenericityOptions {
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  std::int64_t entry_bound = 10;
};

/// A linear subspace of Hom(a, b), dim a = n, dim b = s. Elements are s x n
/// matrices (rows = b coordinates, columns = a coordinates), flattened row-major.
///
/// The parameter basis is the greedy independent subset of the generators, in
/// input order, so tableau coordinates keep the meaning the caller gave them.
class Tableau {
 public:
  /// Empty placeholder in Hom(0, 0); use the factories for real tableaux.
  Tableau() : Tableau(0, 0) {}

  static Tableau make(std::size_t n, std::size_t s, const std::vector<Matrix>& generators);
  static Tableau zero(std::size_t n, std::size_t s);
  static Tableau full(std::size_t n, std::size_t s);

  std::size_t n() const noexcept { return n_; }
  std::size_t s() const noexcept { return s_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  const std::vector<Matrix>& basis() const noexcept { return basis_; }
  /// Canonical span inside the s*n flattening.
  const Subspace& span() const noexcept { return span_; }

  /// sum_e coords[e] * basis()[e]
  Matrix element(const Vector& coords) const;
  bool contains(const Matrix& q) const;

  /// A^{(h)} inside b (x) S^{h+1}(a*); h = -1 gives b itself, h = 0 the span.
  /// Computed once and cached; safe to call concurrently.
  const Subspace& prolongation(int h) const;

 private:
  struct Cache;

  Tableau(std::size_t n, std::size_t s);

  std::size_t n_ = 0;
  std::size_t s_ = 0;
  std::vector<Matrix> generators_;
  std::vector<Matrix> basis_;
  Subspace span_;
  std::shared_ptr<Cache> cache_;
};

Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

/// {Q in A : Q restricted to a_sub is zero}, inside the s*n flattening.
Subspace kernel_restricted(const Tableau& a, const Subspace& a_sub);

/// codim Ker(A, span of the first j columns of flag).
std::size_t restricted_codim(const Tableau& a, const Matrix& flag, std::size_t j);

struct Characters {
  std::vector<std::size_t> s;    // s_1..s_n
  std::size_t principal = 0;     // s_nu, or 0 when every s_j vanishes
  std::size_t cartan_integer = 0;  // nu
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;

  std::size_t total() const;
  /// s_1 + 2 s_2 + ... + n s_n
  std::size_t cartan_bound() const;
  /// s_1 + ... + s_j for j = 1..n
  std::vector<std::size_t> cumulative() const;
};

/// Characters from pooled maxima of restricted codimensions over `trials`
/// seeded random flags. Throws GenericityUnstable when the pooled values
/// violate dim b >= s_1 >= ... >= s_n >= 0, sum = dim A.
Characters characters(const Tableau& a, const GenericityOptions& opts = {});

/// Order-h prolongation viewed on its own: P in b (x) S^{h+1}(a*).
struct ProlongedTableau {
  std::size_t n = 0;
  std::size_t s = 0;
  int h = 0;
  Subspace space;
};

ProlongedTableau order_zero(const Tableau& a);
/// Next order, via the kernel of delta on (space (x) a*) mapped back into
/// b (x) S^{h+2}; cross-checked against the intersection construction.
ProlongedTableau prolong(const ProlongedTableau& current);
ProlongedTableau prolong(const Tableau& a);

Subspace prolong_by_kernel(const ProlongedTableau& current);
Subspace prolong_by_intersection(const ProlongedTableau& current);

/// A^{(h)} re-expressed as an ordinary tableau in Hom(a, A^{(h-1)}), with
/// A^{(h-1)} coordinatized by its echelon basis. h = 0 returns a copy of A.
Tableau prolonged_as_tableau(const Tableau& a, int h);

struct CartanTest {
  std::size_t dim_prolong = 0;
  std::size_t bound = 0;
  bool involutive = false;
  Characters characters;
};

CartanTest cartan_test(const Tableau& a, const GenericityOptions& opts = {});

/// Smallest h <= max_h with A^{(h)} involutive.
std::optional<int> involutivity_order(const Tableau& a, int max_h,
                                      const GenericityOptions& opts = {});

struct ProlongedCharactersCheck {
  bool holds = false;
  Characters base;
  Characters prolonged;
  std::vector<std::size_t> expected;  // s_n + ... + s_j
  bool prolongation_involutive = false;
  bool cartan_integer_preserved = false;
};

/// Throws NotInvolutive unless A passes the Cartan test.
ProlongedCharactersCheck prolonged_characters_formula_check(const Tableau& a,
                                                            const GenericityOptions& opts = {});

/// Dimension of the homogeneous degree-(q+1) polynomial solutions of the
/// first-order system whose symbol is the annihilator of A. Brute force; it
/// never touches the prolongation code.
std::size_t polynomial_solutions_dim(const Tableau& a, int q);

}  // namespace tbx
