#pragma once

// Multigraded spaces b (x) S^q(a*) (x) L^p(a*) and the Spencer coboundary.
//
// Conventions used everywhere in the library:
//  * S^q(a*) is the space of homogeneous polynomials of degree q in
//    x_1..x_n, with plain monomial coefficients. Monomials of one degree are
//    listed in lexicographically decreasing exponent order, so degree 1 is
//    x_1, ..., x_n.
//  * L^p(a*) has the basis dx^I, I strictly increasing (0-based), in
//    lexicographic order.
//  * The flat coordinate of (b-index, monomial, ext-index) is
//    (b * |S^q| + monomial) * |L^p| + ext. For (q, p) = (1, 0) this is the
//    row-major flattening of an s x n matrix, i.e. of Hom(a, b).
//  * delta(xi) = sum_i (d xi / d x_i) ^ dx^i, with dx^i wedged on the right
//    and no combinatorial prefactor. Any other nonzero rescaling per bidegree
//    has the same kernels and images.

#include <cstddef>
#include <map>
#include <vector>

#include "linalg/matrix.hpp"

namespace tbx {

using Exponents = std::vector<unsigned>;
using ExtIndex = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);

/// Homogeneous monomials of a fixed degree in n variables.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, int degree);

  std::size_t n() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponents>& monomials() const noexcept { return monomials_; }
  std::size_t index_of(const Exponents& e) const;

 private:
  std::size_t n_;
  int degree_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> index_;
};

/// Strictly increasing index lists of length p drawn from 0..n-1.
class ExtBasis {
 public:
  ExtBasis(std::size_t n, int p);

  std::size_t size() const noexcept { return indices_.size(); }
  const ExtIndex& operator[](std::size_t i) const { return indices_[i]; }
  std::size_t index_of(const ExtIndex& e) const;

 private:
  std::vector<ExtIndex> indices_;
  std::map<ExtIndex, std::size_t> index_;
};

struct Grading {
  std::size_t n = 0;  // dim a
  std::size_t s = 0;  // dim b
  int q = 0;          // symmetric degree
  int p = 0;          // exterior degree

  /// s * C(n+q-1, q) * C(n, p); zero when q < 0 or p outside 0..n.
  std::size_t size() const;
  bool valid() const { return q >= 0 && p >= 0 && static_cast<std::size_t>(p) <= n; }
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// Index helper for one graded piece.
class Flattening {
 public:
  explicit Flattening(const Grading& g);

  const Grading& grading() const noexcept { return grading_; }
  std::size_t size() const noexcept { return size_; }
  const MonomialBasis& monomials() const noexcept { return monomials_; }
  const ExtBasis& exts() const noexcept { return exts_; }

  std::size_t index(std::size_t b, std::size_t mono, std::size_t ext) const {
    return (b * monomials_.size() + mono) * exts_.size() + ext;
  }
  struct Key {
    std::size_t b, mono, ext;
  };
  Key key(std::size_t flat) const;

 private:
  Grading grading_;
  MonomialBasis monomials_;
  ExtBasis exts_;
  std::size_t size_;
};

/// An element of b (x) S^q(a*) (x) L^p(a*), stored densely in the flattening.
struct SpencerCochain {
  Grading grading;
  Vector coords;

  static SpencerCochain zero(const Grading& g);
  bool is_zero() const { return tbx::is_zero(coords); }
};

SpencerCochain coboundary(const SpencerCochain& x);

/// Matrix of delta^{q,p} on the full space: columns indexed by the (q, p)
/// flattening, rows by the (q-1, p+1) flattening.
Matrix coboundary_matrix(std::size_t n, std::size_t s, int q, int p);

/// Contraction with the embedding b (x) S^{q}(a*) -> b (x) S^{q-1}(a*) (x) a*
/// given by the gradient (delta^{q,0}). Exposed for prolongation code.
Vector gradient(std::size_t n, std::size_t s, int q, const Vector& poly);

/// Inverse of the gradient on closed elements: from F in b (x) S^{q}(a*) (x) a*
/// with dF = 0, returns the unique P in b (x) S^{q+1}(a*) with grad P = F
/// (Euler's formula P = sum_i x_i F_i / (q + 1)).
Vector integrate_gradient(std::size_t n, std::size_t s, int q, const Vector& closed_form);

/// Basis of V (x) L^p(a*) inside b (x) S^q (x) L^p, where V is a subspace of
/// b (x) S^q(a*) given in its own flattening.
std::vector<Vector> tensor_with_ext(const Subspace& v, std::size_t n, std::size_t s, int q,
                                    int p);

}  // namespace tbx
