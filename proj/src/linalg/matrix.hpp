#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "linalg/rational.hpp"

namespace tbx {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// A linear subspace of Q^ambient. The basis is kept in reduced row echelon
/// form, so two spans of the same subspace compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its component along the basis; zero iff v is in the span.
  /// The remainder vanishes on every pivot coordinate.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  /// Coefficients of v in the (echelon) basis, or nullopt if v is not in the span.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Coordinates of v modulo this subspace in the complement spanned by the
  /// non-pivot unit vectors (ascending index order).
  Vector quotient_coordinates(const Vector& v) const;
  std::vector<std::size_t> complement_indices() const;

  /// Matrix whose columns are the basis vectors.
  Matrix basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct RowEchelon {
  Matrix reduced;                    // RREF, only the nonzero rows
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Fraction-free (Bareiss) forward elimination over the integers, then exact
/// normalization to reduced row echelon form.
RowEchelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace intersect(const Subspace& s1, const Subspace& s2);
Subspace sum(const Subspace& s1, const Subspace& s2);
/// {x : <x, v> = 0 for all v in s}
Subspace annihilator(const Subspace& s);
bool contains(const Subspace& s, const Vector& v);

struct AffineSolution {
  Vector particular;
  Subspace homogeneous;
};

/// Solves A x = b; nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

/// Inverse of a square matrix; throws InvalidArgument when singular.
Matrix inverse(const Matrix& m);

/// Deterministic integer-valued random matrices. The entry map uses only the
/// raw mt19937_64 stream, so results do not depend on the standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Matrix matrix(std::size_t rows, std::size_t cols, std::int64_t entry_bound);
  Matrix invertible(std::size_t n, std::int64_t entry_bound);
  Vector vector(std::size_t n, std::int64_t entry_bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

Matrix seeded_random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                            std::int64_t entry_bound, bool require_invertible = false);

}  // namespace tbx
