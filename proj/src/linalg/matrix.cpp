#include "linalg/matrix.hpp"

#include <algorithm>

#include "error.hpp"

namespace tbx {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorCode::DimensionMismatch, "from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].size() == rows, ErrorCode::DimensionMismatch,
            "from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  require(v.size() == cols_, ErrorCode::DimensionMismatch, "apply: length mismatch");
  Vector r(rows_, Rational(0));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& e = (*this)(i, j);
      if (sgn(e) != 0) r[i] += e * v[j];
    }
  }
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch, "matrix product: shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& y = b(k, j);
        if (sgn(y) != 0) r(i, j) += x * y;
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::DimensionMismatch,
          "matrix sum: shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::DimensionMismatch,
          "matrix difference: shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
  return r;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix r = a;
  for (auto& e : r.entries_) e *= c;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------

RowEchelon row_echelon(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Clear denominators row by row; row scaling does not change the row space.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& d = m(i, j).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }

  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer factor = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = pivot * a[i][j] - factor * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }

  // Normalize the echelon rows to the reduced form over the rationals.
  Matrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& lead = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[i][j] != 0) {
        reduced(i, j) = Rational(a[i][j], lead);
        reduced(i, j).canonicalize();
      }
    }
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = reduced(k, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t j = pc; j < cols; ++j) {
        if (sgn(reduced(i, j)) != 0) reduced(k, j) -= f * reduced(i, j);
      }
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Subspace row_space(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return Subspace::span(m.cols(), rows);
}

Subspace kernel_basis(const Matrix& m) {
  const auto ech = row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(cols, vectors);
}

Subspace image_basis(const Matrix& m) { return row_space(m.transpose()); }

Subspace intersect(const Subspace& s1, const Subspace& s2) {
  require(s1.ambient_dim() == s2.ambient_dim(), ErrorCode::DimensionMismatch,
          "intersect: ambient dimension mismatch");
  const std::size_t n = s1.ambient_dim();
  const std::size_t d1 = s1.dim();
  const std::size_t d2 = s2.dim();
  if (d1 == 0 || d2 == 0) return Subspace(n);
  Matrix m(n, d1 + d2);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t i = 0; i < n; ++i) m(i, a) = s1.basis()[a][i];
  for (std::size_t b = 0; b < d2; ++b)
    for (std::size_t i = 0; i < n; ++i) m(i, d1 + b) = -s2.basis()[b][i];
  const auto ker = kernel_basis(m);
  std::vector<Vector> vectors;
  for (const auto& k : ker.basis()) {
    Vector v(n, Rational(0));
    for (std::size_t a = 0; a < d1; ++a) axpy(k[a], s1.basis()[a], v);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace sum(const Subspace& s1, const Subspace& s2) {
  require(s1.ambient_dim() == s2.ambient_dim(), ErrorCode::DimensionMismatch,
          "sum: ambient dimension mismatch");
  std::vector<Vector> vectors = s1.basis();
  vectors.insert(vectors.end(), s2.basis().begin(), s2.basis().end());
  return Subspace::span(s1.ambient_dim(), vectors);
}

Subspace annihilator(const Subspace& s) {
  return kernel_basis(Matrix::from_rows(s.basis(), s.ambient_dim()));
}

bool contains(const Subspace& s, const Vector& v) { return s.contains(v); }

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b) {
  require(b.size() == a.rows(), ErrorCode::DimensionMismatch,
          "solve_affine: right-hand side length must equal the row count");
  const std::size_t cols = a.cols();
  Matrix aug(a.rows(), cols + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = b[i];
  }
  const auto ech = row_echelon(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == cols) return std::nullopt;
  Vector x(cols, Rational(0));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, cols);
  return AffineSolution{std::move(x), kernel_basis(a)};
}

Matrix inverse(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionMismatch, "inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto ech = row_echelon(aug);
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) {
    fail(ErrorCode::InvalidArgument, "inverse: matrix is singular");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const auto ech = row_echelon(Matrix::from_rows(vectors, ambient_dim));
  s.pivots_ = ech.pivots;
  s.basis_.reserve(ech.pivots.size());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) s.basis_.push_back(ech.reduced.row(i));
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(const Vector& v) const {
  require(v.size() == ambient_, ErrorCode::DimensionMismatch,
          "subspace: vector length " + std::to_string(v.size()) + " != ambient dimension " +
              std::to_string(ambient_));
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = r[pivots_[i]];
    if (sgn(c) != 0) axpy(-c, basis_[i], r);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!is_pivot[i]) idx.push_back(i);
  return idx;
}

Vector Subspace::quotient_coordinates(const Vector& v) const {
  const Vector r = reduce(v);
  Vector c;
  for (auto i : complement_indices()) c.push_back(r[i]);
  return c;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_); }

// ---------------------------------------------------------------------------

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Matrix SeededRng::matrix(std::size_t rows, std::size_t cols, std::int64_t entry_bound) {
  require(entry_bound >= 1, ErrorCode::InvalidArgument, "entry_bound must be >= 1");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Rational(static_cast<long>(uniform(-entry_bound, entry_bound)));
  return m;
}

Matrix SeededRng::invertible(std::size_t n, std::int64_t entry_bound) {
  for (;;) {
    Matrix m = matrix(n, n, entry_bound);
    if (rank(m) == n) return m;
  }
}

Vector SeededRng::vector(std::size_t n, std::int64_t entry_bound) {
  Vector v(n);
  for (auto& x : v) x = Rational(static_cast<long>(uniform(-entry_bound, entry_bound)));
  return v;
}

Matrix seeded_random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                            std::int64_t entry_bound, bool require_invertible) {
  SeededRng rng(seed);
  if (require_invertible) {
    require(rows == cols, ErrorCode::InvalidArgument,
            "require_invertible needs a square shape");
    return rng.invertible(rows, entry_bound);
  }
  return rng.matrix(rows, cols, entry_bound);
}

}  // namespace tbx
