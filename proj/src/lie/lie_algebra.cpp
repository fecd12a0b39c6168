#include "lie/lie_algebra.hpp"

#include <sstream>

namespace tbx {

namespace {

std::string describe_residual(const Vector& r) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < r.size(); ++i) out << (i ? ", " : "") << format_rational(r[i]);
  out << ")";
  return out.str();
}

}  // namespace

JacobiViolationError::JacobiViolationError(std::size_t i_, std::size_t j_, std::size_t k_,
                                           Vector residual_)
    : Error(ErrorCode::JacobiViolation,
            "Jacobi identity fails on basis triple (" + std::to_string(i_) + ", " +
                std::to_string(j_) + ", " + std::to_string(k_) + "), residual " +
                describe_residual(residual_)),
      i(i_), j(j_), k(k_), residual(std::move(residual_)) {}

LieAlgebra LieAlgebra::make(std::size_t dim, const std::vector<StructureEntry>& entries,
                            std::vector<std::string> labels) {
  require(labels.empty() || labels.size() == dim, ErrorCode::DimensionMismatch,
          "lie algebra: expected " + std::to_string(dim) + " labels");
  LieAlgebra g;
  g.dim_ = dim;
  g.labels_ = std::move(labels);
  g.table_.assign(dim * dim, zero_vector(dim));
  std::vector<std::vector<bool>> seen(dim * dim, std::vector<bool>(dim, false));
  for (const auto& e : entries) {
    require(e.i < dim && e.j < dim && e.k < dim, ErrorCode::DimensionMismatch,
            "structure constant index out of range: (" + std::to_string(e.i) + ", " +
                std::to_string(e.j) + ", " + std::to_string(e.k) + ")");
    if (e.i == e.j) {
      require(sgn(e.value) == 0, ErrorCode::InvalidArgument,
              "antisymmetry: [e_" + std::to_string(e.i) + ", e_" + std::to_string(e.i) +
                  "] must vanish");
      continue;
    }
    auto set = [&](std::size_t a, std::size_t b, const Rational& v) {
      auto flag = seen[a * dim + b][e.k];
      if (flag) {
        require(g.table_[a * dim + b][e.k] == v, ErrorCode::InvalidArgument,
                "antisymmetry: inconsistent constants for (" + std::to_string(e.i) + ", " +
                    std::to_string(e.j) + ") on e_" + std::to_string(e.k));
      }
      seen[a * dim + b][e.k] = true;
      g.table_[a * dim + b][e.k] = v;
    };
    set(e.i, e.j, e.value);
    set(e.j, e.i, -e.value);
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        Vector r = g.bracket(unit_vector(dim, i), g.bracket_basis(j, k));
        axpy(1, g.bracket(unit_vector(dim, j), g.bracket_basis(k, i)), r);
        axpy(1, g.bracket(unit_vector(dim, k), g.bracket_basis(i, j)), r);
        if (!is_zero(r)) throw JacobiViolationError(i, j, k, r);
      }
  return g;
}

LieAlgebra LieAlgebra::from_matrices(const std::vector<Matrix>& basis,
                                     std::vector<std::string> labels) {
  const std::size_t dim = basis.size();
  require(dim > 0, ErrorCode::InvalidArgument, "matrix Lie algebra needs a nonempty basis");
  const std::size_t rows = basis[0].rows();
  for (const auto& m : basis) {
    require(m.rows() == rows && m.cols() == rows, ErrorCode::DimensionMismatch,
            "matrix Lie algebra: basis matrices must be square of equal size");
  }
  std::vector<Vector> flat;
  for (const auto& m : basis) flat.push_back(m.entries());
  const Matrix coords = Matrix::from_columns(flat, rows * rows);
  require(rank(coords) == dim, ErrorCode::InvalidArgument,
          "matrix Lie algebra: basis matrices are linearly dependent");
  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Matrix c = basis[i] * basis[j] - basis[j] * basis[i];
      const auto sol = solve_affine(coords, c.entries());
      require(sol.has_value(), ErrorCode::InvalidArgument,
              "matrix span is not closed under the commutator: [" + std::to_string(i) + ", " +
                  std::to_string(j) + "]");
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(sol->particular[k]) != 0) entries.push_back({i, j, k, sol->particular[k]});
    }
  return make(dim, entries, std::move(labels));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return make(dim, {}); }

std::string LieAlgebra::label(std::size_t i) const {
  return labels_.empty() ? "e" + std::to_string(i) : labels_[i];
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  require(x.size() == dim_ && y.size() == dim_, ErrorCode::DimensionMismatch,
          "bracket: vectors must have length " + std::to_string(dim_));
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0 || i == j) continue;
      axpy(x[i] * y[j], table_[i * dim_ + j], out);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vector col = bracket(x, unit_vector(dim_, j));
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix LieAlgebra::killing_form() const {
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad(unit_vector(dim_, i)));
  Matrix k(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      Rational tr = 0;
      for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) tr += ads[i](r, c) * ads[j](c, r);
      k(i, j) = tr;
      k(j, i) = tr;
    }
  return k;
}

std::vector<StructureEntry> LieAlgebra::entries() const {
  std::vector<StructureEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(table_[i * dim_ + j][k]) != 0) out.push_back({i, j, k, table_[i * dim_ + j][k]});
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!tbx::is_zero(v)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Subspace centralizer_in(const LieAlgebra& g, const Subspace& s, const Subspace& t) {
  require(s.ambient_dim() == g.dim() && t.ambient_dim() == g.dim(), ErrorCode::DimensionMismatch,
          "centralizer_in: subspaces must live in g");
  if (s.dim() == 0 || t.dim() == 0) return s;
  // Unknown coefficients c over the basis of S; rows: coordinates of [X, t_l].
  Matrix m(g.dim() * t.dim(), s.dim());
  for (std::size_t c = 0; c < s.dim(); ++c)
    for (std::size_t l = 0; l < t.dim(); ++l) {
      const Vector br = g.bracket(s.basis()[c], t.basis()[l]);
      for (std::size_t r = 0; r < g.dim(); ++r) m(l * g.dim() + r, c) = br[r];
    }
  std::vector<Vector> out;
  const Subspace ker = kernel_basis(m);
  for (const auto& k : ker.basis()) {
    Vector x = zero_vector(g.dim());
    for (std::size_t c = 0; c < k.size(); ++c) axpy(k[c], s.basis()[c], x);
    out.push_back(std::move(x));
  }
  return Subspace::span(g.dim(), out);
}

Subspace killing_perp(const LieAlgebra& g, const Subspace& s) {
  require(s.ambient_dim() == g.dim(), ErrorCode::DimensionMismatch,
          "killing_perp: subspace must live in g");
  if (s.dim() == 0) return Subspace::full(g.dim());
  const Matrix k = g.killing_form();
  std::vector<Vector> rows;
  for (const auto& v : s.basis()) rows.push_back(k.apply(v));
  return kernel_basis(Matrix::from_rows(rows, g.dim()));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& s, const Subspace& t) {
  std::vector<Vector> out;
  for (const auto& x : s.basis())
    for (const auto& y : t.basis()) out.push_back(g.bracket(x, y));
  return Subspace::span(g.dim(), out);
}

bool brackets_into(const LieAlgebra& g, const Subspace& s, const Subspace& t,
                   const Subspace& target) {
  for (const auto& x : s.basis())
    for (const auto& y : t.basis())
      if (!target.contains(g.bracket(x, y))) return false;
  return true;
}

CartanDecomposition CartanDecomposition::make(const LieAlgebra& g, const Subspace& g0,
                                              const Subspace& g1) {
  require(g0.ambient_dim() == g.dim() && g1.ambient_dim() == g.dim(),
          ErrorCode::DimensionMismatch, "Cartan decomposition: subspaces must live in g");
  require(g0.dim() + g1.dim() == g.dim() && sum(g0, g1).dim() == g.dim(),
          ErrorCode::NotComplementary, "Cartan decomposition: g0 and g1 are not complementary");
  require(rank(g.killing_form()) == g.dim(), ErrorCode::NotSemisimple,
          "Cartan decomposition: Killing form is degenerate");
  require(brackets_into(g, g0, g0, g0), ErrorCode::InvalidArgument,
          "Cartan decomposition: [g0, g0] is not contained in g0");
  require(brackets_into(g, g0, g1, g1), ErrorCode::InvalidArgument,
          "Cartan decomposition: [g0, g1] is not contained in g1");
  require(brackets_into(g, g1, g1, g0), ErrorCode::InvalidArgument,
          "Cartan decomposition: [g1, g1] is not contained in g0");
  CartanDecomposition cd;
  cd.g_ = g;
  cd.g0_ = g0;
  cd.g1_ = g1;
  return cd;
}

CartanSpaces cartan_spaces(const CartanDecomposition& cd, const Subspace& a) {
  const LieAlgebra& g = cd.algebra();
  require(a.ambient_dim() == g.dim(), ErrorCode::DimensionMismatch,
          "cartan_spaces: a must live in g");
  for (const auto& v : a.basis()) {
    require(cd.g1().contains(v), ErrorCode::NotInDecomposition, "a is not contained in g1");
  }
  require(bracket_span(g, a, a).dim() == 0, ErrorCode::NotAbelian, "[a, a] is not zero");
  CartanSpaces sp;
  sp.a = a;
  sp.m = intersect(killing_perp(g, a), cd.g1());
  sp.centralizer = centralizer_in(g, cd.g0(), a);
  sp.b = intersect(cd.g0(), killing_perp(g, sp.centralizer));
  return sp;
}

bool is_regular(const CartanDecomposition& cd, const Subspace& a, const Vector& a_reg) {
  require(a_reg.size() == cd.algebra().dim(), ErrorCode::DimensionMismatch,
          "is_regular: element has the wrong length");
  require(cd.g1().contains(a_reg), ErrorCode::NotInDecomposition,
          "regular element candidate is not in g1");
  require(a.contains(a_reg), ErrorCode::NotInDecomposition,
          "regular element candidate is not in a");
  const auto sp = cartan_spaces(cd, a);
  if (sp.m.dim() != sp.b.dim()) return false;
  std::vector<Vector> images;
  for (const auto& x : sp.m.basis()) {
    const Vector y = cd.algebra().bracket(a_reg, x);
    if (!sp.b.contains(y)) return false;
    images.push_back(y);
  }
  return Subspace::span(cd.algebra().dim(), images).dim() == sp.m.dim();
}

}  // namespace tbx
