#include "tableau/tableau.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "error.hpp"
#include "spencer/complex.hpp"

namespace tbx {

struct Tableau::Cache {
  std::mutex mutex;
  std::vector<Subspace> levels;  // levels[h] = A^{(h)}
  Subspace target;
};

Tableau::Tableau(std::size_t n, std::size_t s)
    : n_(n), s_(s), span_(n * s), cache_(std::make_shared<Cache>()) {
  cache_->target = Subspace::full(s);
}

Vector flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  require(v.size() == rows * cols, ErrorCode::DimensionMismatch, "unflatten: size mismatch");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

Tableau Tableau::make(std::size_t n, std::size_t s, const std::vector<Matrix>& generators) {
  require(n >= 1, ErrorCode::InvalidArgument, "tableau: dim a must be at least 1");
  Tableau t(n, s);
  t.generators_ = generators;
  std::vector<Vector> kept;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Matrix& m = generators[g];
    if (m.rows() != s || m.cols() != n) {
      fail(ErrorCode::DimensionMismatch,
           "tableau generator " + std::to_string(g) + " is " + std::to_string(m.rows()) + "x" +
               std::to_string(m.cols()) + ", expected " + std::to_string(s) + "x" +
               std::to_string(n));
    }
    const Vector v = flatten(m);
    if (t.span_.contains(v)) continue;
    kept.push_back(v);
    t.basis_.push_back(m);
    t.span_ = Subspace::span(n * s, kept);
  }
  return t;
}

Tableau Tableau::zero(std::size_t n, std::size_t s) { return make(n, s, {}); }

Tableau Tableau::full(std::size_t n, std::size_t s) {
  std::vector<Matrix> gens;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      Matrix m(s, n);
      m(a, i) = 1;
      gens.push_back(std::move(m));
    }
  return make(n, s, gens);
}

Matrix Tableau::element(const Vector& coords) const {
  require(coords.size() == basis_.size(), ErrorCode::DimensionMismatch,
          "tableau element: expected " + std::to_string(basis_.size()) + " coordinates");
  Matrix m(s_, n_);
  for (std::size_t e = 0; e < basis_.size(); ++e) {
    if (sgn(coords[e]) != 0) m = m + coords[e] * basis_[e];
  }
  return m;
}

bool Tableau::contains(const Matrix& q) const {
  require(q.rows() == s_ && q.cols() == n_, ErrorCode::DimensionMismatch,
          "tableau membership: shape mismatch");
  return span_.contains(flatten(q));
}

const Subspace& Tableau::prolongation(int h) const {
  require(h >= -1, ErrorCode::InvalidArgument, "prolongation order must be >= -1");
  if (h == -1) return cache_->target;
  std::lock_guard lock(cache_->mutex);
  auto& levels = cache_->levels;
  if (levels.empty()) levels.push_back(span_);
  while (levels.size() <= static_cast<std::size_t>(h)) {
    ProlongedTableau cur{n_, s_, static_cast<int>(levels.size()) - 1, levels.back()};
    levels.push_back(prolong(cur).space);
  }
  return levels[static_cast<std::size_t>(h)];
}

// ---------------------------------------------------------------------------

namespace {

// Rows: (b, j) for the j-th vector of a_sub; columns: tableau parameters.
Matrix restriction_matrix(const Tableau& a, const std::vector<Vector>& directions) {
  Matrix m(a.s() * directions.size(), a.dim());
  for (std::size_t e = 0; e < a.dim(); ++e) {
    for (std::size_t j = 0; j < directions.size(); ++j) {
      const Vector img = a.basis()[e].apply(directions[j]);
      for (std::size_t r = 0; r < a.s(); ++r) m(j * a.s() + r, e) = img[r];
    }
  }
  return m;
}

}  // namespace

Subspace kernel_restricted(const Tableau& a, const Subspace& a_sub) {
  require(a_sub.ambient_dim() == a.n(), ErrorCode::DimensionMismatch,
          "kernel_restricted: subspace of a has ambient dimension " +
              std::to_string(a_sub.ambient_dim()) + ", expected " + std::to_string(a.n()));
  const auto ker = kernel_basis(restriction_matrix(a, a_sub.basis()));
  std::vector<Vector> vectors;
  for (const auto& c : ker.basis()) vectors.push_back(flatten(a.element(c)));
  return Subspace::span(a.n() * a.s(), vectors);
}

std::size_t restricted_codim(const Tableau& a, const Matrix& flag, std::size_t j) {
  std::vector<Vector> directions;
  for (std::size_t c = 0; c < j; ++c) directions.push_back(flag.column(c));
  return rank(restriction_matrix(a, directions));
}

std::size_t Characters::total() const { return std::accumulate(s.begin(), s.end(), std::size_t{0}); }

std::size_t Characters::cartan_bound() const {
  std::size_t b = 0;
  for (std::size_t j = 0; j < s.size(); ++j) b += (j + 1) * s[j];
  return b;
}

std::vector<std::size_t> Characters::cumulative() const {
  std::vector<std::size_t> c(s.size());
  std::partial_sum(s.begin(), s.end(), c.begin());
  return c;
}

Characters characters(const Tableau& a, const GenericityOptions& opts) {
  require(opts.trials >= 1, ErrorCode::InvalidArgument, "characters: trials must be >= 1");
  const std::size_t n = a.n();
  std::vector<std::size_t> pooled(n + 1, 0);
  SeededRng rng(opts.seed);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    const Matrix flag = rng.invertible(n, opts.entry_bound);
    for (std::size_t j = 1; j <= n; ++j)
      pooled[j] = std::max(pooled[j], restricted_codim(a, flag, j));
  }
  Characters ch;
  ch.trials_used = opts.trials;
  ch.seed = opts.seed;
  for (std::size_t j = 1; j <= n; ++j) {
    if (pooled[j] < pooled[j - 1]) {
      fail(ErrorCode::GenericityUnstable, "characters: restricted codimensions decrease");
    }
    ch.s.push_back(pooled[j] - pooled[j - 1]);
  }
  bool ok = pooled[n] == a.dim() && (n == 0 || ch.s[0] <= a.s());
  for (std::size_t j = 1; j < n; ++j) ok = ok && ch.s[j] <= ch.s[j - 1];
  if (!ok) {
    fail(ErrorCode::GenericityUnstable,
         "characters: pooled flag data violate s_1 >= ... >= s_n (seed " +
             std::to_string(opts.seed) + ", trials " + std::to_string(opts.trials) + ")");
  }
  for (std::size_t j = n; j-- > 0;) {
    if (ch.s[j] != 0) {
      ch.cartan_integer = j + 1;
      ch.principal = ch.s[j];
      break;
    }
  }
  return ch;
}

// ---------------------------------------------------------------------------

ProlongedTableau order_zero(const Tableau& a) { return {a.n(), a.s(), 0, a.span()}; }

Subspace prolong_by_kernel(const ProlongedTableau& cur) {
  const int q = cur.h + 1;  // current space lives in b (x) S^q
  const auto cochains = tensor_with_ext(cur.space, cur.n, cur.s, q, 1);
  const Grading next{cur.n, cur.s, q + 1, 0};
  if (cochains.empty()) return Subspace(next.size());
  const Matrix delta = coboundary_matrix(cur.n, cur.s, q, 1);
  const Matrix restricted = delta * Matrix::from_columns(cochains, cochains.front().size());
  const auto ker = kernel_basis(restricted);
  std::vector<Vector> polys;
  for (const auto& k : ker.basis()) {
    Vector f = zero_vector(cochains.front().size());
    for (std::size_t j = 0; j < k.size(); ++j) axpy(k[j], cochains[j], f);
    polys.push_back(integrate_gradient(cur.n, cur.s, q, f));
  }
  return Subspace::span(next.size(), polys);
}

Subspace prolong_by_intersection(const ProlongedTableau& cur) {
  const int q = cur.h + 1;
  const Grading next{cur.n, cur.s, q + 1, 0};
  const Grading grad{cur.n, cur.s, q, 1};
  const Matrix g = coboundary_matrix(cur.n, cur.s, q + 1, 0);  // b S^{q+1} -> b S^q (x) a*
  const Flattening gf(grad);
  const auto ann = annihilator(cur.space);
  // Row (lambda, i): lambda . (d P / d x_i) = 0.
  Matrix m(ann.dim() * cur.n, next.size());
  const std::size_t monos = gf.monomials().size();
  for (std::size_t l = 0; l < ann.dim(); ++l) {
    const Vector& lambda = ann.basis()[l];
    for (std::size_t i = 0; i < cur.n; ++i) {
      const std::size_t row = l * cur.n + i;
      for (std::size_t f = 0; f < lambda.size(); ++f) {
        if (sgn(lambda[f]) == 0) continue;
        const std::size_t grow = gf.index(f / monos, f % monos, i);
        for (std::size_t c = 0; c < next.size(); ++c) {
          if (sgn(g(grow, c)) != 0) m(row, c) += lambda[f] * g(grow, c);
        }
      }
    }
  }
  return kernel_basis(m);
}

ProlongedTableau prolong(const ProlongedTableau& cur) {
  Subspace by_kernel = prolong_by_kernel(cur);
  const Subspace by_intersection = prolong_by_intersection(cur);
  if (!(by_kernel == by_intersection)) {
    fail(ErrorCode::Internal, "prolongation constructions disagree at order " +
                                  std::to_string(cur.h + 1) + " (" +
                                  std::to_string(by_kernel.dim()) + " vs " +
                                  std::to_string(by_intersection.dim()) + ")");
  }
  return {cur.n, cur.s, cur.h + 1, std::move(by_kernel)};
}

ProlongedTableau prolong(const Tableau& a) { return prolong(order_zero(a)); }

Tableau prolonged_as_tableau(const Tableau& a, int h) {
  require(h >= 0, ErrorCode::InvalidArgument, "prolonged_as_tableau: h must be >= 0");
  if (h == 0) return a;
  const Subspace& space = a.prolongation(h);
  const Subspace& target = a.prolongation(h - 1);
  std::vector<Matrix> gens;
  for (const auto& poly : space.basis()) {
    const Vector grad = gradient(a.n(), a.s(), h + 1, poly);
    const Flattening gf(Grading{a.n(), a.s(), h, 1});
    Matrix m(target.dim(), a.n());
    for (std::size_t i = 0; i < a.n(); ++i) {
      Vector part = zero_vector(target.ambient_dim());
      for (std::size_t f = 0; f < part.size(); ++f) {
        part[f] = grad[gf.index(f / gf.monomials().size(), f % gf.monomials().size(), i)];
      }
      const auto coords = target.coordinates(part);
      if (!coords) fail(ErrorCode::Internal, "derivative of a prolongation left A^{(h-1)}");
      for (std::size_t r = 0; r < target.dim(); ++r) m(r, i) = (*coords)[r];
    }
    gens.push_back(std::move(m));
  }
  return Tableau::make(a.n(), target.dim(), gens);
}

CartanTest cartan_test(const Tableau& a, const GenericityOptions& opts) {
  CartanTest t;
  t.characters = characters(a, opts);
  t.bound = t.characters.cartan_bound();
  t.dim_prolong = a.prolongation(1).dim();
  if (t.dim_prolong > t.bound) {
    fail(ErrorCode::Internal, "Cartan inequality violated: dim A^(1) = " +
                                  std::to_string(t.dim_prolong) + " > " +
                                  std::to_string(t.bound));
  }
  t.involutive = t.dim_prolong == t.bound;
  return t;
}

std::optional<int> involutivity_order(const Tableau& a, int max_h, const GenericityOptions& opts) {
  require(max_h >= 0, ErrorCode::InvalidArgument, "involutivity_order: max_h must be >= 0");
  for (int h = 0; h <= max_h; ++h) {
    if (cartan_test(prolonged_as_tableau(a, h), opts).involutive) return h;
  }
  return std::nullopt;
}

ProlongedCharactersCheck prolonged_characters_formula_check(const Tableau& a,
                                                            const GenericityOptions& opts) {
  const auto base = cartan_test(a, opts);
  if (!base.involutive) fail(ErrorCode::NotInvolutive, "tableau is not involutive");
  ProlongedCharactersCheck r;
  r.base = base.characters;
  const Tableau first = prolonged_as_tableau(a, 1);
  const auto next = cartan_test(first, opts);
  r.prolonged = next.characters;
  r.prolongation_involutive = next.involutive;
  const std::size_t n = a.n();
  r.expected.assign(n, 0);
  for (std::size_t j = n; j-- > 0;) r.expected[j] = r.base.s[j] + (j + 1 < n ? r.expected[j + 1] : 0);
  r.cartan_integer_preserved = r.prolonged.cartan_integer == r.base.cartan_integer;
  r.holds = r.prolonged.s == r.expected && r.cartan_integer_preserved && r.prolongation_involutive;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Local monomial enumeration so the oracle shares no indexing with the
// Spencer complex code.
void oracle_monomials(std::size_t n, unsigned degree, std::vector<unsigned>& cur,
                      std::map<std::vector<unsigned>, std::size_t>& out) {
  if (cur.size() == n) {
    unsigned total = 0;
    for (auto e : cur) total += e;
    if (total == degree) out.emplace(cur, out.size());
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    cur.push_back(e);
    oracle_monomials(n, degree, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::size_t polynomial_solutions_dim(const Tableau& a, int q) {
  require(q >= 0, ErrorCode::InvalidArgument, "polynomial_solutions_dim: q must be >= 0");
  const std::size_t n = a.n();
  const std::size_t s = a.s();
  std::map<std::vector<unsigned>, std::size_t> top, low;
  std::vector<unsigned> cur;
  oracle_monomials(n, static_cast<unsigned>(q + 1), cur, top);
  oracle_monomials(n, static_cast<unsigned>(q), cur, low);

  // Symbol: B^{lambda i}_a with sum_{a,i} B^{lambda i}_a Q^a_i = 0 for Q in A.
  const Subspace symbol = annihilator(a.span());
  const std::size_t unknowns = s * top.size();
  if (unknowns == 0) return 0;
  Matrix eqs(symbol.dim() * low.size(), unknowns);
  for (std::size_t l = 0; l < symbol.dim(); ++l) {
    const Vector& b = symbol.basis()[l];
    for (const auto& [mu, row_mu] : low) {
      const std::size_t row = l * low.size() + row_mu;
      // coefficient of x^mu in sum B^{li}_a d y^a / d x^i
      for (std::size_t comp = 0; comp < s; ++comp) {
        for (std::size_t i = 0; i < n; ++i) {
          const Rational& coeff = b[comp * n + i];
          if (sgn(coeff) == 0) continue;
          auto raised = mu;
          ++raised[i];
          const std::size_t col = comp * top.size() + top.at(raised);
          eqs(row, col) += coeff * raised[i];
        }
      }
    }
  }
  return unknowns - rank(eqs);
}

}  // namespace tbx
