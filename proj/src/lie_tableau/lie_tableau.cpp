#include "lie_tableau/lie_tableau.hpp"

#include <algorithm>
#include <array>

#include "error.hpp"

namespace tbx {

SplitLieAlgebra SplitLieAlgebra::make(const LieAlgebra& g, const std::vector<Vector>& a_basis,
                                      const std::vector<Vector>& b_basis) {
  const std::size_t d = g.dim();
  for (const auto& v : a_basis)
    require(v.size() == d, ErrorCode::DimensionMismatch, "split: a-basis vector has wrong length");
  for (const auto& v : b_basis)
    require(v.size() == d, ErrorCode::DimensionMismatch, "split: b-basis vector has wrong length");
  require(a_basis.size() + b_basis.size() == d, ErrorCode::NotComplementary,
          "split: dim a + dim b = " + std::to_string(a_basis.size() + b_basis.size()) +
              " but dim g = " + std::to_string(d));
  std::vector<Vector> all = a_basis;
  all.insert(all.end(), b_basis.begin(), b_basis.end());
  SplitLieAlgebra s;
  s.g_ = g;
  s.a_basis_ = a_basis;
  s.b_basis_ = b_basis;
  s.basis_ = Matrix::from_columns(all, d);
  require(rank(s.basis_) == d, ErrorCode::NotComplementary,
          "split: a and b bases are not complementary in g");
  s.inverse_ = inverse(s.basis_);
  Matrix ea(d, d), eb(d, d);
  for (std::size_t i = 0; i < d; ++i) (i < a_basis.size() ? ea : eb)(i, i) = 1;
  s.proj_a_ = s.basis_ * ea * s.inverse_;
  s.proj_b_ = s.basis_ * eb * s.inverse_;
  return s;
}

Vector SplitLieAlgebra::coordinates(const Vector& x) const { return inverse_.apply(x); }

Vector SplitLieAlgebra::a_part(const Vector& x) const {
  const Vector c = coordinates(x);
  return Vector(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(dim_a()));
}

Vector SplitLieAlgebra::b_part(const Vector& x) const {
  const Vector c = coordinates(x);
  return Vector(c.begin() + static_cast<std::ptrdiff_t>(dim_a()), c.end());
}

Vector SplitLieAlgebra::from_a(const Vector& coords) const {
  require(coords.size() == dim_a(), ErrorCode::DimensionMismatch, "from_a: wrong length");
  Vector x = zero_vector(g_.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(coords[i], a_basis_[i], x);
  return x;
}

Vector SplitLieAlgebra::from_b(const Vector& coords) const {
  require(coords.size() == dim_b(), ErrorCode::DimensionMismatch, "from_b: wrong length");
  Vector x = zero_vector(g_.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(coords[i], b_basis_[i], x);
  return x;
}

const char* to_string(CertifyMode mode) {
  return mode == CertifyMode::Involutive ? "involutive" : "2acyclic";
}

CertifyMode parse_certify_mode(const std::string& text) {
  if (text == "involutive") return CertifyMode::Involutive;
  if (text == "2acyclic" || text == "two_acyclic") return CertifyMode::TwoAcyclic;
  fail(ErrorCode::InvalidArgument,
       "unknown mode \"" + text + "\" (expected involutive or 2acyclic)");
}

LieTableau LieTableau::make(SplitLieAlgebra split, Tableau tableau, CertifyMode mode,
                            std::optional<Matrix> offset) {
  require(tableau.n() == split.dim_a() && tableau.s() == split.dim_b(),
          ErrorCode::DimensionMismatch,
          "lie tableau: tableau lives in Hom(R^" + std::to_string(tableau.n()) + ", R^" +
              std::to_string(tableau.s()) + ") but the split has dim a = " +
              std::to_string(split.dim_a()) + ", dim b = " + std::to_string(split.dim_b()));
  Matrix q0 = offset.value_or(Matrix(split.dim_b(), split.dim_a()));
  require(q0.rows() == split.dim_b() && q0.cols() == split.dim_a(), ErrorCode::DimensionMismatch,
          "lie tableau: offset must be dim b x dim a");
  return LieTableau{std::move(split), std::move(tableau), mode, std::move(q0), std::nullopt};
}

Matrix LieTableau::element(const Vector& p) const { return offset + tableau.element(p); }

// ---------------------------------------------------------------------------

Vector VectorPolynomial::evaluate(const Vector& p) const {
  require(p.size() == vars, ErrorCode::DimensionMismatch,
          "polynomial evaluation: expected " + std::to_string(vars) + " parameters");
  Vector out = zero_vector(width);
  for (const auto& [mono, coeff] : terms) {
    Rational w = 1;
    for (auto e : mono) w *= p[e];
    if (sgn(w) != 0) axpy(w, coeff, out);
  }
  return out;
}

int VectorPolynomial::degree() const {
  int d = -1;
  for (const auto& [mono, coeff] : terms) d = std::max(d, static_cast<int>(mono.size()));
  return d;
}

bool VectorPolynomial::is_zero() const { return terms.empty(); }

Vector VectorPolynomial::coefficient(const Monomial& mono) const {
  auto it = terms.find(mono);
  return it == terms.end() ? zero_vector(width) : it->second;
}

void VectorPolynomial::add(const Monomial& mono, const Vector& v) {
  require(v.size() == width, ErrorCode::DimensionMismatch, "polynomial term has wrong width");
  Monomial key = mono;
  std::sort(key.begin(), key.end());
  auto it = terms.find(key);
  if (it == terms.end()) {
    if (!tbx::is_zero(v)) terms.emplace(key, v);
    return;
  }
  axpy(1, v, it->second);
  if (tbx::is_zero(it->second)) terms.erase(it);
}

std::string monomial_to_string(const VectorPolynomial::Monomial& mono) {
  if (mono.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < mono.size()) {
    std::size_t j = i;
    while (j < mono.size() && mono[j] == mono[i]) ++j;
    if (!out.empty()) out += "*";
    out += "p" + std::to_string(mono[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------

SpencerCochain tau_eval(const LieTableau& lt, const Vector& p) {
  const auto& split = lt.split;
  const std::size_t n = split.dim_a();
  const std::size_t s = split.dim_b();
  const Matrix q = lt.element(p);
  const Grading grading{n, s, 0, 2};
  SpencerCochain out = SpencerCochain::zero(grading);
  if (n < 2) return out;
  const Flattening flat(grading);
  std::vector<Vector> lifted;
  for (std::size_t i = 0; i < n; ++i) {
    lifted.push_back(add(split.a_basis()[i], split.from_b(q.column(i))));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector br = split.algebra().bracket(lifted[i], lifted[j]);
      const Vector c = split.coordinates(br);
      const Vector xa(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
      Vector value(c.begin() + static_cast<std::ptrdiff_t>(n), c.end());
      value = sub(value, q.apply(xa));
      const std::size_t ext = flat.exts().index_of({i, j});
      for (std::size_t r = 0; r < s; ++r) out.coords[flat.index(r, 0, ext)] = value[r];
    }
  return out;
}

VectorPolynomial tau_polynomial(const LieTableau& lt, std::uint64_t seed, std::size_t checks) {
  const std::size_t m = lt.tableau.dim();
  VectorPolynomial poly;
  poly.vars = m;
  poly.width = Grading{lt.split.dim_a(), lt.split.dim_b(), 0, 2}.size();
  auto tau = [&](const Vector& p) { return tau_eval(lt, p).coords; };
  auto point = [&](std::initializer_list<std::pair<std::size_t, long>> entries) {
    Vector p = zero_vector(m);
    for (const auto& [e, v] : entries) p[e] += v;
    return p;
  };

  const Vector c0 = tau(zero_vector(m));
  poly.add({}, c0);
  // Along one axis: tau(t e) = c0 + a t + b t^2 + c t^3.
  std::vector<std::array<Vector, 3>> axis(m);
  for (std::size_t e = 0; e < m; ++e) {
    const Vector f1 = tau(point({{e, 1}}));
    const Vector fm = tau(point({{e, -1}}));
    const Vector f2 = tau(point({{e, 2}}));
    const Vector b = sub(scale(Rational(1, 2), add(f1, fm)), c0);
    const Vector u = scale(Rational(1, 2), sub(f1, fm));
    const Vector w = sub(sub(f2, c0), scale(4, b));
    const Vector c = scale(Rational(1, 6), sub(w, scale(2, u)));
    const Vector a = sub(u, c);
    axis[e] = {a, b, c};
    poly.add({e}, a);
    poly.add({e, e}, b);
    poly.add({e, e, e}, c);
  }
  auto along = [&](std::size_t e, long t) {
    const auto& [a, b, c] = axis[e];
    Vector v = scale(t, a);
    axpy(Rational(t * t), b, v);
    axpy(Rational(t * t * t), c, v);
    return v;
  };
  // Mixed pairs: d s t + g s^2 t + h s t^2.
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = e + 1; f < m; ++f) {
      auto rest = [&](long x, long y) {
        Vector r = sub(tau(point({{e, x}, {f, y}})), c0);
        return sub(sub(r, along(e, x)), along(f, y));
      };
      const Vector r11 = rest(1, 1);
      const Vector rm1 = rest(-1, 1);
      const Vector r1m = rest(1, -1);
      const Vector g = scale(Rational(1, 2), add(r11, rm1));
      const Vector h = scale(Rational(1, 2), add(r11, r1m));
      poly.add({e, e, f}, g);
      poly.add({e, f, f}, h);
      poly.add({e, f}, sub(sub(r11, g), h));
    }
  // Square-free cubic terms.
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = e + 1; f < m; ++f)
      for (std::size_t k = f + 1; k < m; ++k) {
        const Vector p = point({{e, 1}, {f, 1}, {k, 1}});
        poly.add({e, f, k}, sub(tau(p), poly.evaluate(p)));
      }

  SeededRng rng(seed);
  for (std::size_t t = 0; t < checks; ++t) {
    Vector p = rng.vector(m, 20);
    for (auto& x : p) x /= Rational(rng.uniform(1, 7));
    if (poly.evaluate(p) != tau(p)) {
      fail(ErrorCode::Internal, "tau polynomial disagrees with direct evaluation");
    }
  }
  return poly;
}

Condition2Report check_condition2(const LieTableau& lt, std::uint64_t seed) {
  Condition2Report r;
  r.tau = tau_polynomial(lt, seed);
  const Subspace image = delta11_image(lt.tableau);
  for (const auto& [mono, coeff] : r.tau.terms) {
    TorsionClass cls = torsion_class(coeff, image);
    if (!cls.is_zero) {
      r.holds = false;
      r.witnesses.push_back({mono, std::move(cls)});
    }
  }
  return r;
}

CertifyReport certify(const LieTableau& lt, const GenericityOptions& opts, int q_max) {
  CertifyReport r;
  r.mode = lt.mode;
  r.options = opts;
  r.q_max = q_max;
  if (lt.mode == CertifyMode::Involutive) {
    r.cartan = cartan_test(lt.tableau, opts);
    r.condition1 = r.cartan->involutive;
  } else {
    r.acyclicity = is_2acyclic(lt.tableau, q_max, opts);
    r.condition1 = r.acyclicity->acyclic_in_window();
  }
  r.condition2 = check_condition2(lt, opts.seed);
  r.ok = r.condition1 && r.condition2.holds;
  return r;
}

// ---------------------------------------------------------------------------

AdaptedBasis adapted_basis(const LieTableau& lt, const GenericityOptions& opts,
                           bool keep_a_basis) {
  const Tableau& t = lt.tableau;
  const std::size_t n = t.n();
  const std::size_t s = t.s();
  AdaptedBasis ab;
  ab.generic_flag = !keep_a_basis;
  if (keep_a_basis) {
    ab.a_change = Matrix::identity(n);
  } else {
    const auto sums = characters(t, opts).cumulative();
    SeededRng rng(opts.seed);
    bool found = false;
    for (std::size_t attempt = 0; attempt < 4 * opts.trials && !found; ++attempt) {
      const Matrix flag = rng.invertible(n, opts.entry_bound);
      bool generic = true;
      for (std::size_t j = 1; j <= n && generic; ++j)
        generic = restricted_codim(t, flag, j) == sums[j - 1];
      if (generic) {
        ab.a_change = flag;
        found = true;
      }
    }
    if (!found) {
      fail(ErrorCode::GenericityUnstable,
           "adapted basis: no sampled flag reproduces the character sums");
    }
  }

  std::vector<Vector> columns;
  for (const auto& q : t.basis())
    for (std::size_t i = 0; i < n; ++i) columns.push_back(q.column(i));
  const Subspace image = Subspace::span(s, columns);
  std::vector<Vector> bc = image.basis();
  for (auto idx : image.complement_indices()) bc.push_back(unit_vector(s, idx));
  ab.b_change = Matrix::from_columns(bc, s);

  for (std::size_t c = 0; c < n; ++c) ab.a_vecs.push_back(lt.split.from_a(ab.a_change.column(c)));
  for (std::size_t c = 0; c < bc.size(); ++c) {
    (c < image.dim() ? ab.b_vecs : ab.c_vecs).push_back(lt.split.from_b(bc[c]));
  }
  std::vector<Vector> all = ab.a_vecs;
  all.insert(all.end(), ab.b_vecs.begin(), ab.b_vecs.end());
  all.insert(all.end(), ab.c_vecs.begin(), ab.c_vecs.end());
  ab.change_of_basis = Matrix::from_columns(all, lt.split.algebra().dim());
  return ab;
}

// ---------------------------------------------------------------------------

LieTableau cartan_tableau(const CartanDecomposition& cd, const Subspace& a, const Vector& a_reg) {
  if (!is_regular(cd, a, a_reg)) {
    fail(ErrorCode::InvalidArgument, "cartan_tableau: the given element of a is not regular");
  }
  const LieAlgebra& g = cd.algebra();
  const auto sp = cartan_spaces(cd, a);
  std::vector<Vector> b_side = sp.b.basis();
  b_side.insert(b_side.end(), sp.m.basis().begin(), sp.m.basis().end());
  b_side.insert(b_side.end(), sp.centralizer.basis().begin(), sp.centralizer.basis().end());
  auto split = SplitLieAlgebra::make(g, a.basis(), b_side);

  std::vector<Matrix> generators;
  for (const auto& x : sp.m.basis()) {
    Matrix q(split.dim_b(), split.dim_a());
    for (std::size_t i = 0; i < split.dim_a(); ++i) {
      const Vector y = scale(-1, g.bracket(x, a.basis()[i]));
      const Vector c = split.coordinates(y);
      for (std::size_t r = 0; r < split.dim_a(); ++r) {
        if (sgn(c[r]) != 0) fail(ErrorCode::Internal, "[m, a] has a component along a");
      }
      for (std::size_t r = 0; r < split.dim_b(); ++r) q(r, i) = c[split.dim_a() + r];
    }
    generators.push_back(std::move(q));
  }
  auto tableau = Tableau::make(split.dim_a(), split.dim_b(), generators);
  if (tableau.dim() != sp.m.dim()) {
    fail(ErrorCode::Internal, "X -> -ad_X is not injective on m");
  }
  LieTableau lt = LieTableau::make(std::move(split), std::move(tableau));
  lt.cartan = CartanData{a_reg, a.basis(), sp.m.basis(), sp.b.basis(), sp.centralizer.basis()};
  return lt;
}

CartanCheck check_cartan_tableau(const LieTableau& lt) {
  require(lt.cartan.has_value(), ErrorCode::NotCartan, "lie tableau is not a Cartan tableau");
  const CartanData& cd = *lt.cartan;
  const LieAlgebra& g = lt.split.algebra();
  CartanCheck c;
  c.dim_m = cd.m_basis.size();
  c.dim_b = cd.b_basis.size();
  c.tableau_dim = lt.tableau.dim();
  const Subspace b = Subspace::span(g.dim(), cd.b_basis);
  std::vector<Vector> images;
  bool into_b = true;
  for (const auto& x : cd.m_basis) {
    images.push_back(g.bracket(cd.regular_element, x));
    into_b = into_b && b.contains(images.back());
  }
  c.ad_bijective = into_b && c.dim_m == c.dim_b &&
                   Subspace::span(g.dim(), images).dim() == c.dim_m;
  c.embedding_injective = c.tableau_dim == c.dim_m;
  c.condition2 = check_condition2(lt).holds;
  return c;
}

}  // namespace tbx
