#include "pds/pds.hpp"

#include "error.hpp"

namespace tbx {

void TwoForm::add(std::size_t u, std::size_t v, const Polynomial& c) {
  if (u == v || c.is_zero()) return;
  if (u < v) {
    auto [it, inserted] = terms.try_emplace({u, v}, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  } else {
    add(v, u, Rational(-1) * c);
  }
}

Polynomial TwoForm::coefficient(std::size_t u, std::size_t v) const {
  auto it = terms.find({u, v});
  return it == terms.end() ? Polynomial() : it->second;
}

namespace {

using OneForm = std::vector<Polynomial>;

TwoForm wedge(const OneForm& a, const OneForm& b) {
  TwoForm out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x].is_zero()) continue;
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (x == y || b[y].is_zero()) continue;
      out.add(x, y, a[x] * b[y]);
    }
  }
  return out;
}

void accumulate(TwoForm& into, const TwoForm& f, const Rational& c) {
  for (const auto& [key, poly] : f.terms) into.add(key.first, key.second, c * poly);
}

}  // namespace

PfaffianSystemSpec build_pds(const LieTableau& lt, const PdsOptions& options) {
  PfaffianSystemSpec ps;
  ps.source = lt;
  ps.options = options;
  ps.certification = certify(lt, options.genericity, options.q_max);
  if (!ps.certification->ok && !options.force) {
    fail(ErrorCode::NotCertified,
         "lie tableau is not certified (condition 1: " +
             std::string(ps.certification->condition1 ? "ok" : "fails") +
             ", condition 2: " + (ps.certification->condition2.holds ? "ok" : "fails") +
             "); pass force to build anyway");
  }
  ps.basis = adapted_basis(lt, options.genericity, options.keep_a_basis);
  const std::size_t k = lt.split.dim_a();
  const std::size_t s = lt.split.dim_b();
  ps.k = k;
  ps.h = ps.basis.b_vecs.size();
  ps.s_prime = ps.basis.c_vecs.size();
  ps.m = lt.tableau.dim();

  const LieAlgebra& g = lt.split.algebra();
  const std::size_t d = g.dim();
  const Matrix& w = ps.basis.change_of_basis;
  const Matrix winv = inverse(w);
  std::vector<StructureEntry> entries;
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = u + 1; v < d; ++v) {
      const Vector c = winv.apply(g.bracket(w.column(u), w.column(v)));
      for (std::size_t r = 0; r < d; ++r)
        if (sgn(c[r]) != 0) entries.push_back({u, v, r, c[r]});
    }
  ps.adapted = LieAlgebra::make(d, entries);

  const Matrix binv = inverse(ps.basis.b_change);
  for (const auto& q : lt.tableau.basis()) ps.eta_coeffs.push_back(binv * q * ps.basis.a_change);
  ps.offset = binv * lt.offset * ps.basis.a_change;
  ps.tableau = Tableau::make(k, s, ps.eta_coeffs);

  // P^j_i(p) = offset^j_i + p^e Q^j_{e i}
  const std::size_t mvars = ps.m;
  std::vector<std::vector<Polynomial>> P(s, std::vector<Polynomial>(k, Polynomial(mvars)));
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      P[j][i].add_term({}, ps.offset(j, i));
      for (std::size_t e = 0; e < mvars; ++e) P[j][i].add_term({e}, ps.eta_coeffs[e](j, i));
    }

  const std::size_t n_coframe = ps.coframe_size();
  // Left-invariant coframe of G pulled back to Y: alpha^i, and beta^j = zeta^j + P^j_i alpha^i.
  std::vector<OneForm> theta(d, OneForm(n_coframe, Polynomial(mvars)));
  for (std::size_t i = 0; i < k; ++i) theta[i][i] = Polynomial::constant(mvars, 1);
  for (std::size_t j = 0; j < s; ++j) {
    theta[k + j][ps.zeta_index(j)] = Polynomial::constant(mvars, 1);
    for (std::size_t i = 0; i < k; ++i) theta[k + j][i] = P[j][i];
  }
  // d theta^w = - sum_{u<v} c^w_{uv} theta^u ^ theta^v
  std::vector<TwoForm> dtheta(d);
  for (const auto& e : ps.adapted.entries()) {
    accumulate(dtheta[e.k], wedge(theta[e.i], theta[e.j]), -e.value);
  }

  ps.structure.assign(s, TwoForm{});
  for (std::size_t j = 0; j < s; ++j) {
    TwoForm& out = ps.structure[j];
    accumulate(out, dtheta[k + j], 1);
    for (std::size_t i = 0; i < k; ++i) {
      // - dP^j_i ^ alpha^i
      OneForm dp(n_coframe, Polynomial(mvars));
      for (std::size_t e = 0; e < mvars; ++e) dp[ps.dp_index(e)] = P[j][i].derivative(e);
      OneForm alpha(n_coframe, Polynomial(mvars));
      alpha[i] = Polynomial::constant(mvars, 1);
      accumulate(out, wedge(dp, alpha), -1);
      // - P^j_i d alpha^i
      for (const auto& [key, poly] : dtheta[i].terms) {
        out.add(key.first, key.second, Rational(-1) * (P[j][i] * poly));
      }
    }
  }
  return ps;
}

VectorPolynomial structure_torsion(const PfaffianSystemSpec& ps) {
  const std::size_t s = ps.generator_count();
  const ExtBasis pairs(ps.k, 2);
  VectorPolynomial out;
  out.vars = ps.m;
  out.width = s * pairs.size();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t x = 0; x < pairs.size(); ++x) {
      const Polynomial c = ps.structure[a].coefficient(pairs[x][0], pairs[x][1]);
      for (const auto& [mono, value] : c.terms()) {
        Vector v = zero_vector(out.width);
        v[a * pairs.size() + x] = value;
        out.add(mono, v);
      }
    }
  return out;
}

std::vector<std::vector<std::vector<Polynomial>>> pi_coefficients(const PfaffianSystemSpec& ps) {
  const std::size_t s = ps.generator_count();
  std::vector<std::vector<std::vector<Polynomial>>> out(
      ps.m, std::vector<std::vector<Polynomial>>(s, std::vector<Polynomial>(ps.k)));
  for (std::size_t e = 0; e < ps.m; ++e)
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t i = 0; i < ps.k; ++i) {
        // dp^e ^ alpha^i = - alpha^i ^ dp^e
        out[e][a][i] = Rational(-1) * ps.structure[a].coefficient(i, ps.dp_index(e));
      }
  return out;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> nonlinear_terms(
    const PfaffianSystemSpec& ps) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < ps.generator_count(); ++a)
    for (std::size_t e = 0; e < ps.m; ++e)
      for (std::size_t f = e + 1; f < ps.m; ++f)
        if (!ps.structure[a].coefficient(ps.dp_index(e), ps.dp_index(f)).is_zero())
          out.emplace_back(a, e, f);
  return out;
}

Tableau pds_tableau_at(const PfaffianSystemSpec& ps, const Vector& p) {
  const auto pi = pi_coefficients(ps);
  std::vector<Matrix> gens;
  for (std::size_t e = 0; e < ps.m; ++e) {
    Matrix q(ps.generator_count(), ps.k);
    for (std::size_t a = 0; a < ps.generator_count(); ++a)
      for (std::size_t i = 0; i < ps.k; ++i) q(a, i) = pi[e][a][i].evaluate(p);
    gens.push_back(std::move(q));
  }
  return Tableau::make(ps.k, ps.generator_count(), gens);
}

TorsionVerdict torsion_class_polynomial(const PfaffianSystemSpec& ps) {
  TorsionVerdict v;
  const Tableau read_back = pds_tableau_at(ps, zero_vector(ps.m));
  const Subspace image = delta11_image(read_back);
  for (const auto& [mono, coeff] : structure_torsion(ps).terms) {
    TorsionClass cls = torsion_class(coeff, image);
    if (!cls.is_zero) {
      v.vanishes_identically = false;
      v.failing_monomials.push_back({mono, std::move(cls)});
    }
  }
  return v;
}

std::optional<AffineSolution> integral_elements_at(const PfaffianSystemSpec& ps,
                                                   const Vector& p) {
  require(p.size() == ps.m, ErrorCode::DimensionMismatch,
          "integral elements: expected " + std::to_string(ps.m) + " fiber coordinates");
  const std::size_t k = ps.k;
  const std::size_t s = ps.generator_count();
  const ExtBasis pairs(k, 2);
  const auto pi = pi_coefficients(ps);
  const Vector c = structure_torsion(ps).evaluate(p);
  Matrix eqs(s * pairs.size(), ps.m * k);
  Vector rhs(s * pairs.size());
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t x = 0; x < pairs.size(); ++x) {
      const std::size_t i = pairs[x][0];
      const std::size_t j = pairs[x][1];
      const std::size_t row = a * pairs.size() + x;
      for (std::size_t e = 0; e < ps.m; ++e) {
        eqs(row, e * k + i) += pi[e][a][j].evaluate(p);
        eqs(row, e * k + j) -= pi[e][a][i].evaluate(p);
      }
      rhs[row] = -c[row];
    }
  return solve_affine(eqs, rhs);
}

Theorem41Report verify_theorem_4_1(const PfaffianSystemSpec& ps, std::size_t sample_points,
                                   std::uint64_t seed) {
  Theorem41Report r;
  r.sample_points = sample_points;
  r.s0 = ps.generator_count();
  r.linear = nonlinear_terms(ps).empty();
  r.torsion = torsion_class_polynomial(ps);
  r.torsion_vanishes = r.torsion.vanishes_identically;

  bool constant = true;
  for (const auto& per_e : pi_coefficients(ps))
    for (const auto& row : per_e)
      for (const auto& c : row) constant = constant && c.degree() <= 0;
  r.readback_equal = constant;
  r.prolongation_dim = ps.tableau.prolongation(1).dim();
  r.integral_dims_match = true;
  SeededRng rng(seed);
  for (std::size_t t = 0; t < sample_points; ++t) {
    Vector p = rng.vector(ps.m, 10);
    for (auto& x : p) x /= Rational(rng.uniform(1, 5));
    if (!(pds_tableau_at(ps, p).span() == ps.tableau.span())) r.readback_equal = false;
    if (r.torsion_vanishes) {
      const auto sol = integral_elements_at(ps, p);
      if (!sol || sol->homogeneous.dim() != r.prolongation_dim) r.integral_dims_match = false;
    }
  }
  if (!r.torsion_vanishes) r.integral_dims_match = false;

  const auto& gen = ps.options.genericity;
  r.tableau_characters = characters(ps.source.tableau, gen);
  r.pds_characters = characters(pds_tableau_at(ps, zero_vector(ps.m)), gen);
  r.characters_equal = r.tableau_characters.s == r.pds_characters.s;
  return r;
}

ProlongationTower prolongation_tower(const LieTableau& lt, int h_max,
                                     const GenericityOptions& opts) {
  require(h_max >= 0, ErrorCode::InvalidArgument, "prolongation tower: h_max must be >= 0");
  ProlongationTower tower;
  tower.lie_dim = lt.split.algebra().dim();
  std::size_t config = tower.lie_dim;
  for (int h = 0; h <= h_max; ++h) {
    TowerLevel level;
    level.h = h;
    level.space_dim = lt.tableau.prolongation(h).dim();
    config += level.space_dim;
    level.configuration_dim = config;
    const auto test = cartan_test(prolonged_as_tableau(lt.tableau, h), opts);
    level.involutive = test.involutive;
    if (test.involutive) {
      level.characters = test.characters;
      if (!tower.first_involutive) tower.first_involutive = h;
    }
    tower.levels.push_back(std::move(level));
  }
  return tower;
}

GG0System gg0_coefficients(const LieTableau& lt, const GenericityOptions& opts) {
  require(lt.cartan.has_value(), ErrorCode::NotCartan,
          "G/G0 export needs a Cartan tableau (built from a Cartan decomposition)");
  PdsOptions po;
  po.genericity = opts;
  po.keep_a_basis = true;
  const auto ps = build_pds(lt, po);
  GG0System sys;
  sys.k = ps.k;
  sys.unknowns = ps.m;
  sys.equations = ps.generator_count();
  for (std::size_t a = 0; a < sys.equations; ++a) {
    Matrix b(ps.m, ps.k);
    for (std::size_t alpha = 0; alpha < ps.m; ++alpha)
      for (std::size_t i = 0; i < ps.k; ++i) b(alpha, i) = ps.eta_coeffs[alpha](a, i);
    sys.b.push_back(std::move(b));
  }
  const auto torsion = structure_torsion(ps);
  sys.phi.vars = torsion.vars;
  sys.phi.width = torsion.width;
  for (const auto& [mono, coeff] : torsion.terms) sys.phi.add(mono, scale(-1, coeff));
  sys.b_change = ps.basis.b_change;
  sys.a_basis = lt.cartan->a_basis;
  sys.m_basis = lt.cartan->m_basis;
  sys.b_prime_basis = lt.split.b_basis();
  return sys;
}

}  // namespace tbx
