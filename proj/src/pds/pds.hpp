#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie_tableau/lie_tableau.hpp"
#include "pds/polynomial.hpp"

namespace tbx {

/// 2-form on Y with polynomial coefficients in p, stored on pairs u < v of
/// the coframe (alpha^0..alpha^{k-1}, zeta^0..zeta^{s-1}, dp^0..dp^{m-1}).
struct TwoForm {
  std::map<std::pair<std::size_t, std::size_t>, Polynomial> terms;

  void add(std::size_t u, std::size_t v, const Polynomial& c);  // c * w^u ^ w^v
  Polynomial coefficient(std::size_t u, std::size_t v) const;    // for u < v
};

struct PdsOptions {
  GenericityOptions genericity;
  /// Keep the a-basis of the split instead of drawing a generic flag.
  bool keep_a_basis = false;
  /// Build even when certification fails.
  bool force = false;
  int q_max = 4;
};

/// The linear Pfaffian system on Y = G x A generated by
/// zeta^j = beta^j - P^j_i(p) alpha^i, P = offset + p^e Q_e, written in an
/// adapted basis. Rows j < h are the eta-forms, the rest are the gamma-forms.
struct PfaffianSystemSpec {
  LieTableau source;
  AdaptedBasis basis;
  PdsOptions options;
  std::optional<CertifyReport> certification;

  std::size_t k = 0;        // dim a, independence rank
  std::size_t h = 0;        // number of eta-forms = dim Im A
  std::size_t s_prime = 0;  // number of gamma-forms
  std::size_t m = 0;        // dim A, fiber coordinates p
  LieAlgebra adapted;       // structure constants in the adapted basis
  std::vector<Matrix> eta_coeffs;  // Q_e in adapted coordinates, s x k
  Matrix offset;                   // adapted offset, s x k
  Tableau tableau;                 // span of eta_coeffs in Hom(R^k, R^s)

  /// d zeta^j expanded over the Y-coframe, j = 0..s-1.
  std::vector<TwoForm> structure;

  std::size_t generator_count() const { return h + s_prime; }
  std::size_t coframe_size() const { return k + h + s_prime + m; }
  std::size_t zeta_index(std::size_t j) const { return k + j; }
  std::size_t dp_index(std::size_t e) const { return k + h + s_prime + e; }
};

/// Throws NotCertified unless the source certifies or options.force is set.
PfaffianSystemSpec build_pds(const LieTableau& lt, const PdsOptions& options = {});

/// Coefficients of d zeta^a modulo zeta: the torsion c^a_{ij}(p) on
/// alpha^i ^ alpha^j, as a vector polynomial in the b (x) L^2 flattening.
VectorPolynomial structure_torsion(const PfaffianSystemSpec& ps);

/// A^a_{e i} with d zeta^a = A^a_{e i} dp^e ^ alpha^i + ..., one polynomial
/// matrix (s x k) per e.
std::vector<std::vector<std::vector<Polynomial>>> pi_coefficients(const PfaffianSystemSpec& ps);

/// dp ^ dp coefficients that are not zero, as (generator, e, f) triples.
std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> nonlinear_terms(
    const PfaffianSystemSpec& ps);

/// The tableau of the system read off at p.
Tableau pds_tableau_at(const PfaffianSystemSpec& ps, const Vector& p);

struct TorsionVerdict {
  bool vanishes_identically = true;
  std::vector<Condition2Witness> failing_monomials;
};

TorsionVerdict torsion_class_polynomial(const PfaffianSystemSpec& ps);

/// Solutions p^e_i (flattened e * k + i) of
/// A^a_{e j} p^e_i - A^a_{e i} p^e_j + c^a_{ij}(p) = 0.
std::optional<AffineSolution> integral_elements_at(const PfaffianSystemSpec& ps, const Vector& p);

struct Theorem41Report {
  bool linear = false;
  bool torsion_vanishes = false;
  bool readback_equal = false;
  bool characters_equal = false;
  std::size_t sample_points = 0;
  std::size_t s0 = 0;
  Characters tableau_characters;
  Characters pds_characters;
  TorsionVerdict torsion;
  bool integral_dims_match = false;  // dim of integral elements = dim A^(1)
  std::size_t prolongation_dim = 0;

  bool all() const { return linear && torsion_vanishes && readback_equal && characters_equal; }
};

Theorem41Report verify_theorem_4_1(const PfaffianSystemSpec& ps, std::size_t sample_points = 20,
                                   std::uint64_t seed = 1);

struct TowerLevel {
  int h = 0;
  std::size_t space_dim = 0;          // dim A^(h)
  std::size_t configuration_dim = 0;  // dim Y^(h)
  bool involutive = false;
  std::optional<Characters> characters;
};

struct ProlongationTower {
  std::size_t lie_dim = 0;
  std::vector<TowerLevel> levels;
  std::optional<int> first_involutive;
};

ProlongationTower prolongation_tower(const LieTableau& lt, int h_max,
                                     const GenericityOptions& opts = {});

/// B^a_{alpha i} dF^alpha/dx^j - B^a_{alpha j} dF^alpha/dx^i = Phi^a_{ij}(F)
/// in the adapted b-basis of the Cartan tableau.
struct GG0System {
  std::size_t k = 0;          // coordinates x^i
  std::size_t unknowns = 0;   // F^alpha
  std::size_t equations = 0;  // components a
  std::vector<Matrix> b;      // b[a](alpha, i)
  VectorPolynomial phi;       // width equations * C(k,2), flat a * C(k,2) + pair
  Matrix b_change;            // adapted b-basis in b' coordinates (columns)
  std::vector<Vector> a_basis;
  std::vector<Vector> m_basis;
  std::vector<Vector> b_prime_basis;
};

/// Throws NotCartan unless lt came from cartan_tableau.
GG0System gg0_coefficients(const LieTableau& lt, const GenericityOptions& opts = {});

}  // namespace tbx
