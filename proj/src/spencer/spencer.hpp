#pragma once

#include <optional>

#include "spencer/complex.hpp"
#include "tableau/tableau.hpp"

namespace tbx {

/// Basis of C^{q,p}(A) = A^{(q-1)} (x) L^p(a*), with A^{(-1)} = b.
std::vector<Vector> cochain_basis(const Tableau& a, int q, int p);

/// dim H^{q,p}(A) of the Spencer complex of the tableau.
std::size_t cohomology_dim(const Tableau& a, int q, int p);

/// delta^{1,1}(A (x) a*) inside b (x) L^2(a*).
Subspace delta11_image(const Tableau& a);

struct AcyclicityVerdict {
  enum class Kind { AcyclicUpTo, FailsAt, Certified };
  Kind kind = Kind::AcyclicUpTo;
  int q_max = 0;
  int failing_q = 0;               // FailsAt
  std::size_t failing_dim = 0;     // FailsAt
  int involutive_order = -1;       // Certified: first involutive A^{(h)}
  std::vector<std::size_t> h2_dims;  // dim H^{q,2}, q = 1..(last checked)

  bool acyclic_in_window() const { return kind != Kind::FailsAt; }
};

const char* to_string(AcyclicityVerdict::Kind kind);

/// Checks H^{q,2}(A) = 0 for q = 1..q_max. Certified when in addition some
/// A^{(h)} with h <= q_max passes the Cartan test, which forces every higher
/// group to vanish as well.
AcyclicityVerdict is_2acyclic(const Tableau& a, int q_max, const GenericityOptions& opts = {});

struct TorsionClass {
  bool is_zero = true;
  /// Coordinates modulo delta^{1,1}(A (x) a*) along the non-pivot unit vectors.
  Vector class_coords;
  std::vector<std::size_t> complement;  // flat indices of those unit vectors
};

/// Class of c in H^{0,2}(A) = b (x) L^2 / delta(A (x) a*).
TorsionClass torsion_class(const SpencerCochain& c, const Tableau& a);
TorsionClass torsion_class(const Vector& c, const Subspace& image);

}  // namespace tbx
