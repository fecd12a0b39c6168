#include "spencer/spencer.hpp"

#include "error.hpp"

namespace tbx {

std::vector<Vector> cochain_basis(const Tableau& a, int q, int p) {
  require(q >= 0 && p >= 0 && static_cast<std::size_t>(p) <= a.n(), ErrorCode::InvalidArgument,
          "cochain degrees out of range: q=" + std::to_string(q) + ", p=" + std::to_string(p));
  return tensor_with_ext(a.prolongation(q - 1), a.n(), a.s(), q, p);
}

namespace {

std::size_t restricted_rank(const Tableau& a, int q, int p) {
  if (p < 0 || static_cast<std::size_t>(p) >= a.n() || q <= 0) return 0;
  const auto basis = cochain_basis(a, q, p);
  if (basis.empty()) return 0;
  const Matrix d = coboundary_matrix(a.n(), a.s(), q, p);
  return rank(d * Matrix::from_columns(basis, d.cols()));
}

}  // namespace

std::size_t cohomology_dim(const Tableau& a, int q, int p) {
  const std::size_t dim = cochain_basis(a, q, p).size();
  const std::size_t out = restricted_rank(a, q, p);
  const std::size_t in = p >= 1 ? restricted_rank(a, q + 1, p - 1) : 0;
  return dim - out - in;
}

Subspace delta11_image(const Tableau& a) {
  const Grading target{a.n(), a.s(), 0, 2};
  const auto basis = cochain_basis(a, 1, 1);
  if (basis.empty() || target.size() == 0) return Subspace(target.size());
  const Matrix d = coboundary_matrix(a.n(), a.s(), 1, 1);
  return image_basis(d * Matrix::from_columns(basis, d.cols()));
}

const char* to_string(AcyclicityVerdict::Kind kind) {
  switch (kind) {
    case AcyclicityVerdict::Kind::AcyclicUpTo: return "acyclic_up_to";
    case AcyclicityVerdict::Kind::FailsAt: return "fails_at";
    case AcyclicityVerdict::Kind::Certified: return "certified";
  }
  return "unknown";
}

AcyclicityVerdict is_2acyclic(const Tableau& a, int q_max, const GenericityOptions& opts) {
  require(q_max >= 1, ErrorCode::InvalidArgument, "is_2acyclic: q_max must be >= 1");
  AcyclicityVerdict v;
  v.q_max = q_max;
  if (a.n() < 2) {
    // L^2 of a line vanishes.
    v.h2_dims.assign(static_cast<std::size_t>(q_max), 0);
  } else {
    for (int q = 1; q <= q_max; ++q) {
      const std::size_t d = cohomology_dim(a, q, 2);
      v.h2_dims.push_back(d);
      if (d != 0) {
        v.kind = AcyclicityVerdict::Kind::FailsAt;
        v.failing_q = q;
        v.failing_dim = d;
        return v;
      }
    }
  }
  if (const auto h = involutivity_order(a, q_max, opts)) {
    v.kind = AcyclicityVerdict::Kind::Certified;
    v.involutive_order = *h;
  }
  return v;
}

TorsionClass torsion_class(const Vector& c, const Subspace& image) {
  require(c.size() == image.ambient_dim(), ErrorCode::DimensionMismatch,
          "torsion_class: cochain has " + std::to_string(c.size()) + " coordinates, expected " +
              std::to_string(image.ambient_dim()));
  TorsionClass t;
  t.class_coords = image.quotient_coordinates(c);
  t.complement = image.complement_indices();
  t.is_zero = is_zero(t.class_coords);
  return t;
}

TorsionClass torsion_class(const SpencerCochain& c, const Tableau& a) {
  const Grading expected{a.n(), a.s(), 0, 2};
  require(c.grading == expected, ErrorCode::DimensionMismatch,
          "torsion_class: cochain must live in b (x) L^2(a*) with matching dimensions");
  return torsion_class(c.coords, delta11_image(a));
}

}  // namespace tbx
