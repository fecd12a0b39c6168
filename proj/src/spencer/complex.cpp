#include "spencer/complex.hpp"

#include <algorithm>

#include "error.hpp"

namespace tbx {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enumerate_monomials(std::size_t n, unsigned remaining, Exponents& current,
                         std::vector<Exponents>& out) {
  const std::size_t pos = current.size();
  if (pos + 1 == n) {
    current.push_back(remaining);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current.push_back(e);
    enumerate_monomials(n, remaining - e, current, out);
    current.pop_back();
  }
}

void enumerate_exts(std::size_t n, std::size_t p, std::size_t start, ExtIndex& current,
                    std::vector<ExtIndex>& out) {
  if (current.size() == p) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    current.push_back(i);
    enumerate_exts(n, p, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t n, int degree) : n_(n), degree_(degree) {
  if (degree < 0) return;
  if (n == 0) {
    if (degree == 0) monomials_.emplace_back();
  } else {
    Exponents current;
    enumerate_monomials(n, static_cast<unsigned>(degree), current, monomials_);
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) fail(ErrorCode::Internal, "monomial not in basis");
  return it->second;
}

ExtBasis::ExtBasis(std::size_t n, int p) {
  if (p < 0 || static_cast<std::size_t>(p) > n) return;
  ExtIndex current;
  enumerate_exts(n, static_cast<std::size_t>(p), 0, current, indices_);
  for (std::size_t i = 0; i < indices_.size(); ++i) index_.emplace(indices_[i], i);
}

std::size_t ExtBasis::index_of(const ExtIndex& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) fail(ErrorCode::Internal, "ext index not in basis");
  return it->second;
}

std::size_t Grading::size() const {
  if (q < 0 || p < 0 || static_cast<std::size_t>(p) > n) return 0;
  const std::size_t sym = n == 0 ? (q == 0 ? 1 : 0)
                                 : binomial(n + static_cast<std::size_t>(q) - 1,
                                            static_cast<std::size_t>(q));
  return s * sym * binomial(n, static_cast<std::size_t>(p));
}

Flattening::Flattening(const Grading& g)
    : grading_(g), monomials_(g.n, g.q), exts_(g.n, g.p) {
  size_ = g.s * monomials_.size() * exts_.size();
}

Flattening::Key Flattening::key(std::size_t flat) const {
  const std::size_t e = exts_.size();
  const std::size_t m = monomials_.size();
  return {flat / (m * e), (flat / e) % m, flat % e};
}

SpencerCochain SpencerCochain::zero(const Grading& g) { return {g, zero_vector(g.size())}; }

SpencerCochain coboundary(const SpencerCochain& x) {
  const Grading& g = x.grading;
  require(x.coords.size() == g.size(), ErrorCode::DimensionMismatch,
          "cochain coordinate count does not match its grading");
  const Grading target{g.n, g.s, g.q - 1, g.p + 1};
  SpencerCochain out = SpencerCochain::zero(target);
  if (g.q <= 0 || target.size() == 0) return out;

  const Flattening src(g);
  const Flattening dst(target);
  for (std::size_t flat = 0; flat < src.size(); ++flat) {
    const Rational& c = x.coords[flat];
    if (sgn(c) == 0) continue;
    const auto k = src.key(flat);
    const Exponents& mono = src.monomials()[k.mono];
    const ExtIndex& ext = src.exts()[k.ext];
    for (std::size_t i = 0; i < g.n; ++i) {
      if (mono[i] == 0) continue;
      if (std::find(ext.begin(), ext.end(), i) != ext.end()) continue;
      Exponents reduced = mono;
      --reduced[i];
      // dx^I ^ dx^i: moving dx^i left past every index greater than i.
      ExtIndex merged = ext;
      const auto greater = static_cast<std::size_t>(
          std::count_if(ext.begin(), ext.end(), [i](std::size_t j) { return j > i; }));
      merged.insert(std::upper_bound(merged.begin(), merged.end(), i), i);
      Rational term = c * mono[i];
      if (greater % 2 == 1) term = -term;
      const std::size_t t = dst.index(k.b, dst.monomials().index_of(reduced),
                                      dst.exts().index_of(merged));
      out.coords[t] += term;
    }
  }
  return out;
}

Matrix coboundary_matrix(std::size_t n, std::size_t s, int q, int p) {
  require(p >= 0 && static_cast<std::size_t>(p) <= n, ErrorCode::InvalidArgument,
          "coboundary_matrix: p must lie in 0..n");
  const Grading src{n, s, q, p};
  const Grading dst{n, s, q - 1, p + 1};
  Matrix m(dst.size(), src.size());
  if (q <= 0) return m;
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto image = coboundary({src, unit_vector(src.size(), j)});
    for (std::size_t i = 0; i < image.coords.size(); ++i) m(i, j) = image.coords[i];
  }
  return m;
}

Vector gradient(std::size_t n, std::size_t s, int q, const Vector& poly) {
  return coboundary({Grading{n, s, q, 0}, poly}).coords;
}

Vector integrate_gradient(std::size_t n, std::size_t s, int q, const Vector& closed_form) {
  const Grading src{n, s, q, 1};
  require(closed_form.size() == src.size(), ErrorCode::DimensionMismatch,
          "integrate_gradient: coordinate count mismatch");
  const Flattening from(src);
  const Flattening to(Grading{n, s, q + 1, 0});
  Vector out = zero_vector(to.size());
  const Rational factor(1, q + 1);
  for (std::size_t flat = 0; flat < from.size(); ++flat) {
    const Rational& c = closed_form[flat];
    if (sgn(c) == 0) continue;
    const auto k = from.key(flat);
    const std::size_t i = from.exts()[k.ext][0];
    Exponents raised = from.monomials()[k.mono];
    ++raised[i];
    out[to.index(k.b, to.monomials().index_of(raised), 0)] += c * factor;
  }
  return out;
}

std::vector<Vector> tensor_with_ext(const Subspace& v, std::size_t n, std::size_t s, int q,
                                    int p) {
  const Grading base{n, s, q, 0};
  require(v.ambient_dim() == base.size(), ErrorCode::DimensionMismatch,
          "tensor_with_ext: subspace does not live in b (x) S^q");
  const Flattening flat(Grading{n, s, q, p});
  const std::size_t mono_count = flat.monomials().size();
  std::vector<Vector> out;
  out.reserve(v.dim() * flat.exts().size());
  for (const auto& vec : v.basis()) {
    for (std::size_t e = 0; e < flat.exts().size(); ++e) {
      Vector w = zero_vector(flat.size());
      for (std::size_t i = 0; i < vec.size(); ++i) {
        if (sgn(vec[i]) == 0) continue;
        w[flat.index(i / mono_count, i % mono_count, e)] = vec[i];
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace tbx
