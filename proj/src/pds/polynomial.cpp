#include "pds/polynomial.hpp"

#include <algorithm>

#include "error.hpp"

namespace tbx {

Polynomial Polynomial::constant(std::size_t vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t index) {
  require(index < vars, ErrorCode::InvalidArgument, "polynomial variable index out of range");
  Polynomial p(vars);
  p.add_term({index}, 1);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational Polynomial::evaluate(const Vector& p) const {
  require(p.size() >= vars_, ErrorCode::DimensionMismatch,
          "polynomial evaluation: expected " + std::to_string(vars_) + " values");
  Rational out = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (auto v : m) t *= p[v];
    out += t;
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    const auto count = std::count(m.begin(), m.end(), index);
    if (count == 0) continue;
    Monomial reduced = m;
    reduced.erase(std::find(reduced.begin(), reduced.end(), index));
    out.add_term(std::move(reduced), c * static_cast<long>(count));
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  vars_ = std::max(vars_, other.vars_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  vars_ = std::max(vars_, other.vars_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.vars_, b.vars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial out(a.vars_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, v] : a.terms_) out.terms_.emplace(m, c * v);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string coeff = format_rational(c);
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    if (coeff[0] == '-') coeff.erase(0, 1);
    std::string mono;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += "p" + std::to_string(m[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) out += coeff;
    else if (coeff == "1") out += mono;
    else out += coeff + "*" + mono;
  }
  return out;
}

}  // namespace tbx
