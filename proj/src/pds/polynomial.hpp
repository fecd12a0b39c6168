#pragma once

#include <map>
#include <string>
#include <vector>

#include "linalg/rational.hpp"

namespace tbx {

/// Sparse polynomial over Q in variables p^0..p^{vars-1}; extra values passed
/// to evaluate are ignored. A monomial is the
/// sorted list of its variable indices, so {} is 1 and {0, 0, 2} is (p^0)^2 p^2.
class Polynomial {
 public:
  using Monomial = std::vector<std::size_t>;

  Polynomial() = default;
  explicit Polynomial(std::size_t vars) : vars_(vars) {}
  static Polynomial constant(std::size_t vars, const Rational& c);
  static Polynomial variable(std::size_t vars, std::size_t index);

  std::size_t vars() const noexcept { return vars_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  Rational coefficient(const Monomial& m) const;

  void add_term(Monomial m, const Rational& c);
  Rational evaluate(const Vector& p) const;
  Polynomial derivative(std::size_t index) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::size_t vars_ = 0;
  std::map<Monomial, Rational> terms_;
};

}  // namespace tbx
