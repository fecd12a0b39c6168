#include "linalg/rational.hpp"

#include <cctype>

#include "error.hpp"

namespace tbx {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text, true)) {
      fail(ErrorCode::Parse, "not a rational literal: \"" + std::string(text) + "\"");
    }
    return Rational(to_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    fail(ErrorCode::Parse, "not a rational literal: \"" + std::string(text) + "\"");
  }
  Integer d = to_integer(den);
  if (d == 0) fail(ErrorCode::Parse, "zero denominator in \"" + std::string(text) + "\"");
  Rational r(to_integer(num), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n, Rational(0));
  v.at(index) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "vector add: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "vector sub: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Rational& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

void axpy(const Rational& c, const Vector& x, Vector& y) {
  require(x.size() == y.size(), ErrorCode::DimensionMismatch, "axpy: length mismatch");
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += c * x[i];
  }
}

Rational dot(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "dot: length mismatch");
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) r += a[i] * b[i];
  }
  return r;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::GenericityUnstable: return "GenericityUnstable";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::NotComplementary: return "NotComplementary";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotInDecomposition: return "NotInDecomposition";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotCartan: return "NotCartan";
    case ErrorCode::NotCertified: return "NotCertified";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace tbx
