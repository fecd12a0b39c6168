#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tbx {

// Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional sign, decimal digits). Rejects q = 0 and
/// anything else that is not an exact rational literal.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& c, const Vector& v);
void axpy(const Rational& c, const Vector& x, Vector& y);  // y += c*x
Rational dot(const Vector& a, const Vector& b);

}  // namespace tbx
