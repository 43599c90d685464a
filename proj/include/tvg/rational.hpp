#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tvg {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts an optional '-', decimal digits, and an optional "/digits".
/// The result is canonicalized; a zero denominator is a ParseError.
Rational parse_rational(std::string_view text);

}  // namespace tvg
