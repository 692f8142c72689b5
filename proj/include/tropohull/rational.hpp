#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropohull {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p/q", "-p/q" or an integer; the result is canonical (reduced).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

// Nearest double; used only for drawing.
double to_double(const Rational& q);

}  // namespace tropohull
