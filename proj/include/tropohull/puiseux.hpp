#pragma once

// Exact arithmetic in the ordered field of rational-exponent Puiseux
// fractions. The indeterminate t is infinitely large: x > 0 iff the
// coefficient of the highest exponent of x is positive, and the degree of x
// is that highest exponent.

#include "tropohull/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropohull {

class PuiseuxPoly {
 public:
  struct Term {
    Rational coeff;
    Rational exponent;
    friend bool operator==(const Term&, const Term&) = default;
  };

  PuiseuxPoly() = default;
  // Merges equal exponents, drops zero coefficients, sorts descending.
  explicit PuiseuxPoly(std::vector<Term> terms);
  static PuiseuxPoly monomial(const Rational& coeff, const Rational& exponent);
  static PuiseuxPoly constant(const Rational& c) { return monomial(c, 0); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const;
  const Term& trailing() const;

  PuiseuxPoly operator-() const;
  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend bool operator==(const PuiseuxPoly&, const PuiseuxPoly&) = default;

  // Multiplies by c * t^e.
  PuiseuxPoly scaled(const Rational& c, const Rational& e) const;

  Rational evaluate(const Rational& t0) const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

// Greatest common divisor up to units of the Laurent ring: leading
// coefficient 1, lowest exponent 0. gcd(0, 0) = 0.
PuiseuxPoly gcd(const PuiseuxPoly& a, const PuiseuxPoly& b);
// a / b when b divides a in the Laurent ring; std::nullopt otherwise.
std::optional<PuiseuxPoly> divide_exact(const PuiseuxPoly& a, const PuiseuxPoly& b);

class PuiseuxNumber {
 public:
  PuiseuxNumber() = default;
  PuiseuxNumber(long c) : num_(PuiseuxPoly::constant(Rational(c))), den_(PuiseuxPoly::constant(1)) {}
  PuiseuxNumber(const Rational& c) : num_(PuiseuxPoly::constant(c)), den_(PuiseuxPoly::constant(1)) {}
  explicit PuiseuxNumber(PuiseuxPoly p) : num_(std::move(p)), den_(PuiseuxPoly::constant(1)) {}
  // Throws DomainError when den is zero.
  static PuiseuxNumber fraction(PuiseuxPoly num, PuiseuxPoly den);
  static PuiseuxNumber monomial(const Rational& coeff, const Rational& exponent);
  static PuiseuxNumber t() { return monomial(1, 1); }

  const PuiseuxPoly& numerator() const { return num_; }
  const PuiseuxPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  int sign() const;
  // Highest exponent; std::nullopt stands for -infinity (the zero element).
  std::optional<Rational> degree() const;
  Rational leading_coefficient() const;

  PuiseuxNumber operator-() const;
  PuiseuxNumber& operator+=(const PuiseuxNumber& o);
  PuiseuxNumber& operator-=(const PuiseuxNumber& o);
  PuiseuxNumber& operator*=(const PuiseuxNumber& o);
  PuiseuxNumber& operator/=(const PuiseuxNumber& o);
  friend PuiseuxNumber operator+(PuiseuxNumber a, const PuiseuxNumber& b) { return a += b; }
  friend PuiseuxNumber operator-(PuiseuxNumber a, const PuiseuxNumber& b) { return a -= b; }
  friend PuiseuxNumber operator*(PuiseuxNumber a, const PuiseuxNumber& b) { return a *= b; }
  friend PuiseuxNumber operator/(PuiseuxNumber a, const PuiseuxNumber& b) { return a /= b; }

  friend bool operator==(const PuiseuxNumber& a, const PuiseuxNumber& b);
  friend int compare(const PuiseuxNumber& a, const PuiseuxNumber& b);
  friend bool operator<(const PuiseuxNumber& a, const PuiseuxNumber& b) { return compare(a, b) < 0; }
  friend bool operator>(const PuiseuxNumber& a, const PuiseuxNumber& b) { return compare(a, b) > 0; }
  friend bool operator<=(const PuiseuxNumber& a, const PuiseuxNumber& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const PuiseuxNumber& a, const PuiseuxNumber& b) { return compare(a, b) >= 0; }

  // Value at t = t0; throws DomainError at a pole or for an irrational power.
  Rational evaluate(const Rational& t0) const;

  // Text form: sum of c*t^{p/q} terms, optionally "(...)/(...)".
  std::string to_string() const;
  static PuiseuxNumber parse(std::string_view text);

 private:
  void canonicalize();

  PuiseuxPoly num_;
  PuiseuxPoly den_ = PuiseuxPoly::constant(1);
};

inline int sign_of(const PuiseuxNumber& x) { return x.sign(); }

// a / b for a divisor known to divide exactly; avoids the gcd in the
// canonicalization of a / b when both are polynomials.
PuiseuxNumber exact_quotient(const PuiseuxNumber& a, const PuiseuxNumber& b);

// Rescales by a positive element of K so that every entry is a polynomial and
// the entries have polynomial content 1. Every sign is preserved.
void make_primitive(std::vector<PuiseuxNumber>& v);
void make_primitive(std::vector<Rational>& v);

// Key used to order generators deterministically: per-coordinate degrees.
// Zero coordinates (degree -infinity) map to std::nullopt, which sorts first.
std::vector<std::optional<Rational>> order_key(const std::vector<PuiseuxNumber>& v);
std::vector<std::optional<Rational>> order_key(const std::vector<Rational>& v);

}  // namespace tropohull
