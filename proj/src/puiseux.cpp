#include "tropohull/puiseux.hpp"

#include "tropohull/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace tropohull {

namespace {

// Dense univariate polynomial over Q; index = power of s.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient of long division a = q*b + r.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

// Integer polynomial with content removed and positive leading coefficient.
using IntPoly = std::vector<Integer>;

IntPoly primitive_part(const Dense& p) {
  Integer den = 1, content = 0;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  IntPoly out;
  for (const auto& c : p) {
    Rational scaled = c * Rational(den);
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content == 0) return {};
  if (out.back() < 0) content = -content;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return out;
}

void make_primitive_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  Integer content = 0;
  for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content == 0) return;
  if (p.back() < 0) content = -content;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// Degree of gcd(a, b) modulo a prime not dividing any denominator or either
// leading coefficient; std::nullopt when the prime is unsuitable. It bounds
// the degree of the rational gcd from above.
std::optional<std::size_t> modular_gcd_degree(const IntPoly& a, const IntPoly& b, unsigned long prime) {
  auto reduce = [&](const IntPoly& p) {
    std::vector<unsigned long> out;
    for (const auto& c : p) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), prime));
    return out;
  };
  std::vector<unsigned long> x = reduce(a), y = reduce(b);
  if (x.back() == 0 || y.back() == 0) return std::nullopt;
  auto trim_mod = [](std::vector<unsigned long>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto inverse = [&](unsigned long v) {
    // Fermat: v^(p-2)
    unsigned long long r = 1, base = v, e = prime - 2;
    while (e) {
      if (e & 1) r = r * base % prime;
      base = base * base % prime;
      e >>= 1;
    }
    return static_cast<unsigned long>(r);
  };
  while (!y.empty()) {
    // x <- x mod y
    const unsigned long long inv = inverse(y.back());
    while (x.size() >= y.size()) {
      const unsigned long long f = x.back() * inv % prime;
      const std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i)
        x[i + shift] = static_cast<unsigned long>((x[i + shift] + prime - f * y[i] % prime) % prime);
      trim_mod(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return x.size() - 1;
}

// Primitive polynomial remainder sequence; exact over Z.
IntPoly int_gcd(IntPoly a, IntPoly b) {
  make_primitive_int(a);
  make_primitive_int(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // Pseudo-remainder of a by b.
    const Integer lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
      const Integer f = a.back();
      const std::size_t shift = a.size() - b.size();
      for (auto& c : a) c *= lead;
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      while (!a.empty() && a.back() == 0) a.pop_back();
      make_primitive_int(a);
    }
    std::swap(a, b);
  }
  return a;
}

Dense dense_gcd(const Dense& a, const Dense& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.size() == 1 || y.size() == 1) return {Rational(1)};
  for (unsigned long prime : {2147483647ul, 2147483629ul, 2147483587ul}) {
    auto deg = modular_gcd_degree(x, y, prime);
    if (!deg) continue;
    if (*deg == 0) return {Rational(1)};
    break;
  }
  IntPoly g = int_gcd(std::move(x), std::move(y));
  Dense out;
  for (const auto& c : g) out.emplace_back(c, g.back());
  for (auto& c : out) c.canonicalize();
  return out;
}

// Common exponent grid of a set of polynomials: exponent = base + k / n.
struct Grid {
  Integer n = 1;
};

Grid grid_of(std::initializer_list<const PuiseuxPoly*> polys) {
  Grid g;
  for (auto* p : polys)
    for (const auto& t : p->terms()) {
      Integer den = t.exponent.get_den();
      mpz_lcm(g.n.get_mpz_t(), g.n.get_mpz_t(), den.get_mpz_t());
    }
  return g;
}

// p = t^{trailing exponent} * dense(s), s = t^{1/n}.
Dense to_dense(const PuiseuxPoly& p, const Grid& g) {
  if (p.is_zero()) return {};
  const Rational low = p.trailing().exponent;
  Rational span = (p.leading().exponent - low) * Rational(g.n);
  Dense out(span.get_num().get_ui() + 1, Rational(0));
  for (const auto& t : p.terms()) {
    Rational k = (t.exponent - low) * Rational(g.n);
    out[k.get_num().get_ui()] = t.coeff;
  }
  return out;
}

PuiseuxPoly from_dense(const Dense& d, const Grid& g, const Rational& low) {
  std::vector<PuiseuxPoly::Term> terms;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 0) terms.push_back({d[k], low + Rational(static_cast<long>(k)) / Rational(g.n)});
  return PuiseuxPoly(std::move(terms));
}

std::string exponent_suffix(const Rational& e) {
  if (e == 1) return "t";
  if (e.get_den() == 1 && e > 0) return "t^" + e.get_str();
  return "t^{" + e.get_str() + "}";
}

}  // namespace

// ---------------------------------------------------------------------------

PuiseuxPoly::PuiseuxPoly(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coeff, const Rational& exponent) {
  PuiseuxPoly p;
  if (coeff != 0) p.terms_.push_back({coeff, exponent});
  return p;
}

bool PuiseuxPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coeff == 1;
}

const PuiseuxPoly::Term& PuiseuxPoly::leading() const {
  if (terms_.empty()) throw DomainError("leading term of zero");
  return terms_.front();
}

const PuiseuxPoly::Term& PuiseuxPoly::trailing() const {
  if (terms_.empty()) throw DomainError("trailing term of zero");
  return terms_.back();
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  // Merge of two descending term lists.
  PuiseuxPoly out;
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent > j->exponent)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->exponent > i->exponent) {
      out.terms_.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) out.terms_.push_back({c, i->exponent});
      ++i;
      ++j;
    }
  }
  return out;
}

PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.scaled(b.terms_[0].coeff, b.terms_[0].exponent);
  if (a.is_monomial()) return b.scaled(a.terms_[0].coeff, a.terms_[0].exponent);
  std::vector<PuiseuxPoly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back({x.coeff * y.coeff, x.exponent + y.exponent});
  return PuiseuxPoly(std::move(terms));
}

PuiseuxPoly PuiseuxPoly::scaled(const Rational& c, const Rational& e) const {
  if (c == 0) return {};
  PuiseuxPoly p = *this;
  for (auto& t : p.terms_) {
    t.coeff *= c;
    t.exponent += e;
  }
  return p;
}

namespace {

// t0^e for rational e, exact or DomainError.
Rational rational_power(const Rational& t0, const Rational& e) {
  const Integer p = e.get_num();
  const Integer q = e.get_den();
  if (t0 == 0) {
    if (e <= 0) throw DomainError("pole: non-positive power of t at t0 = 0");
    return 0;
  }
  if (q != 1 && t0 < 0) throw DomainError("fractional power of a negative number");
  auto root = [&](const Integer& x) {
    Integer r;
    if (!mpz_root(r.get_mpz_t(), x.get_mpz_t(), q.get_ui()))
      throw DomainError("t0^" + e.get_str() + " is irrational");
    return r;
  };
  Integer abs_p = abs(p);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), t0.get_num().get_mpz_t(), abs_p.get_ui());
  mpz_pow_ui(den.get_mpz_t(), t0.get_den().get_mpz_t(), abs_p.get_ui());
  Rational r(root(num), root(den));
  r.canonicalize();
  return p < 0 ? Rational(1 / r) : r;
}

}  // namespace

Rational PuiseuxPoly::evaluate(const Rational& t0) const {
  Rational sum = 0;
  for (const auto& t : terms_) sum += t.coeff * rational_power(t0, t.exponent);
  return sum;
}

std::string PuiseuxPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(t.coeff);
    if (t.exponent == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += exponent_suffix(t.exponent);
    } else {
      out += mag.get_str() + "*" + exponent_suffix(t.exponent);
    }
  }
  return out;
}

PuiseuxPoly gcd(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const PuiseuxPoly& p = a.is_zero() ? b : a;
    return p.scaled(1 / p.leading().coeff, -p.trailing().exponent);
  }
  Grid g = grid_of({&a, &b});
  Dense d = dense_gcd(to_dense(a, g), to_dense(b, g));
  return from_dense(d, g, 0);
}

std::optional<PuiseuxPoly> divide_exact(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return PuiseuxPoly();
  if (b.is_monomial()) return a.scaled(1 / b.leading().coeff, -b.leading().exponent);
  Grid g = grid_of({&a, &b});
  auto [q, r] = divmod(to_dense(a, g), to_dense(b, g));
  if (!r.empty()) return std::nullopt;
  return from_dense(q, g, a.trailing().exponent - b.trailing().exponent);
}

// ---------------------------------------------------------------------------

PuiseuxNumber PuiseuxNumber::fraction(PuiseuxPoly num, PuiseuxPoly den) {
  if (den.is_zero()) throw DomainError("division by zero");
  PuiseuxNumber x;
  x.num_ = std::move(num);
  x.den_ = std::move(den);
  x.canonicalize();
  return x;
}

PuiseuxNumber PuiseuxNumber::monomial(const Rational& coeff, const Rational& exponent) {
  return PuiseuxNumber(PuiseuxPoly::monomial(coeff, exponent));
}

void PuiseuxNumber::canonicalize() {
  if (num_.is_zero()) {
    den_ = PuiseuxPoly::constant(1);
    return;
  }
  if (den_.is_one()) return;
  if (!den_.is_monomial()) {
    PuiseuxPoly g = gcd(num_, den_);
    if (!g.is_monomial()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  // Fold the monomial unit of the denominator into the numerator.
  const Rational lc = den_.leading().coeff;
  const Rational low = den_.trailing().exponent;
  num_ = num_.scaled(1 / lc, -low);
  den_ = den_.scaled(1 / lc, -low);
}

int PuiseuxNumber::sign() const {
  if (num_.is_zero()) return 0;
  return sgn(num_.leading().coeff) * sgn(den_.leading().coeff);
}

std::optional<Rational> PuiseuxNumber::degree() const {
  if (num_.is_zero()) return std::nullopt;
  return num_.leading().exponent - den_.leading().exponent;
}

Rational PuiseuxNumber::leading_coefficient() const {
  if (num_.is_zero()) return 0;
  return num_.leading().coeff / den_.leading().coeff;
}

PuiseuxNumber PuiseuxNumber::operator-() const {
  PuiseuxNumber x = *this;
  x.num_ = -x.num_;
  return x;
}

PuiseuxNumber& PuiseuxNumber::operator+=(const PuiseuxNumber& o) {
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = PuiseuxPoly::constant(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

PuiseuxNumber& PuiseuxNumber::operator-=(const PuiseuxNumber& o) { return *this += -o; }

PuiseuxNumber& PuiseuxNumber::operator*=(const PuiseuxNumber& o) {
  num_ = num_ * o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

PuiseuxNumber& PuiseuxNumber::operator/=(const PuiseuxNumber& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  PuiseuxPoly num = num_ * o.den_;
  PuiseuxPoly den = den_ * o.num_;
  num_ = std::move(num);
  den_ = std::move(den);
  canonicalize();
  return *this;
}

PuiseuxNumber exact_quotient(const PuiseuxNumber& a, const PuiseuxNumber& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (auto q = divide_exact(a.numerator(), b.numerator())) return PuiseuxNumber(std::move(*q));
  }
  return a / b;
}

bool operator==(const PuiseuxNumber& a, const PuiseuxNumber& b) {
  if (a.den_.is_one() && b.den_.is_one()) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

int compare(const PuiseuxNumber& a, const PuiseuxNumber& b) { return (a - b).sign(); }

Rational PuiseuxNumber::evaluate(const Rational& t0) const {
  Rational d = den_.evaluate(t0);
  if (d == 0) throw DomainError("pole at t0 = " + t0.get_str());
  return num_.evaluate(t0) / d;
}

std::string PuiseuxNumber::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Parser for the text form.

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PuiseuxNumber number() {
    skip();
    PuiseuxNumber out;
    if (peek() == '(') {
      ++pos_;
      PuiseuxPoly num = poly();
      expect(')');
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        expect('(');
        PuiseuxPoly den = poly();
        expect(')');
        out = PuiseuxNumber::fraction(std::move(num), std::move(den));
      } else {
        out = PuiseuxNumber(std::move(num));
      }
    } else {
      out = PuiseuxNumber(poly());
    }
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad Puiseux number '" + std::string(s_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Rational signed_rational() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    Integer n = integer();
    Integer d = 1;
    if (peek() == '/') {
      ++pos_;
      d = integer();
      if (d == 0) fail("zero denominator");
    }
    Rational q(neg ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
  }

  Rational exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    if (peek() == '{') {
      ++pos_;
      Rational e = signed_rational();
      if (peek() != '}') fail("expected '}'");
      ++pos_;
      return e;
    }
    Rational e(integer());
    return e;
  }

  PuiseuxPoly::Term term() {
    skip();
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer n = integer();
      Integer d = 1;
      if (peek() == '/') {
        ++pos_;
        d = integer();
        if (d == 0) fail("zero denominator");
      }
      coeff = Rational(n, d);
      coeff.canonicalize();
      skip();
      if (peek() != '*') return {coeff, 0};
      ++pos_;
      skip();
    }
    if (peek() != 't') fail("expected 't'");
    ++pos_;
    return {coeff, exponent()};
  }

  PuiseuxPoly poly() {
    std::vector<PuiseuxPoly::Term> terms;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      auto t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(t);
      skip();
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else {
        break;
      }
    }
    return PuiseuxPoly(std::move(terms));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PuiseuxNumber PuiseuxNumber::parse(std::string_view text) { return Parser(text).number(); }

// ---------------------------------------------------------------------------

void make_primitive(std::vector<PuiseuxNumber>& v) {
  // Canonical denominators have leading coefficient 1, so clearing them keeps
  // every sign.
  PuiseuxPoly common = PuiseuxPoly::constant(1);
  for (const auto& x : v) {
    if (x.is_polynomial()) continue;
    const PuiseuxPoly g = gcd(common, x.denominator());
    common = common * *divide_exact(x.denominator(), g);
  }
  if (!common.is_one())
    for (auto& x : v) x *= PuiseuxNumber(common);
  PuiseuxPoly g;
  for (const auto& x : v) {
    if (!x.is_zero()) g = gcd(g, x.numerator());
    if (g.is_one()) break;
  }
  if (g.is_zero()) return;
  if (!g.is_one())
    for (auto& x : v)
      if (!x.is_zero()) x = PuiseuxNumber(*divide_exact(x.numerator(), g));
  // Integer coefficients with content 1.
  Integer den = 1, content = 0;
  for (const auto& x : v)
    for (const auto& t : x.numerator().terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    }
  if (den == 1 && content == 1) return;
  Rational scale(den, content);
  scale.canonicalize();
  for (auto& x : v)
    if (!x.is_zero()) x = PuiseuxNumber(x.numerator().scaled(scale, 0));
}

void make_primitive(std::vector<Rational>& v) {
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  if (num_gcd == 0) return;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (auto& x : v) x *= scale;
}

std::vector<std::optional<Rational>> order_key(const std::vector<PuiseuxNumber>& v) {
  std::vector<std::optional<Rational>> key;
  for (const auto& x : v) key.push_back(x.degree());
  return key;
}

std::vector<std::optional<Rational>> order_key(const std::vector<Rational>& v) {
  return {v.begin(), v.end()};
}

}  // namespace tropohull
