#include "bssrw/exact/rational.hpp"

#include <stdexcept>

#include "bssrw/error.hpp"

namespace bssrw {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw DomainError("not a rational number: '" + text + "'");
  }
  if (r.get_den() == 0) throw DivisionByZero();
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

int sign(const Rational& value) { return sgn(value); }

Integer pow(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  return make_rational(pow(Integer(base.get_num()), exponent), pow(Integer(base.get_den()), exponent));
}

bool is_dyadic(const Rational& value) {
  const Integer& den = value.get_den();
  return mpz_popcount(den.get_mpz_t()) == 1;
}

Rational round_down(const Rational& value, unsigned bits) {
  Integer scaled = floor(Rational(value * pow(Integer(2), bits)));
  return make_rational(scaled, pow(Integer(2), bits));
}

Rational round_up(const Rational& value, unsigned bits) {
  Integer scaled = ceil(Rational(value * pow(Integer(2), bits)));
  return make_rational(scaled, pow(Integer(2), bits));
}

bool exact_root(const Rational& value, unsigned d, Rational& root) {
  if (d == 0) throw DomainError("root index must be positive");
  if (value < 0 && d % 2 == 0) return false;
  Integer num = value.get_num();
  Integer den = value.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d) == 0) return false;
  root = make_rational(negative ? Integer(-rn) : rn, rd);
  return true;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw DomainError("simplest_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Integer fl = floor(lo);
  if (fl == lo) return Rational(fl);
  if (fl + 1 <= hi) return Rational(fl + 1);
  // lo and hi share the integer part; recurse on reciprocals of fractional parts.
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

std::string to_decimal(const Rational& value, int digits) {
  Integer scale = pow(Integer(10), static_cast<unsigned>(digits));
  Integer scaled = floor(Rational(abs(value) * scale));
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (value < 0) s.insert(0, "-");
  return s;
}

}  // namespace bssrw
