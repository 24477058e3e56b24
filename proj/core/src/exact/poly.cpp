#include "bssrw/exact/poly.hpp"

#include <algorithm>

#include "bssrw/error.hpp"

namespace bssrw {

Poly::Poly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<Rational> coefficients) : c_(coefficients) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, unsigned k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::from_integers(std::initializer_list<long> coefficients) {
  std::vector<Rational> v;
  v.reserve(coefficients.size());
  for (long c : coefficients) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw ZeroPolynomialError("leading coefficient");
  return c_.back();
}

const Rational& Poly::constant_term() const {
  static const Rational zero(0);
  return c_.empty() ? zero : c_.front();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Poly::sign_at(const Rational& x) const { return sgn((*this)(x)); }

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::substitute_power(unsigned d) const {
  if (d == 0) throw DomainError("substitute_power: exponent must be positive");
  if (c_.empty()) return {};
  std::vector<Rational> v((c_.size() - 1) * d + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * d] = c_[i];
  return Poly(std::move(v));
}

Poly Poly::scale_variable(const Rational& s) const {
  std::vector<Rational> v(c_);
  Rational f(1);
  for (auto& c : v) {
    c *= f;
    f *= s;
  }
  return Poly(std::move(v));
}

Poly Poly::shift(const Rational& s) const { return compose(Poly{s, Rational(1)}); }

Poly Poly::reversal() const {
  std::vector<Rational> v(c_.rbegin(), c_.rend());
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  Rational inv = 1 / c_.back();
  return *this * inv;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (c_.empty() || other.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + other.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < other.c_.size(); ++j) r[i + j] += c_[i] * other.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  const int db = divisor.degree();
  const int da = dividend.degree();
  if (da < db) return {Poly{}, dividend};
  std::vector<Rational> quo(da - db + 1, Rational(0));
  const Rational inv = 1 / divisor.leading();
  auto dc = divisor.coefficients();
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] * inv;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * dc[j];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool divides(const Poly& divisor, const Poly& dividend) {
  return divmod(dividend, divisor).second.is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = primitive_part(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Rational(1)), s1;
  Poly t0, t1 = Poly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("squarefree_part");
  if (p.degree() == 0) return Poly::constant(Rational(1));
  return (p / poly_gcd(p, p.derivative())).monic();
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("squarefree_decomposition");
  std::vector<Poly> out;
  if (p.degree() == 0) return out;
  Poly f = p.monic();
  Poly a = poly_gcd(f, f.derivative());
  Poly b = f / a;
  Poly c = f.derivative() / a;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly g = poly_gcd(b, d);
    out.push_back(g);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  Poly x = a, y = b;
  Rational result(1);
  while (true) {
    const int dx = x.degree(), dy = y.degree();
    if (dy == 0) return result * pow(y.leading(), static_cast<unsigned>(dx));
    if (dx == 0) return result * pow(x.leading(), static_cast<unsigned>(dy));
    Poly r = x % y;
    if (r.is_zero()) return Rational(0);
    const int dr = r.degree();
    if ((dx * dy) % 2 != 0) result = -result;
    result *= pow(y.leading(), static_cast<unsigned>(dx - dr));
    x = std::move(y);
    y = std::move(r);
  }
}

ContentSplit content_split(const Poly& p) {
  if (p.is_zero()) return {Rational(0), Poly{}};
  Integer num_gcd(0), den_lcm(1);
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content = make_rational(num_gcd, den_lcm);
  if (p.leading() < 0) content = -content;
  Poly prim = p * (1 / content);
  return {content, std::move(prim)};
}

Poly primitive_part(const Poly& p) { return content_split(p).primitive; }

std::vector<Integer> integer_coefficients(const Poly& p) {
  std::vector<Integer> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (c.get_den() != 1) throw DomainError("integer_coefficients: non-integral coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw DomainError("interpolate: size mismatch");
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  Poly result;
  for (std::size_t i = n; i-- > 0;) {
    result *= Poly{-xs[i], Rational(1)};
    result += Poly::constant(dd[i]);
  }
  return result;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace bssrw
