#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bssrw/exact/rational.hpp"

namespace bssrw {

// Dense univariate polynomial over Q. Coefficient i multiplies T^i; the zero
// polynomial is the empty sequence and has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, unsigned k);
  static Poly x() { return monomial(Rational(1), 1); }
  static Poly from_integers(std::initializer_list<long> coefficients);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::span<const Rational> coefficients() const noexcept { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const;
  const Rational& constant_term() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  Poly derivative() const;
  Poly compose(const Poly& inner) const;
  // p(T^d).
  Poly substitute_power(unsigned d) const;
  // p(s*T).
  Poly scale_variable(const Rational& s) const;
  // p(T + s).
  Poly shift(const Rational& s) const;
  // T^deg * p(1/T).
  Poly reversal() const;
  Poly monic() const;
  Poly pow(unsigned e) const;

  // Coefficient-wise predicates.
  bool has_integer_coefficients() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;
  // Orders by degree, then coefficients from the top; used for canonical factor lists.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder with deg(remainder) < deg(divisor).
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// True iff divisor divides dividend exactly over Q.
bool divides(const Poly& divisor, const Poly& dividend);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtendedGcd {
  Poly gcd, s, t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);
// Yun's decomposition: p = lc * prod(factors[i]^(i+1)), each factor monic and squarefree.
std::vector<Poly> squarefree_decomposition(const Poly& p);

// Res(a, b) over Q.
Rational resultant(const Poly& a, const Poly& b);

// Content c with p = c * primitive, primitive integral with coprime coefficients
// and positive leading coefficient.
struct ContentSplit {
  Rational content;
  Poly primitive;
};
ContentSplit content_split(const Poly& p);
Poly primitive_part(const Poly& p);
// Integer coefficients of a polynomial known to be integral.
std::vector<Integer> integer_coefficients(const Poly& p);

// Newton interpolation through (xs[i], ys[i]).
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

// Compact rendering in the text grammar, e.g. "x^3+x^2-1", "1/2*x^2+1/2*x".
std::string to_string(const Poly& p, const std::string& var = "x");

}  // namespace bssrw
