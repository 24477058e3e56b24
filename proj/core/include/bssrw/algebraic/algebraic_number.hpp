#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bssrw/exact/interval.hpp"
#include "bssrw/exact/poly.hpp"

namespace bssrw {

namespace detail {
struct Node;
}

enum class Sign { negative = -1, zero = 0, positive = 1 };

// A real algebraic number held as an expression DAG over rationals, real
// radicals and isolated polynomial roots. Every query (sign, comparison,
// minimal polynomial) is exact; enclosures are only used to select roots.
class AlgebraicNumber {
 public:
  AlgebraicNumber();
  AlgebraicNumber(const Rational& value);  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(long value);             // NOLINT(google-explicit-constructor)
  AlgebraicNumber(int value) : AlgebraicNumber(static_cast<long>(value)) {}  // NOLINT

  // The unique real root of p inside the closed interval. Throws DomainError
  // if the interval does not contain exactly one distinct root.
  static AlgebraicNumber root_of(const Poly& p, const DyadicInterval& bracket);
  // Same as above, with p known to be irreducible over Q.
  static AlgebraicNumber root_of_irreducible(const Poly& p, const DyadicInterval& bracket);
  // The unique root in [lo, hi] of sum coeffs[i] * T^i, whose value must change
  // sign across the bracket and have no other root inside it.
  static AlgebraicNumber root_of(const std::vector<AlgebraicNumber>& coeffs,
                                 const DyadicInterval& bracket);

  // Real d-th root. Throws NegativeRadicand for even d and negative values.
  AlgebraicNumber nth_root(unsigned d) const;

  Sign sign() const;
  int compare(const AlgebraicNumber& other) const;

  // Primitive integral minimal polynomial with positive leading coefficient.
  const Poly& minpoly() const;
  int degree() const { return minpoly().degree(); }
  // Isolating interval of this value among the roots of minpoly().
  DyadicInterval isolator() const;
  // Enclosure of width at most 2^-bits.
  Interval enclose(unsigned bits) const;

  // Only when the value is syntactically a rational leaf (no computation).
  std::optional<Rational> as_rational_leaf() const;
  // Exact: the value as a rational if it is one.
  std::optional<Rational> to_rational() const;
  bool is_rational() const { return to_rational().has_value(); }

  // "p/q" for rationals, otherwise "0.7548776662... (minpoly: x^3+x^2-1)".
  std::string display(int digits = 12) const;
  // Truncated decimal expansion of the value.
  std::string decimal(int digits = 12) const;
  // Expression form, e.g. "(1/2)^(1/3)" or "root(x^3+x^2-1, [1/2, 1])".
  std::string expression() const;

  const std::shared_ptr<const detail::Node>& node() const noexcept { return node_; }
  explicit AlgebraicNumber(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a);

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.compare(b) == 0;
  }
  friend std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.compare(b) <=> 0;
  }

 private:
  std::shared_ptr<const detail::Node> node_;
};

enum class ArithOp { add, sub, mul, div };

AlgebraicNumber alg_arith(ArithOp op, const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber alg_root(const AlgebraicNumber& a, unsigned d);
Sign alg_sign(const AlgebraicNumber& a);
Poly minpoly_of(const AlgebraicNumber& a);

AlgebraicNumber pow(const AlgebraicNumber& base, unsigned exponent);
// p evaluated at x by Horner's rule.
AlgebraicNumber evaluate(const Poly& p, const AlgebraicNumber& x);

}  // namespace bssrw
