#pragma once

#include <optional>
#include <string>

#include "bssrw/exact/rational.hpp"

namespace bssrw {

// Closed interval with power-of-two denominators at both ends. Used for root
// isolation: halving never grows denominators beyond one extra bit.
class DyadicInterval {
 public:
  DyadicInterval() = default;
  DyadicInterval(Rational lo, Rational hi);
  // Smallest interval on the 2^-bits grid containing [lo, hi].
  static DyadicInterval enclosing(const Rational& lo, const Rational& hi, unsigned bits = 0);

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  std::pair<DyadicInterval, DyadicInterval> halves() const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

// General closed rational interval used for numeric enclosures.
struct Interval {
  Rational lo{0};
  Rational hi{0};

  static Interval point(const Rational& x) { return {x, x}; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  // Sign of every point of the interval, or 0 when it straddles/touches zero.
  int certain_sign() const;
  // Rounds outward to the 2^-bits grid.
  Interval rounded(unsigned bits) const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// nullopt when the divisor interval contains zero.
std::optional<Interval> divide(const Interval& a, const Interval& b);
Interval pow(const Interval& a, unsigned e);

std::string to_string(const DyadicInterval& iv);

}  // namespace bssrw
