#include "bssrw/exact/interval.hpp"

#include <algorithm>

#include "bssrw/error.hpp"

namespace bssrw {

DyadicInterval::DyadicInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!is_dyadic(lo_) || !is_dyadic(hi_)) {
    throw DomainError("dyadic interval endpoints must have power-of-two denominators");
  }
  if (lo_ > hi_) throw DomainError("dyadic interval with lo > hi");
}

DyadicInterval DyadicInterval::enclosing(const Rational& lo, const Rational& hi, unsigned bits) {
  return DyadicInterval(round_down(lo, bits), round_up(hi, bits));
}

std::pair<DyadicInterval, DyadicInterval> DyadicInterval::halves() const {
  Rational m = midpoint();
  return {DyadicInterval(lo_, m), DyadicInterval(m, hi_)};
}

int Interval::certain_sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return 0;
}

Interval Interval::rounded(unsigned bits) const { return {round_down(lo, bits), round_up(hi, bits)}; }

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

std::optional<Interval> divide(const Interval& a, const Interval& b) {
  if (b.contains_zero()) return std::nullopt;
  Interval inv{1 / b.hi, 1 / b.lo};
  return a * inv;
}

Interval pow(const Interval& a, unsigned e) {
  if (e == 0) return Interval::point(Rational(1));
  Rational plo = pow(a.lo, e), phi = pow(a.hi, e);
  if (e % 2 == 1 || a.lo >= 0) return {std::min(plo, phi), std::max(plo, phi)};
  if (a.hi <= 0) return {phi, plo};
  return {Rational(0), std::max(plo, phi)};
}

std::string to_string(const DyadicInterval& iv) {
  return "[" + to_string(iv.lo()) + ", " + to_string(iv.hi()) + "]";
}

}  // namespace bssrw
