#pragma once

#include <vector>

#include "bssrw/exact/interval.hpp"
#include "bssrw/exact/poly.hpp"

namespace bssrw {

class SturmSequence {
 public:
  explicit SturmSequence(const Poly& p);

  // Number of sign variations of the sequence at x.
  int variations(const Rational& x) const;
  // Distinct real roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  // Distinct real roots in the closed interval [a, b].
  int count_closed(const Rational& a, const Rational& b) const;
  const std::vector<Poly>& polys() const noexcept { return seq_; }

 private:
  std::vector<Poly> seq_;
};

// Bound B such that every real root of p lies in (-B, B); a power of two.
Rational root_bound(const Poly& p);

// Isolating intervals for the distinct real roots of p in range, sorted. Each
// interval contains exactly one root and no root sits on an endpoint; a root
// lying on a range endpoint gets a small interval that may poke outside range.
std::vector<DyadicInterval> sturm_isolate(const Poly& p, const DyadicInterval& range);
// All real roots.
std::vector<DyadicInterval> sturm_isolate(const Poly& p);

// Shrinks an isolating interval of a root of p to width <= width. Requires the
// squarefree part of p to change sign across iv.
DyadicInterval refine_root(const Poly& p, const DyadicInterval& iv, const Rational& width);

// Exactly the rational roots of p, ascending, each verified by p(r) = 0.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace bssrw
