#include <algorithm>

#include "bssrw/cake/fairness.hpp"
#include "bssrw/error.hpp"
#include "bssrw/exact/roots.hpp"

namespace bssrw {

namespace {

// Roots of p strictly inside (0,1), rational ones as exact rationals.
void collect_unit_roots(const Poly& p, std::vector<AlgebraicNumber>& out) {
  if (p.is_zero() || p.degree() < 1) return;
  Poly rest = squarefree_part(p);
  for (const Rational& r : rational_roots(rest)) {
    rest = rest / Poly{-r, Rational(1)};
    if (r > 0 && r < 1) out.emplace_back(r);
  }
  if (rest.degree() < 1) return;
  for (const auto& iv : sturm_isolate(rest, DyadicInterval(Rational(0), Rational(1)))) {
    if (iv.hi() <= 0 || iv.lo() >= 1) continue;
    out.push_back(AlgebraicNumber::root_of(rest, iv));
  }
}

// A rational strictly between a < b.
Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  for (unsigned bits = 16;; bits *= 2) {
    const Interval ea = a.enclose(bits), eb = b.enclose(bits);
    if (ea.hi < eb.lo) {
      const Rational margin = (eb.lo - ea.hi) / 4;
      return simplest_between(ea.hi + margin, eb.lo - margin);
    }
  }
}

}  // namespace

Allocation max_welfare(const std::vector<Measure>& measures) {
  const std::size_t n = measures.size();
  if (n == 0) throw DomainError("max_welfare needs at least one measure");

  std::vector<AlgebraicNumber> points;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) collect_unit_roots(measures[i].density() - measures[j].density(), points);
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.compare(b) < 0; });
  points.erase(std::unique(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.compare(b) == 0; }),
               points.end());
  points.insert(points.begin(), AlgebraicNumber(0L));
  points.emplace_back(1L);

  Allocation alloc;
  alloc.pieces.resize(n);
  std::optional<std::size_t> last_owner;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const Rational t = rational_between(points[k], points[k + 1]);
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (measures[i].density()(t) > measures[best].density()(t)) best = i;
    if (last_owner == best) {
      alloc.pieces[best].back().hi = points[k + 1];
    } else {
      alloc.pieces[best].push_back({points[k], points[k + 1]});
    }
    last_owner = best;
  }
  return alloc;
}

}  // namespace bssrw
