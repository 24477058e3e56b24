#include "bssrw/cake/allocation.hpp"

#include <algorithm>

#include "bssrw/error.hpp"

namespace bssrw {

std::vector<AlgebraicNumber> Allocation::cutpoints() const {
  std::vector<AlgebraicNumber> pts;
  for (const auto& share : pieces)
    for (const auto& p : share)
      for (const auto* e : {&p.lo, &p.hi})
        if (e->sign() == Sign::positive && e->compare(AlgebraicNumber(1L)) < 0) pts.push_back(*e);
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.compare(b) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.compare(b) == 0; }),
            pts.end());
  return pts;
}

void Allocation::validate() const {
  std::vector<const Piece*> all;
  for (const auto& share : pieces)
    for (const auto& p : share) {
      if (p.lo.compare(p.hi) > 0) throw DomainError("piece with lo > hi: [" + p.lo.display() + ", " + p.hi.display() + "]");
      if (p.lo.compare(p.hi) < 0) all.push_back(&p);
    }
  std::sort(all.begin(), all.end(), [](const Piece* a, const Piece* b) { return a->lo.compare(b->lo) < 0; });
  AlgebraicNumber at(0L);
  for (const Piece* p : all) {
    const int c = p->lo.compare(at);
    if (c > 0) throw DomainError("gap in allocation before " + p->lo.display());
    if (c < 0) throw DomainError("overlapping pieces at " + p->lo.display());
    at = p->hi;
  }
  if (at.compare(AlgebraicNumber(1L)) != 0) throw DomainError("allocation does not reach 1");
}

AlgebraicNumber share_value(const Measure& m, const std::vector<Piece>& share) {
  AlgebraicNumber total;
  for (const auto& p : share) total = total + m.value(p.lo, p.hi);
  return total;
}

std::string describe(const Allocation& alloc, const std::vector<Measure>& measures, int digits) {
  std::string out;
  for (std::size_t i = 0; i < alloc.players(); ++i) {
    out += measures.at(i).label() + ":";
    if (alloc.pieces[i].empty()) out += " (nothing)";
    for (const auto& p : alloc.pieces[i]) out += " [" + p.lo.display(digits) + ", " + p.hi.display(digits) + "]";
    out += " value=" + share_value(measures[i], alloc.pieces[i]).display(digits) + "\n";
  }
  return out;
}

}  // namespace bssrw
