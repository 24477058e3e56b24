#include "bssrw/exact/roots.hpp"

#include <algorithm>

#include "bssrw/error.hpp"

namespace bssrw {

SturmSequence::SturmSequence(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("sturm sequence");
  seq_.push_back(primitive_part(p));
  Poly d = p.derivative();
  if (d.is_zero()) return;
  seq_.push_back(primitive_part(d));
  while (true) {
    Poly r = seq_[seq_.size() - 2] % seq_.back();
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern; the remainder enters negated.
    auto [content, prim] = content_split(-r);
    seq_.push_back(content > 0 ? prim : -prim);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& q : seq_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  if (a >= b) return 0;
  return variations(a) - variations(b);
}

int SturmSequence::count_closed(const Rational& a, const Rational& b) const {
  int n = count(a, b);
  if (seq_.front().sign_at(a) == 0) ++n;
  return n;
}

Rational root_bound(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("root_bound");
  Rational lc = abs(p.leading());
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i)) / lc));
  Rational bound = 1 + m;
  Rational pow2(1);
  while (pow2 <= bound) pow2 *= 2;
  return pow2;
}

namespace {

// Closed interval [c - delta, c + delta] isolating the root c of sq.
DyadicInterval isolate_point(const Poly& sq, const SturmSequence& sturm, const Rational& c,
                             Rational delta) {
  while (true) {
    Rational lo = c - delta, hi = c + delta;
    if (sq.sign_at(lo) != 0 && sq.sign_at(hi) != 0 && sturm.count(lo, hi) == 1) {
      return DyadicInterval(lo, hi);
    }
    delta /= 2;
  }
}

void bisect(const Poly& sq, const SturmSequence& sturm, const Rational& a, const Rational& b,
            std::vector<DyadicInterval>& out) {
  // Invariant: sq(a) != 0; counts roots in (a, b].
  int n = sturm.count(a, b);
  if (n == 0) return;
  if (n == 1) {
    if (sq.sign_at(b) != 0) {
      out.emplace_back(a, b);
      return;
    }
    out.push_back(isolate_point(sq, sturm, b, (b - a) / 2));
    return;
  }
  Rational m = (a + b) / 2;
  if (sq.sign_at(m) == 0) {
    DyadicInterval around = isolate_point(sq, sturm, m, (b - a) / 4);
    bisect(sq, sturm, a, around.lo(), out);
    out.push_back(around);
    bisect(sq, sturm, around.hi(), b, out);
    return;
  }
  bisect(sq, sturm, a, m, out);
  bisect(sq, sturm, m, b, out);
}

}  // namespace

std::vector<DyadicInterval> sturm_isolate(const Poly& p, const DyadicInterval& range) {
  if (p.is_zero()) throw ZeroPolynomialError("sturm_isolate");
  std::vector<DyadicInterval> out;
  if (p.degree() == 0) return out;
  Poly sq = primitive_part(squarefree_part(p));
  SturmSequence sturm(sq);
  Rational a = range.lo();
  const Rational& b = range.hi();
  if (a == b) {
    if (sq.sign_at(a) == 0) out.push_back(isolate_point(sq, sturm, a, Rational(1)));
    return out;
  }
  if (sq.sign_at(a) == 0) {
    DyadicInterval around = isolate_point(sq, sturm, a, (b - a) / 2);
    out.push_back(around);
    a = around.hi();
  }
  bisect(sq, sturm, a, b, out);
  return out;
}

std::vector<DyadicInterval> sturm_isolate(const Poly& p) {
  Rational bound = root_bound(p);
  return sturm_isolate(p, DyadicInterval(-bound, bound));
}

DyadicInterval refine_root(const Poly& p, const DyadicInterval& iv, const Rational& width) {
  if (p.is_zero()) throw ZeroPolynomialError("refine_root");
  if (width <= 0) throw DomainError("refine_root: width must be positive");
  Poly sq = primitive_part(squarefree_part(p));
  int slo = sq.sign_at(iv.lo()), shi = sq.sign_at(iv.hi());
  if (slo == 0 || shi == 0 || slo == shi) {
    throw DomainError("refine_root: interval " + to_string(iv) + " shows no sign change");
  }
  Rational lo = iv.lo(), hi = iv.hi();
  while (hi - lo > width) {
    Rational m = (lo + hi) / 2;
    int sm = sq.sign_at(m);
    if (sm == 0) {
      // Exact hit: centre a tiny interval on the root.
      Rational delta = std::min(Rational(width / 2), Rational((hi - lo) / 4));
      Rational pow2(1);
      while (pow2 > delta) pow2 /= 2;
      while (sq.sign_at(m - pow2) == 0 || sq.sign_at(m + pow2) == 0 ||
             sq.sign_at(m - pow2) == sq.sign_at(m + pow2)) {
        pow2 /= 2;
      }
      return DyadicInterval(m - pow2, m + pow2);
    }
    if (sm == slo) lo = m;
    else hi = m;
  }
  return DyadicInterval(lo, hi);
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("rational_roots");
  std::vector<Rational> out;
  if (p.degree() == 0) return out;
  Poly prim = primitive_part(squarefree_part(p));
  const Integer lc = abs(prim.leading()).get_num();
  // Distinct rationals with denominators <= lc are at least 1/lc^2 apart.
  Rational width = make_rational(Integer(1), Integer(2 * lc * lc));
  for (const auto& iv : sturm_isolate(prim)) {
    DyadicInterval tight = iv.width() <= width ? iv : refine_root(prim, iv, width);
    Rational candidate = simplest_between(tight.lo(), tight.hi());
    if (candidate.get_den() <= lc && prim(candidate) == 0) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bssrw
