#include <gmp.h>

#include "algebraic/node.hpp"
#include "bssrw/error.hpp"
#include "bssrw/exact/roots.hpp"

namespace bssrw::detail {

namespace {

Rational grid_unit(unsigned bits) {
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return Rational(Integer(1), den);
}

// floor(n^(1/d)) for n >= 0.
Integer floor_root(const Integer& n, unsigned d) {
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), d);
  return r;
}

Rational scaled(const Rational& q, unsigned d, unsigned bits) {
  Integer s = 1;
  mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), static_cast<mp_bitcnt_t>(bits) * d);
  return q * Rational(s);
}

// Dyadic lower/upper bounds of q^(1/d) for q >= 0 on the 2^-bits grid.
Rational root_lower(const Rational& q, unsigned d, unsigned bits) {
  Integer k = floor_root(floor(scaled(q, d, bits)), d);
  return Rational(k) * grid_unit(bits);
}

Rational root_upper(const Rational& q, unsigned d, unsigned bits) {
  Integer n = ceil(scaled(q, d, bits));
  Integer k = floor_root(n, d);
  if (pow(k, d) < n) k += 1;
  return Rational(k) * grid_unit(bits);
}

Rational signed_root_lower(const Rational& q, unsigned d, unsigned bits) {
  return sign(q) >= 0 ? root_lower(q, d, bits) : Rational(-root_upper(-q, d, bits));
}

Rational signed_root_upper(const Rational& q, unsigned d, unsigned bits) {
  return sign(q) >= 0 ? root_upper(q, d, bits) : Rational(-root_lower(-q, d, bits));
}

std::optional<Interval> enclose_root(const Node& n, unsigned bits) {
  auto operand = try_enclose(*n.lhs, bits + 4);
  if (!operand) return std::nullopt;
  Interval x = *operand;
  if (n.index % 2 == 0) {
    if (x.hi < 0) throw NegativeRadicand(n.index);
    if (x.lo < 0) x.lo = 0;
  }
  Interval r{signed_root_lower(x.lo, n.index, bits + 2), signed_root_upper(x.hi, n.index, bits + 2)};
  if (r.width() > grid_unit(bits)) {
    // Near zero the root map is only Hölder continuous; ask for a sharper operand.
    operand = try_enclose(*n.lhs, bits * n.index + 4);
    if (!operand) return r;
    x = *operand;
    if (n.index % 2 == 0 && x.lo < 0) x.lo = 0;
    r = {signed_root_lower(x.lo, n.index, bits + 2), signed_root_upper(x.hi, n.index, bits + 2)};
  }
  return r;
}

// Sign of sum coeffs[i] t^i from coefficient enclosures at precision prec; 0 if undecided.
int alg_poly_sign(const Node& n, const Rational& t, unsigned prec) {
  Interval acc = Interval::point(Rational(0));
  Interval tt = Interval::point(t);
  for (auto it = n.coeffs.rbegin(); it != n.coeffs.rend(); ++it) {
    auto c = try_enclose(**it, prec);
    if (!c) return 0;
    acc = (acc * tt + *c).rounded(prec + 4);
  }
  return acc.certain_sign();
}

int alg_poly_sign_escalating(const Node& n, const Rational& t, unsigned prec) {
  for (unsigned p = prec; p < 1u << 16; p *= 2) {
    int s = alg_poly_sign(n, t, p);
    if (s != 0) return s;
  }
  throw Error("could not decide the sign of a defining polynomial at a bracket end");
}

Interval enclose_root_of_alg(const Node& n, Interval current, unsigned bits) {
  const Rational target = grid_unit(bits);
  Rational a = current.lo, b = current.hi;
  int sa = alg_poly_sign_escalating(n, a, bits + 8);
  unsigned prec = bits + 8;
  while (b - a > target) {
    Rational w = b - a;
    const Rational candidates[] = {a + w / 2, a + w * Rational(3, 8), a + w * Rational(5, 8)};
    bool moved = false;
    for (const auto& t : candidates) {
      int s = alg_poly_sign(n, t, prec);
      if (s == 0) continue;
      if (s == sa) a = t;
      else b = t;
      moved = true;
      break;
    }
    if (!moved) prec *= 2;
  }
  return {a, b};
}

}  // namespace

std::optional<Interval> try_enclose(const Node& n, unsigned bits) {
  if (n.op == Op::rational) return Interval::point(n.value);

  std::lock_guard lock(n.enclosure_mutex);
  if (n.enclosure && n.enclosure_bits >= bits) return n.enclosure;

  std::optional<Interval> result;
  switch (n.op) {
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div: {
      auto l = try_enclose(*n.lhs, bits + 2);
      auto r = try_enclose(*n.rhs, bits + 2);
      if (!l || !r) return std::nullopt;
      if (n.op == Op::add) result = *l + *r;
      else if (n.op == Op::sub) result = *l - *r;
      else if (n.op == Op::mul) result = *l * *r;
      else result = divide(*l, *r);
      if (!result) return std::nullopt;
      result = result->rounded(bits + 2);
      break;
    }
    case Op::root:
      result = enclose_root(n, bits);
      if (!result) return std::nullopt;
      break;
    case Op::root_of_poly: {
      DyadicInterval iv(n.enclosure->lo, n.enclosure->hi);
      if (iv.width() > grid_unit(bits)) iv = refine_root(n.poly, iv, grid_unit(bits));
      result = Interval{iv.lo(), iv.hi()};
      break;
    }
    case Op::root_of_alg:
      result = enclose_root_of_alg(n, *n.enclosure, bits);
      break;
    case Op::rational:
      break;
  }
  n.enclosure = result;
  n.enclosure_bits = bits;
  return result;
}

Interval enclose(const Node& n, unsigned bits) {
  const Rational target = grid_unit(bits);
  unsigned p = bits;
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto r = try_enclose(n, p);
    if (r && r->width() <= target) return *r;
    p += std::max(8u, p / 2);
  }
  throw Error("enclosure did not converge (value may be undefined)");
}

}  // namespace bssrw::detail
