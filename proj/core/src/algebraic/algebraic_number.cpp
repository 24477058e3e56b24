#include "bssrw/algebraic/algebraic_number.hpp"

#include "algebraic/node.hpp"
#include "bssrw/algebraic/number_field.hpp"
#include "bssrw/error.hpp"
#include "bssrw/exact/roots.hpp"

namespace bssrw {

using detail::Node;
using detail::NodePtr;
using detail::Op;

namespace {

const Rational* leaf(const AlgebraicNumber& a) {
  return a.node()->op == Op::rational ? &a.node()->value : nullptr;
}

bool leaf_is(const AlgebraicNumber& a, long v) {
  const Rational* r = leaf(a);
  return r != nullptr && *r == v;
}

Rational grid_unit(unsigned bits) {
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return Rational(Integer(1), den);
}

void fill_minpoly(const Node& n) {
  std::call_once(n.minpoly_once, [&] {
    const AlgebraicNumber self(n.shared_from_this());
    Poly mp;
    if (n.op == Op::rational) {
      mp = content_split(Poly{-n.value, Rational(1)}).primitive;
    } else {
      auto field = field_containing(self);
      auto rep = field->represent(n);
      if (!rep) throw Error("value is not representable in its own field");
      mp = field->element_minpoly(*rep);
    }
    DyadicInterval iso;
    if (mp.degree() == 1) {
      const Rational r = -mp.coeff(0) / mp.coeff(1);
      const Rational u = grid_unit(32);
      iso = DyadicInterval(round_down(r, 32) - u, round_up(r, 32) + u);
    } else {
      iso = locate_root(mp, [&](unsigned bits) { return detail::enclose(n, bits); });
    }
    n.minpoly = std::move(mp);
    n.isolator = iso;
  });
}

AlgebraicNumber make(NodePtr n) { return AlgebraicNumber(std::move(n)); }

}  // namespace

AlgebraicNumber::AlgebraicNumber() : node_(detail::make_rational_node(Rational(0))) {}
AlgebraicNumber::AlgebraicNumber(const Rational& value) : node_(detail::make_rational_node(value)) {}
AlgebraicNumber::AlgebraicNumber(long value) : node_(detail::make_rational_node(Rational(value))) {}

AlgebraicNumber AlgebraicNumber::root_of(const Poly& p, const DyadicInterval& bracket) {
  if (p.is_zero()) throw ZeroPolynomialError("root_of");
  const Poly sq = content_split(squarefree_part(p)).primitive;
  if (SturmSequence(sq).count_closed(bracket.lo(), bracket.hi()) != 1)
    throw DomainError("bracket " + to_string(bracket) + " does not isolate a single root of " +
                      to_string(p));
  if (sq(bracket.lo()) == 0) return AlgebraicNumber(bracket.lo());
  if (sq(bracket.hi()) == 0) return AlgebraicNumber(bracket.hi());
  if (sq.degree() == 1) return AlgebraicNumber(Rational(-sq.coeff(0) / sq.coeff(1)));
  return make(detail::make_root_of_poly_node(sq, bracket, false));
}

AlgebraicNumber AlgebraicNumber::root_of_irreducible(const Poly& p, const DyadicInterval& bracket) {
  if (p.degree() == 1) return AlgebraicNumber(Rational(-p.coeff(0) / p.coeff(1)));
  if (p.degree() < 1) throw DomainError("constant polynomial has no roots");
  if (bssrw::sign(p(bracket.lo())) == 0 || bssrw::sign(p(bracket.hi())) == 0 ||
      bssrw::sign(p(bracket.lo())) == bssrw::sign(p(bracket.hi())))
    throw DomainError("bracket does not isolate a root of an irreducible polynomial");
  return make(detail::make_root_of_poly_node(p, bracket, true));
}

AlgebraicNumber AlgebraicNumber::root_of(const std::vector<AlgebraicNumber>& coeffs,
                                         const DyadicInterval& bracket) {
  bool all_rational = true;
  for (const auto& c : coeffs) all_rational = all_rational && leaf(c) != nullptr;
  if (all_rational) {
    std::vector<Rational> cs;
    for (const auto& c : coeffs) cs.push_back(*leaf(c));
    return root_of(Poly(cs), bracket);
  }
  auto value_at = [&](const Rational& t) {
    AlgebraicNumber acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * AlgebraicNumber(t) + *it;
    return acc;
  };
  const Sign slo = value_at(bracket.lo()).sign();
  if (slo == Sign::zero) return AlgebraicNumber(bracket.lo());
  const Sign shi = value_at(bracket.hi()).sign();
  if (shi == Sign::zero) return AlgebraicNumber(bracket.hi());
  if (slo == shi) throw DomainError("defining polynomial does not change sign across the bracket");
  std::vector<NodePtr> nodes;
  for (const auto& c : coeffs) nodes.push_back(c.node());
  return make(detail::make_root_of_alg_node(std::move(nodes), bracket.lo(), bracket.hi()));
}

AlgebraicNumber AlgebraicNumber::nth_root(unsigned d) const {
  if (d == 0) throw DomainError("root index must be positive");
  if (d == 1) return *this;
  if (const Rational* v = leaf(*this)) {
    if (*v < 0 && d % 2 == 0) throw NegativeRadicand(d);
    Rational r;
    if (exact_root(*v, d, r)) return AlgebraicNumber(r);
    return make(detail::make_root_node(node_, d));
  }
  const Sign s = sign();
  if (s == Sign::zero) return AlgebraicNumber();
  if (s == Sign::negative && d % 2 == 0) throw NegativeRadicand(d);
  return make(detail::make_root_node(node_, d));
}

Sign AlgebraicNumber::sign() const { return alg_sign(*this); }

int AlgebraicNumber::compare(const AlgebraicNumber& other) const {
  const Rational* a = leaf(*this);
  const Rational* b = leaf(other);
  if (a && b) return cmp(*a, *b) < 0 ? -1 : (*a == *b ? 0 : 1);
  if (node_ == other.node_) return 0;
  for (unsigned bits : {32u, 64u}) {
    auto ea = detail::try_enclose(*node_, bits);
    auto eb = detail::try_enclose(*other.node_, bits);
    if (ea && eb) {
      if (ea->hi < eb->lo) return -1;
      if (eb->hi < ea->lo) return 1;
    }
  }
  return static_cast<int>(alg_sign(*this - other));
}

const Poly& AlgebraicNumber::minpoly() const {
  fill_minpoly(*node_);
  return node_->minpoly;
}

DyadicInterval AlgebraicNumber::isolator() const {
  fill_minpoly(*node_);
  return node_->isolator;
}

Interval AlgebraicNumber::enclose(unsigned bits) const { return detail::enclose(*node_, bits); }

std::optional<Rational> AlgebraicNumber::as_rational_leaf() const {
  if (const Rational* v = leaf(*this)) return *v;
  return std::nullopt;
}

std::optional<Rational> AlgebraicNumber::to_rational() const {
  if (const Rational* v = leaf(*this)) return *v;
  const Poly& mp = minpoly();
  if (mp.degree() != 1) return std::nullopt;
  return Rational(-mp.coeff(0) / mp.coeff(1));
}

std::string AlgebraicNumber::decimal(int digits) const {
  if (auto r = to_rational()) return to_decimal(*r, digits);
  unsigned bits = static_cast<unsigned>(digits) * 4 + 16;
  for (int attempt = 0; attempt < 32; ++attempt, bits *= 2) {
    const Interval e = enclose(bits);
    std::string lo = to_decimal(e.lo, digits), hi = to_decimal(e.hi, digits);
    if (lo == hi) return lo;
  }
  throw Error("decimal expansion did not stabilise");
}

std::string AlgebraicNumber::display(int digits) const {
  if (auto r = to_rational()) return to_string(*r);
  return decimal(digits) + "… (minpoly: " + to_string(minpoly()) + ")";
}

namespace {

std::string render(const Node& n) {
  auto paren = [](const Node& c) {
    std::string s = render(c);
    if (c.op == Op::rational && (s.find('/') != std::string::npos || s.front() == '-')) return "(" + s + ")";
    if (c.op == Op::add || c.op == Op::sub || c.op == Op::mul || c.op == Op::div) return "(" + s + ")";
    return s;
  };
  switch (n.op) {
    case Op::rational: return to_string(n.value);
    case Op::add: return render(*n.lhs) + " + " + render(*n.rhs);
    case Op::sub: return render(*n.lhs) + " - " + paren(*n.rhs);
    case Op::mul: return paren(*n.lhs) + "*" + paren(*n.rhs);
    case Op::div: return paren(*n.lhs) + "/" + paren(*n.rhs);
    case Op::root: return paren(*n.lhs) + "^(1/" + std::to_string(n.index) + ")";
    case Op::root_of_poly:
      return "root(" + to_string(n.poly) + ", [" + to_string(n.lo) + ", " + to_string(n.hi) + "])";
    case Op::root_of_alg: {
      std::string s = "root([";
      for (std::size_t i = 0; i < n.coeffs.size(); ++i) s += (i ? ", " : "") + render(*n.coeffs[i]);
      return s + "], [" + to_string(n.lo) + ", " + to_string(n.hi) + "])";
    }
  }
  return {};
}

}  // namespace

std::string AlgebraicNumber::expression() const { return render(*node_); }

AlgebraicNumber alg_arith(ArithOp op, const AlgebraicNumber& a, const AlgebraicNumber& b) {
  const Rational* la = leaf(a);
  const Rational* lb = leaf(b);
  switch (op) {
    case ArithOp::add:
      if (la && lb) return AlgebraicNumber(Rational(*la + *lb));
      if (leaf_is(a, 0)) return b;
      if (leaf_is(b, 0)) return a;
      return make(detail::make_binary_node(Op::add, a.node(), b.node()));
    case ArithOp::sub:
      if (la && lb) return AlgebraicNumber(Rational(*la - *lb));
      if (leaf_is(b, 0)) return a;
      if (a.node() == b.node()) return AlgebraicNumber();
      return make(detail::make_binary_node(Op::sub, a.node(), b.node()));
    case ArithOp::mul:
      if (la && lb) return AlgebraicNumber(Rational(*la * *lb));
      if (leaf_is(a, 0) || leaf_is(b, 0)) return AlgebraicNumber();
      if (leaf_is(a, 1)) return b;
      if (leaf_is(b, 1)) return a;
      return make(detail::make_binary_node(Op::mul, a.node(), b.node()));
    case ArithOp::div:
      if (lb) {
        if (*lb == 0) throw DivisionByZero();
        if (la) return AlgebraicNumber(Rational(*la / *lb));
        if (*lb == 1) return a;
      } else if (alg_sign(b) == Sign::zero) {
        throw DivisionByZero();
      }
      if (leaf_is(a, 0)) return AlgebraicNumber();
      if (a.node() == b.node()) return AlgebraicNumber(1L);
      return make(detail::make_binary_node(Op::div, a.node(), b.node()));
  }
  return {};
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_arith(ArithOp::add, a, b);
}
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_arith(ArithOp::sub, a, b);
}
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_arith(ArithOp::mul, a, b);
}
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_arith(ArithOp::div, a, b);
}
AlgebraicNumber operator-(const AlgebraicNumber& a) {
  if (const Rational* v = leaf(a)) return AlgebraicNumber(Rational(-*v));
  return alg_arith(ArithOp::sub, AlgebraicNumber(), a);
}

AlgebraicNumber alg_root(const AlgebraicNumber& a, unsigned d) { return a.nth_root(d); }

Sign alg_sign(const AlgebraicNumber& a) {
  if (const Rational* v = leaf(a)) return static_cast<Sign>(sign(*v));
  const Node& n = *a.node();
  for (unsigned bits : {32u, 64u, 128u}) {
    auto e = detail::try_enclose(n, bits);
    if (e && e->certain_sign() != 0) return static_cast<Sign>(e->certain_sign());
  }
  if (auto r = a.to_rational()) return static_cast<Sign>(sign(*r));
  for (unsigned bits = 256;; bits *= 2) {
    const Interval e = detail::enclose(n, bits);
    if (e.certain_sign() != 0) return static_cast<Sign>(e.certain_sign());
  }
}

Poly minpoly_of(const AlgebraicNumber& a) { return a.minpoly(); }

AlgebraicNumber pow(const AlgebraicNumber& base, unsigned exponent) {
  AlgebraicNumber result(1L), b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

AlgebraicNumber evaluate(const Poly& p, const AlgebraicNumber& x) {
  AlgebraicNumber acc;
  const auto cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + AlgebraicNumber(*it);
  return acc;
}

}  // namespace bssrw
