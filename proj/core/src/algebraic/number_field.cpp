#include "bssrw/algebraic/number_field.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "algebraic/node.hpp"
#include "bssrw/error.hpp"
#include "bssrw/exact/factor.hpp"
#include "bssrw/exact/integer.hpp"
#include "bssrw/exact/roots.hpp"

namespace bssrw {

using detail::Node;
using detail::NodePtr;
using detail::Op;

namespace {

Rational grid_unit(unsigned bits) {
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return Rational(Integer(1), den);
}

Interval to_interval(const DyadicInterval& iv) { return {iv.lo(), iv.hi()}; }

Poly positive_primitive(const Poly& p) { return content_split(p).primitive; }

// Arithmetic in Q[z]/(m) used while building a new field.
struct Residues {
  const Poly& m;
  Poly reduce(const Poly& p) const { return p.degree() < m.degree() ? p : p % m; }
  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
  Poly inv(const Poly& a) const {
    if (a.is_zero()) throw DivisionByZero();
    auto e = extended_gcd(a, m);
    if (e.gcd.degree() != 0) throw Error("modulus is not irreducible");
    return reduce(e.s);
  }
};

using FieldPoly = std::vector<Poly>;  // coefficients in y, each an element of Q[z]/(m)

void trim(FieldPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FieldPoly field_rem(FieldPoly a, const FieldPoly& b, const Residues& f) {
  const Poly lead_inv = f.inv(b.back());
  trim(a);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Poly q = f.mul(a.back(), lead_inv);
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = f.reduce(a[j + shift] - q * b[j]);
    a.pop_back();
    trim(a);
  }
  return a;
}

FieldPoly field_gcd(FieldPoly a, FieldPoly b, const Residues& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FieldPoly r = field_rem(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// N(x) = Res_y(m(y), sum_i g_i(y) (x - c y)^i), by interpolation.
Poly trager_norm(const Poly& m, const std::vector<Poly>& g, const Rational& c) {
  const int n = static_cast<int>(g.size()) - 1;
  const int degree = m.degree() * n;
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= degree; ++k) {
    const Rational x(k);
    Poly lin{x, -c};
    Poly power = Poly::constant(Rational(1));
    Poly acc;
    for (int i = 0; i <= n; ++i) {
      if (i > 0) power = (power * lin) % m;
      acc += g[i] * power;
    }
    xs.push_back(x);
    ys.push_back(resultant(m, acc % m));
  }
  return interpolate(xs, ys);
}

// For real radicals a_i^(1/n_i) of rationals, Kneser's theorem gives
// [Q(radicals) : Q] = |Gamma / Q*| where Gamma is the multiplicative group they
// generate with Q*; no roots of unity other than -1 are real, so its side
// conditions hold. Writing |a_i| = prod p^e, the radical maps to e/n_i in
// (Q/Z)^primes, and the group order is N^k / det(M) for the lattice M spanned
// by the scaled generators and N Z^k, N = lcm(n_i). Radicands must be nonzero.
Integer radical_group_order(const std::vector<std::pair<Rational, unsigned>>& radicals) {
  std::vector<std::pair<std::vector<std::pair<Integer, Integer>>, unsigned>> gens;
  std::vector<Integer> primes;
  Integer big_n = 1;
  for (const auto& [r, index] : radicals) {
    std::vector<std::pair<Integer, Integer>> exps;
    for (const auto& [p, e] : factor_integer(r.get_num())) exps.emplace_back(p, Integer(e));
    for (const auto& [p, e] : factor_integer(r.get_den())) exps.emplace_back(p, -Integer(e));
    for (const auto& pe : exps) primes.push_back(pe.first);
    gens.emplace_back(std::move(exps), index);
    mpz_lcm_ui(big_n.get_mpz_t(), big_n.get_mpz_t(), index);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const std::size_t k = primes.size();
  if (k == 0) return Integer(1);

  std::vector<std::vector<Integer>> rows;
  for (const auto& [fs, n] : gens) {
    std::vector<Integer> row(k, Integer(0));
    const Integer scale = big_n / n;
    for (const auto& [p, e] : fs) {
      const auto at = std::lower_bound(primes.begin(), primes.end(), p) - primes.begin();
      row[static_cast<std::size_t>(at)] += scale * e;
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Integer> row(k, Integer(0));
    row[i] = big_n;
    rows.push_back(std::move(row));
  }

  // Integer row reduction to echelon form; the lattice has full rank k.
  Integer det = 1;
  std::size_t top = 0;
  for (std::size_t col = 0; col < k; ++col) {
    for (;;) {
      std::size_t pivot = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (pivot == rows.size() || abs(rows[r][col]) < abs(rows[pivot][col]))) pivot = r;
      std::swap(rows[top], rows[pivot]);
      bool cleared = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const Integer q = rows[r][col] / rows[top][col];
        for (std::size_t c = col; c < k; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    det *= abs(rows[top][col]);
    ++top;
  }
  Integer order;
  mpz_pow_ui(order.get_mpz_t(), big_n.get_mpz_t(), static_cast<unsigned long>(k));
  return Integer(order / det);
}

struct RadicalPower {
  Rational scale;
  std::vector<unsigned> exponents;
};

// Writes alpha^m, alpha = r^(1/n) real, as scale * prod base_i^(k_i) with
// rational scale, base_i = r_i^(1/n_i) real and 0 <= k_i < n_i. Searches the
// exponents exhaustively; nullopt if there are too many candidates or none.
std::optional<RadicalPower> radical_power_in_field(const std::vector<std::pair<Rational, unsigned>>& base,
                                                   const std::pair<Rational, unsigned>& alpha, unsigned m) {
  auto exponents_of = [](const Rational& r) {
    std::map<Integer, Integer> out;
    for (const auto& [p, e] : factor_integer(r.get_num())) out[p] += e;
    for (const auto& [p, e] : factor_integer(r.get_den())) out[p] -= e;
    return out;
  };
  std::map<Integer, Rational> target;  // m * e / n
  for (const auto& [p, e] : exponents_of(alpha.first)) target[p] = make_rational(Integer(e * m), Integer(alpha.second));
  std::vector<std::map<Integer, Integer>> base_exps;
  std::size_t combos = 1;
  for (const auto& [r, n] : base) {
    base_exps.push_back(exponents_of(r));
    combos *= n;
    if (combos > 200000) return std::nullopt;
  }

  std::vector<unsigned> k(base.size(), 0);
  for (std::size_t step = 0; step < combos; ++step) {
    std::map<Integer, Rational> sum = target;
    for (std::size_t i = 0; i < base.size(); ++i)
      for (const auto& [p, e] : base_exps[i]) sum[p] -= make_rational(Integer(e * k[i]), Integer(base[i].second));
    if (std::all_of(sum.begin(), sum.end(), [](const auto& pe) { return pe.second.get_den() == 1; })) {
      // scale^L = alpha^(m L) / prod base_i^(k_i L) for L a common multiple of the indices.
      unsigned long lcm = alpha.second;
      for (const auto& b : base) lcm = std::lcm(lcm, static_cast<unsigned long>(b.second));
      Rational power = pow(alpha.first, static_cast<unsigned>(m * lcm / alpha.second));
      int sign = (alpha.first < 0 && m % 2 == 1) ? -1 : 1;
      for (std::size_t i = 0; i < base.size(); ++i) {
        power /= pow(base[i].first, static_cast<unsigned>(k[i] * lcm / base[i].second));
        if (base[i].first < 0 && k[i] % 2 == 1) sign = -sign;
      }
      Rational scale;
      if (!exact_root(abs(power), static_cast<unsigned>(lcm), scale)) return std::nullopt;
      return RadicalPower{sign * scale, k};
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (++k[i] < base[i].second) break;
      k[i] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace

DyadicInterval locate_root(const Poly& p, const std::function<Interval(unsigned)>& enclose) {
  std::vector<DyadicInterval> roots = sturm_isolate(p);
  for (unsigned bits = 8; bits < (1u << 15); bits *= 2) {
    if (roots.size() == 1) return roots.front();
    if (roots.empty()) break;
    const Interval e = enclose(bits);
    std::erase_if(roots, [&](const DyadicInterval& iv) { return !to_interval(iv).overlaps(e); });
    if (roots.size() == 1) return roots.front();
    for (auto& iv : roots) iv = refine_root(p, iv, grid_unit(bits));
  }
  throw Error("numeric root selection failed");
}

std::pair<Poly, DyadicInterval> select_factor(const Poly& p,
                                              const std::function<Interval(unsigned)>& enclose) {
  const Poly sq = positive_primitive(squarefree_part(p));
  std::vector<Poly> candidates;
  if (quick_irreducibility(sq) != IrreducibilityCertificate::none) {
    candidates.push_back(sq);
  } else {
    for (const auto& t : factor_over_q(sq).terms) candidates.push_back(t.factor);
  }
  struct Candidate {
    std::size_t factor;
    DyadicInterval iv;
  };
  std::vector<Candidate> roots;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (const auto& iv : sturm_isolate(candidates[i])) roots.push_back({i, iv});
  for (unsigned bits = 8; bits < (1u << 15); bits *= 2) {
    if (roots.size() == 1) return {candidates[roots[0].factor], roots[0].iv};
    if (roots.empty()) break;
    const Interval e = enclose(bits);
    std::erase_if(roots, [&](const Candidate& c) { return !to_interval(c.iv).overlaps(e); });
    if (roots.size() == 1) return {candidates[roots[0].factor], roots[0].iv};
    for (auto& c : roots) c.iv = refine_root(candidates[c.factor], c.iv, grid_unit(bits));
  }
  throw Error("numeric factor selection failed");
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const std::shared_ptr<const NumberField> q = [] {
    std::shared_ptr<NumberField> f(new NumberField());
    f->modulus_ = Poly::x();
    f->theta_ = AlgebraicNumber(0L);
    return f;
  }();
  return q;
}

NumberField::Element NumberField::reduce(const Poly& p) const { return Residues{modulus_}.reduce(p); }

NumberField::Element NumberField::multiply(const Element& a, const Element& b) const {
  return Residues{modulus_}.mul(a, b);
}

NumberField::Element NumberField::inverse(const Element& a) const {
  if (degree() == 1) {
    if (a.is_zero()) throw DivisionByZero();
    return Poly::constant(1 / a.constant_term());
  }
  return Residues{modulus_}.inv(a);
}

Poly NumberField::charpoly(const Element& a) const {
  const int d = degree();
  if (a.degree() <= 0) return Poly{-a.constant_term(), Rational(1)}.pow(static_cast<unsigned>(d));
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= d; ++k) {
    xs.emplace_back(k);
    ys.push_back(resultant(modulus_, Poly::constant(Rational(k)) - a));
  }
  return interpolate(xs, ys);
}

Poly NumberField::element_minpoly(const Element& a) const {
  return positive_primitive(squarefree_part(charpoly(a)));
}

AlgebraicNumber NumberField::value_of(const Element& a) const {
  if (a.degree() <= 0) return AlgebraicNumber(a.constant_term());
  return evaluate(a, theta_);
}

Interval NumberField::enclose(const Element& a, unsigned bits) const {
  if (a.degree() <= 0) return Interval::point(a.constant_term());
  const Rational target = grid_unit(bits);
  for (unsigned p = bits + 8;; p += std::max(8u, p / 2)) {
    const Interval t = theta_.enclose(p);
    Interval acc = Interval::point(Rational(0));
    const auto cs = a.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = (acc * t + Interval::point(*it)).rounded(p + 4);
    if (acc.width() <= target) return acc;
  }
}

void NumberField::add_known(NodePtr node, Element rep) {
  if (index_.contains(node.get())) return;
  index_.emplace(node.get(), known_.size());
  known_.emplace_back(std::move(node), std::move(rep));
}

bool NumberField::contains_atom(const Node* atom) const { return index_.contains(atom); }

bool NumberField::contains_atoms(const AlgebraicNumber& x) const {
  for (const Node* a : x.node()->atoms)
    if (!contains_atom(a)) return false;
  return true;
}

std::optional<NumberField::Element> NumberField::represent(const Node& node) const {
  std::unordered_map<const Node*, Element> memo;
  return represent_memo(node, memo);
}

std::optional<NumberField::Element> NumberField::represent_memo(
    const Node& node, std::unordered_map<const Node*, Element>& memo) const {
  if (node.op == Op::rational) return Poly::constant(node.value);
  if (auto it = index_.find(&node); it != index_.end()) return known_[it->second].second;
  if (node.is_atom()) return std::nullopt;
  if (auto it = memo.find(&node); it != memo.end()) return it->second;
  auto l = represent_memo(*node.lhs, memo);
  if (!l) return std::nullopt;
  auto r = represent_memo(*node.rhs, memo);
  if (!r) return std::nullopt;
  Element out;
  switch (node.op) {
    case Op::add: out = *l + *r; break;
    case Op::sub: out = *l - *r; break;
    case Op::mul: out = multiply(*l, *r); break;
    case Op::div: out = multiply(*l, inverse(*r)); break;
    default: return std::nullopt;
  }
  memo.emplace(&node, out);
  return out;
}

std::shared_ptr<const NumberField> NumberField::adjoin_atom(const Node& atom) const {
  if (contains_atom(&atom)) return shared_from_this();
  const NodePtr atom_ptr = atom.shared_from_this();

  auto need = [&](const Node& n) {
    auto r = represent(n);
    if (!r) throw Error("atom operand is not yet in the field");
    return *r;
  };

  std::vector<Element> g;
  Element radicand;
  switch (atom.op) {
    case Op::root:
      radicand = need(*atom.lhs);
      g.assign(atom.index + 1, Poly{});
      g[0] = -radicand;
      g[atom.index] = Poly::constant(Rational(1));
      break;
    case Op::root_of_poly:
      for (const auto& c : atom.poly.coefficients()) g.push_back(Poly::constant(c));
      break;
    case Op::root_of_alg:
      for (const auto& c : atom.coeffs) g.push_back(need(*c));
      break;
    default:
      throw Error("not an atom");
  }
  while (!g.empty() && g.back().is_zero()) g.pop_back();

  auto alias = [&](Element rep) {
    std::shared_ptr<NumberField> f(new NumberField(*this));
    f->add_known(atom_ptr, std::move(rep));
    f->adjoined_.push_back(&atom);
    return std::shared_ptr<const NumberField>(std::move(f));
  };

  for (const auto& [node, rep] : known_) {
    if (node->op != atom.op) continue;
    if (atom.op == Op::root) {
      if (node->index == atom.index && need(*node->lhs) == radicand) return alias(rep);
    } else if (atom.op == Op::root_of_poly) {
      const Rational lo = std::max(node->lo, atom.lo), hi = std::min(node->hi, atom.hi);
      if (node->poly == atom.poly && lo <= hi && SturmSequence(atom.poly).count_closed(lo, hi) > 0)
        return alias(rep);
    } else if (node->lo == atom.lo && node->hi == atom.hi && node->coeffs.size() == atom.coeffs.size()) {
      bool same = true;
      for (std::size_t i = 0; i < atom.coeffs.size() && same; ++i)
        same = need(*node->coeffs[i]) == need(*atom.coeffs[i]);
      if (same) return alias(rep);
    }
  }

  auto atom_enclose = [&](unsigned bits) { return detail::enclose(atom, bits); };
  const bool rational_coefficients =
      std::all_of(g.begin(), g.end(), [](const Poly& c) { return c.degree() <= 0; });

  int degree_over_q = 0;
  if (rational_coefficients) {
    std::vector<Rational> cs;
    for (const auto& c : g) cs.push_back(c.is_zero() ? Rational(0) : c.constant_term());
    auto [q, iso] = atom.irreducible ? std::pair{atom.poly, DyadicInterval(atom.lo, atom.hi)}
                                     : select_factor(Poly(cs), atom_enclose);
    if (q.degree() == 1) return alias(Poly::constant(-q.coeff(0) / q.coeff(1)));
    if (degree() == 1) {
      std::shared_ptr<NumberField> f(new NumberField());
      f->modulus_ = q.monic();
      f->theta_ = AlgebraicNumber::root_of_irreducible(q, iso);
      for (const auto& [node, rep] : known_) f->add_known(node, rep);
      f->adjoined_ = adjoined_;
      f->add_known(atom_ptr, Poly::x());
      f->adjoined_.push_back(&atom);
      f->add_known(f->theta_.node(), Poly::x());
      return f;
    }
    g.clear();
    for (const auto& c : q.coefficients()) g.push_back(Poly::constant(c));
    degree_over_q = q.degree();
  }

  // Capelli: T^d - r is irreducible over K when r is no q-th power in K for the
  // primes q | d (r > 0 in the real embedding rules out r = -4h^4). A norm that
  // is not a q-th power in Q certifies the first condition.
  bool irreducible_over_field = false;
  if (atom.op == Op::root && !rational_coefficients) {
    const Rational norm = resultant(modulus_, radicand);
    irreducible_over_field = true;
    for (long q : prime_factors(static_cast<long>(atom.index))) {
      Rational root;
      if (exact_root(norm, static_cast<unsigned>(q), root)) irreducible_over_field = false;
    }
  }

  const int D = degree();
  if (rational_coefficients && atom.op == Op::root && !irreducible_over_field) {
    // When the field is generated by real radicals of rationals, the degree of
    // the new radical alpha over it is the order m of alpha modulo their group,
    // and T^m - alpha^m is its minimal polynomial with alpha^m in the field.
    std::vector<std::pair<Rational, unsigned>> radicals;
    bool pure = true;
    for (const Node* a : adjoined_) {
      const auto rep = a->op == Op::root ? represent(*a->lhs) : std::nullopt;
      if (!rep || rep->degree() != 0) {
        pure = false;
        break;
      }
      radicals.emplace_back(rep->constant_term(), a->index);
    }
    if (pure) {
      const std::vector<std::pair<Rational, unsigned>> base = radicals;
      radicals.emplace_back(radicand.constant_term(), atom.index);
      const Integer grown = radical_group_order(radicals);
      if (grown == Integer(D) * degree_over_q) {
        irreducible_over_field = true;
      } else if (grown % D == 0) {
        const unsigned m = static_cast<unsigned>(Integer(grown / D).get_ui());
        if (auto power = radical_power_in_field(base, radicals.back(), m)) {
          Element beta = Poly::constant(power->scale);
          for (std::size_t i = 0; i < power->exponents.size(); ++i)
            for (unsigned e = 0; e < power->exponents[i]; ++e) beta = multiply(beta, *represent(*adjoined_[i]));
          if (m == 1) return alias(beta);
          g.assign(m + 1, Poly{});
          g[0] = -beta;
          g[m] = Poly::constant(Rational(1));
          irreducible_over_field = true;
        }
      }
    }
  }
  for (int k = 1; k <= 10; ++k) {
    const Rational c((k % 2 == 1) ? (k + 1) / 2 : -(k / 2));
    const Poly norm = trager_norm(modulus_, g, c);
    if (squarefree_part(norm).degree() != norm.degree()) continue;

    auto theta_new_enclose = [&](unsigned bits) {
      return detail::enclose(atom, bits + 8) + Interval::point(c) * theta_.enclose(bits + 8);
    };
    Poly factor;
    DyadicInterval iso;
    if (irreducible_over_field || (rational_coefficients && std::gcd(D, degree_over_q) == 1)) {
      factor = positive_primitive(norm);
      iso = locate_root(factor, theta_new_enclose);
    } else {
      std::tie(factor, iso) = select_factor(norm, theta_new_enclose);
    }
    const Poly lmod = factor.monic();
    const Residues there{lmod};

    // theta as an element of L: the common root of m(y) and g(z - c y; y).
    const int n = static_cast<int>(g.size()) - 1;
    FieldPoly big(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      const auto gi = g[i].coefficients();
      for (std::size_t a = 0; a < gi.size(); ++a) {
        if (gi[a] == 0) continue;
        for (int j = 0; j <= i; ++j) {
          // binom(i, j) z^(i-j) (-c y)^j
          Integer binom;
          mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
          const Rational coef = gi[a] * Rational(binom) * pow(Rational(-c), static_cast<unsigned>(j));
          const std::size_t slot = a + static_cast<std::size_t>(j);
          if (slot >= big.size()) big.resize(slot + 1);
          big[slot] += Poly::monomial(coef, static_cast<unsigned>(i - j));
        }
      }
    }
    for (auto& b : big) b = there.reduce(b);
    FieldPoly m_over_l;
    for (const auto& mc : modulus_.coefficients()) m_over_l.push_back(Poly::constant(mc));
    FieldPoly common = field_gcd(m_over_l, big, there);
    if (common.size() != 2) continue;
    const Element theta_rep = there.reduce(-there.mul(common[0], there.inv(common[1])));
    const Element atom_rep = there.reduce(Poly::x() - theta_rep * c);

    std::shared_ptr<NumberField> f(new NumberField());
    f->modulus_ = lmod;
    f->theta_ = AlgebraicNumber::root_of_irreducible(factor, iso);
    for (const auto& [node, rep] : known_) f->add_known(node, there.reduce(rep.compose(theta_rep)));
    f->adjoined_ = adjoined_;
    f->add_known(atom_ptr, atom_rep);
    f->adjoined_.push_back(&atom);
    f->add_known(f->theta_.node(), Poly::x());
    return f;
  }
  throw Error("no separating multiplier found while adjoining an atom");
}

std::optional<int> NumberField::radical_degree(const Node& atom) const {
  if (atom.op != Op::root) return std::nullopt;
  const auto radicand = represent(*atom.lhs);
  if (!radicand || radicand->degree() > 0) return std::nullopt;
  if (radicand->is_zero()) return 1;
  std::vector<std::pair<Rational, unsigned>> radicals;
  for (const Node* a : adjoined_) {
    const auto rep = a->op == Op::root ? represent(*a->lhs) : std::nullopt;
    if (!rep || rep->degree() > 0) return std::nullopt;
    radicals.emplace_back(rep->constant_term(), a->index);
  }
  const Integer base = radical_group_order(radicals);
  if (base != degree()) return std::nullopt;
  radicals.emplace_back(radicand->constant_term(), atom.index);
  return static_cast<int>(Integer(radical_group_order(radicals) / base).get_si());
}

std::shared_ptr<const NumberField> NumberField::adjoin_value(const AlgebraicNumber& value) const {
  if (represent(value)) return shared_from_this();
  const AlgebraicNumber synthetic = AlgebraicNumber::root_of_irreducible(value.minpoly(), value.isolator());
  std::shared_ptr<const NumberField> grown = synthetic.node()->is_atom() ? adjoin_atom(*synthetic.node()) : shared_from_this();
  auto rep = grown->represent(synthetic);
  std::shared_ptr<NumberField> f(new NumberField(*grown));
  f->add_known(value.node(), *rep);
  return f;
}

namespace {

struct Registry {
  std::mutex mutex;
  std::deque<std::shared_ptr<const NumberField>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

constexpr std::size_t kRegistryCapacity = 512;

}  // namespace

void register_field(std::shared_ptr<const NumberField> field) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  if (std::find(r.fields.begin(), r.fields.end(), field) != r.fields.end()) return;
  r.fields.push_front(std::move(field));
  if (r.fields.size() > kRegistryCapacity) r.fields.pop_back();
}

std::shared_ptr<const NumberField> field_containing(const AlgebraicNumber& x) {
  const auto& atoms = x.node()->atoms;
  if (atoms.empty()) return NumberField::rationals();
  std::shared_ptr<const NumberField> base = NumberField::rationals();
  {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    std::shared_ptr<const NumberField> best;
    for (const auto& f : r.fields) {
      if (f->contains_atoms(x) && (!best || f->degree() < best->degree())) best = f;
    }
    if (best) return best;
    const std::unordered_set<const Node*> wanted(atoms.begin(), atoms.end());
    std::size_t best_cover = 0;
    for (const auto& f : r.fields) {
      const auto& adj = f->adjoined();
      if (!std::all_of(adj.begin(), adj.end(), [&](const Node* a) { return wanted.contains(a); })) continue;
      const std::size_t cover = adj.size();
      if (cover > best_cover || (cover == best_cover && cover > 0 && f->degree() < base->degree())) {
        best_cover = cover;
        base = f;
      }
    }
  }
  for (const Node* a : atoms) {
    if (base->contains_atom(a)) continue;
    base = base->adjoin_atom(*a);
    register_field(base);
  }
  return base;
}

}  // namespace bssrw
