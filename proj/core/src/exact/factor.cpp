#include "bssrw/exact/factor.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>

#include "bssrw/error.hpp"
#include "bssrw/exact/integer.hpp"
#include "bssrw/exact/modp.hpp"
#include "bssrw/exact/roots.hpp"

namespace bssrw {

namespace {

constexpr int kDefaultDegreeCap = 12;
std::atomic<int> g_cap_override{0};

int env_degree_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("BSSRW_DEGREE_CAP")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0 && v < 10000) return static_cast<int>(v);
    }
    return kDefaultDegreeCap;
  }();
  return cap;
}

bool eisenstein_holds(const std::vector<Integer>& a, const Integer& q) {
  const std::size_t n = a.size() - 1;
  if (mpz_divisible_p(a[n].get_mpz_t(), q.get_mpz_t())) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!mpz_divisible_p(a[i].get_mpz_t(), q.get_mpz_t())) return false;
  }
  Integer q2 = q * q;
  return !mpz_divisible_p(a[0].get_mpz_t(), q2.get_mpz_t());
}

// Primes dividing every coefficient except the last one in a.
std::vector<Integer> eisenstein_candidates(const std::vector<Integer>& a) {
  Integer g(0);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[i].get_mpz_t());
  std::vector<Integer> out;
  if (g == 0 || g == 1) return out;
  for (const auto& [p, e] : factor_integer(g)) out.push_back(p);
  return out;
}

struct QuickResult {
  IrreducibilityCertificate cert = IrreducibilityCertificate::none;
  std::set<int> possible_degrees;
};

QuickResult quick_check(const Poly& input) {
  Poly p = primitive_part(input);
  QuickResult res;
  const int n = p.degree();
  if (n <= 0) throw DomainError("irreducibility of a constant");
  if (n == 1) {
    res.cert = IrreducibilityCertificate::linear;
    return res;
  }
  if (n <= 3 && rational_roots(p).empty()) {
    res.cert = IrreducibilityCertificate::no_rational_root_low_degree;
    return res;
  }
  std::vector<Integer> a = integer_coefficients(p);
  for (const auto& q : eisenstein_candidates(a)) {
    if (eisenstein_holds(a, q)) {
      res.cert = IrreducibilityCertificate::eisenstein;
      return res;
    }
  }
  if (a[0] != 0) {
    std::vector<Integer> rev(a.rbegin(), a.rend());
    for (const auto& q : eisenstein_candidates(rev)) {
      if (eisenstein_holds(rev, q)) {
        res.cert = IrreducibilityCertificate::eisenstein_reversal;
        return res;
      }
    }
  }
  DegreeProbe probe = probe_factor_degrees(p);
  if (probe.possible.empty() && !probe.primes_used.empty()) {
    res.cert = IrreducibilityCertificate::modular_degrees;
    return res;
  }
  res.possible_degrees = probe.primes_used.empty() ? std::set<int>{} : probe.possible;
  if (probe.primes_used.empty()) {
    for (int k = 1; k < n; ++k) res.possible_degrees.insert(k);
  }
  return res;
}

struct EvalPoint {
  Integer x;
  Integer value;
  std::vector<Integer> divisors;
};

// Kronecker search for a divisor of degree <= k. Interpolation nodes are the
// k+1 points whose values have the fewest divisors.
std::optional<Poly> kronecker_search(const Poly& p, int k) {
  const int n = p.degree();
  const int pool = 2 * k + 10;
  std::vector<EvalPoint> points;
  for (long step = 0; static_cast<int>(points.size()) < pool; ++step) {
    long x = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    Rational v = p(Rational(x));
    if (v == 0) return Poly{Rational(-x), Rational(1)};
    EvalPoint pt;
    pt.x = x;
    pt.value = v.get_num();
    pt.divisors = positive_divisors(pt.value);
    points.push_back(std::move(pt));
  }
  std::stable_sort(points.begin(), points.end(), [](const EvalPoint& a, const EvalPoint& b) {
    return a.divisors.size() < b.divisors.size();
  });
  std::vector<EvalPoint> nodes(points.begin(), points.begin() + k + 1);
  std::vector<EvalPoint> checks(points.begin() + k + 1, points.end());

  const Integer lc = p.leading().get_num();
  const Integer c0 = p.constant_term().get_num();
  std::vector<Rational> xs;
  for (const auto& pt : nodes) xs.emplace_back(pt.x);
  std::vector<Integer> chosen(k + 1);
  std::optional<Poly> found;

  std::function<bool(int)> recurse = [&](int level) -> bool {
    if (level == k + 1) {
      std::vector<Rational> ys(chosen.begin(), chosen.end());
      Poly g = interpolate(xs, ys);
      if (g.degree() < 1 || g.degree() >= n || !g.has_integer_coefficients()) return false;
      if (!mpz_divisible_p(lc.get_mpz_t(), g.leading().get_num_mpz_t())) return false;
      if (c0 != 0) {
        Integer g0 = g.constant_term().get_num();
        if (g0 == 0 || !mpz_divisible_p(c0.get_mpz_t(), g0.get_mpz_t())) return false;
      }
      for (const auto& pt : checks) {
        Integer gv = g(Rational(pt.x)).get_num();
        if (gv == 0 || !mpz_divisible_p(pt.value.get_mpz_t(), gv.get_mpz_t())) return false;
      }
      Poly prim = primitive_part(g);
      if (!divides(prim, p)) return false;
      found = prim;
      return true;
    }
    const auto& pt = nodes[level];
    for (const auto& d : pt.divisors) {
      for (int s = 0; s < (level == 0 ? 1 : 2); ++s) {
        Integer cand = s == 0 ? d : Integer(-d);
        bool ok = true;
        for (int j = 0; j < level && ok; ++j) {
          Integer diff = cand - chosen[j];
          Integer dx = pt.x - nodes[j].x;
          ok = mpz_divisible_p(diff.get_mpz_t(), dx.get_mpz_t()) != 0;
        }
        if (!ok) continue;
        chosen[level] = cand;
        if (recurse(level + 1)) return true;
      }
    }
    return false;
  };
  recurse(0);
  return found;
}

void split_squarefree(const Poly& g, std::vector<Poly>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(primitive_part(g));
    return;
  }
  QuickResult q = quick_check(g);
  if (q.cert != IrreducibilityCertificate::none) {
    out.push_back(primitive_part(g));
    return;
  }
  for (int k : q.possible_degrees) {
    if (2 * k > g.degree()) break;
    if (auto d = kronecker_search(g, k)) {
      split_squarefree(*d, out);
      split_squarefree(primitive_part(g / *d), out);
      return;
    }
  }
  out.push_back(primitive_part(g));
}

}  // namespace

int degree_cap() {
  int o = g_cap_override.load();
  return o > 0 ? o : env_degree_cap();
}

void set_degree_cap(std::optional<int> cap) { g_cap_override.store(cap ? *cap : 0); }

EisensteinResult eisenstein(const Poly& p, const Integer& q, bool try_reversal) {
  if (!is_prime(q)) throw DomainError("eisenstein: " + q.get_str() + " is not prime");
  EisensteinResult res;
  if (p.degree() < 1) return res;
  std::vector<Integer> a = integer_coefficients(primitive_part(p));
  if (eisenstein_holds(a, q)) {
    res.verdict = EisensteinVerdict::irreducible_certified;
    return res;
  }
  if (try_reversal && a[0] != 0) {
    std::vector<Integer> rev(a.rbegin(), a.rend());
    if (eisenstein_holds(rev, q)) {
      res.verdict = EisensteinVerdict::irreducible_certified;
      res.via_reversal = true;
    }
  }
  return res;
}

Poly Factorization::product() const {
  Poly acc = Poly::constant(content);
  for (const auto& t : terms) acc *= t.factor.pow(static_cast<unsigned>(t.multiplicity));
  return acc;
}

std::string to_string(IrreducibilityCertificate c) {
  switch (c) {
    case IrreducibilityCertificate::none: return "none";
    case IrreducibilityCertificate::linear: return "linear";
    case IrreducibilityCertificate::no_rational_root_low_degree: return "no-rational-root";
    case IrreducibilityCertificate::eisenstein: return "eisenstein";
    case IrreducibilityCertificate::eisenstein_reversal: return "eisenstein-reversal";
    case IrreducibilityCertificate::modular_degrees: return "modular-degrees";
    case IrreducibilityCertificate::kronecker: return "kronecker";
  }
  return "unknown";
}

IrreducibilityCertificate quick_irreducibility(const Poly& p) { return quick_check(p).cert; }

IrreducibilityCertificate certify_irreducible(const Poly& input) {
  if (input.is_zero()) throw ZeroPolynomialError("certify_irreducible");
  Poly p = primitive_part(input);
  QuickResult q = quick_check(p);
  if (q.cert != IrreducibilityCertificate::none) return q.cert;
  if (!rational_roots(p).empty()) return IrreducibilityCertificate::none;
  if (p.degree() > degree_cap()) throw DegreeCapExceeded(p.degree(), degree_cap());
  for (int k : q.possible_degrees) {
    if (2 * k > p.degree()) break;
    if (kronecker_search(p, k)) return IrreducibilityCertificate::none;
  }
  return IrreducibilityCertificate::kronecker;
}

std::optional<Poly> kronecker_divisor(const Poly& p, int max_degree) {
  Poly prim = primitive_part(p);
  for (int k = 1; k <= max_degree && k < prim.degree(); ++k) {
    if (auto d = kronecker_search(prim, k)) return d;
  }
  return std::nullopt;
}

Factorization factor_over_q(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("factor_over_q");
  if (p.degree() > degree_cap()) throw DegreeCapExceeded(p.degree(), degree_cap());
  Factorization result;
  if (p.degree() == 0) {
    result.content = p.leading();
    return result;
  }
  auto parts = squarefree_decomposition(primitive_part(p));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Poly part = primitive_part(parts[i]);
    if (part.degree() <= 0) continue;
    std::vector<Poly> irreducibles;
    for (const auto& r : rational_roots(part)) {
      Poly linear{Rational(-r.get_num()), Rational(r.get_den())};
      irreducibles.push_back(linear);
      part = primitive_part(part / linear);
    }
    split_squarefree(part, irreducibles);
    for (auto& f : irreducibles) {
      result.terms.push_back({std::move(f), static_cast<int>(i + 1)});
    }
  }
  std::sort(result.terms.begin(), result.terms.end(),
            [](const FactorTerm& a, const FactorTerm& b) { return a.factor < b.factor; });
  Poly unit = Poly::constant(Rational(1));
  for (const auto& t : result.terms) unit *= t.factor.pow(static_cast<unsigned>(t.multiplicity));
  result.content = p.leading() / unit.leading();
  return result;
}

}  // namespace bssrw
