#include "bssrw/exact/modp.hpp"

#include <algorithm>

#include "bssrw/exact/integer.hpp"

namespace bssrw {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // low degree first, trimmed

struct Field {
  u64 q;
  u64 add(u64 a, u64 b) const { return (a + b) % q; }
  u64 sub(u64 a, u64 b) const { return (a + q - b) % q; }
  u64 mul(u64 a, u64 b) const { return a * b % q; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= q;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, q - 2); }
};

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const ModPoly& p) { return static_cast<int>(p.size()) - 1; }

ModPoly rem(ModPoly a, const ModPoly& b, const Field& f) {
  const int db = deg(b);
  const u64 inv = f.inv(b.back());
  for (int i = deg(a); i >= db; --i) {
    u64 c = f.mul(a[i], inv);
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
  }
  a.resize(std::max(0, std::min(static_cast<int>(a.size()), db)));
  trim(a);
  return a;
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, const Field& f) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % f.q;
  }
  trim(r);
  return rem(std::move(r), m, f);
}

ModPoly powmod(ModPoly base, u64 e, const ModPoly& m, const Field& f) {
  ModPoly r{1};
  base = rem(std::move(base), m, f);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, f);
    base = mulmod(base, base, m, f);
    e >>= 1;
  }
  return r;
}

ModPoly gcd(ModPoly a, ModPoly b, const Field& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = rem(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

ModPoly derivative(const ModPoly& p, const Field& f) {
  ModPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(f.mul(p[i], i % f.q));
  trim(d);
  return d;
}

ModPoly divide_exact(ModPoly a, const ModPoly& b, const Field& f) {
  const int db = deg(b);
  const u64 inv = f.inv(b.back());
  ModPoly q(std::max(0, deg(a) - db + 1), 0);
  for (int i = deg(a); i >= db; --i) {
    u64 c = f.mul(a[i], inv);
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
  }
  trim(q);
  return q;
}

}  // namespace

std::optional<std::vector<int>> modp_factor_degrees(const Poly& p, std::uint32_t q) {
  Poly prim = primitive_part(p);
  Field f{q};
  ModPoly m;
  for (const auto& c : prim.coefficients()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num_mpz_t(), q);
    m.push_back(r.get_ui());
  }
  trim(m);
  if (deg(m) != prim.degree()) return std::nullopt;
  if (deg(m) <= 0) return std::vector<int>{};
  if (deg(gcd(m, derivative(m, f), f)) != 0) return std::nullopt;

  std::vector<int> degrees;
  ModPoly rest = m;
  ModPoly xpow{0, 1};  // x^(q^i) mod rest
  for (int i = 1; 2 * i <= deg(rest); ++i) {
    xpow = powmod(xpow, q, rest, f);
    ModPoly diff = xpow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = f.sub(diff[1], 1);
    trim(diff);
    ModPoly g = gcd(rest, diff, f);
    if (deg(g) > 0) {
      for (int k = 0; k < deg(g) / i; ++k) degrees.push_back(i);
      rest = divide_exact(rest, g, f);
      xpow = rem(xpow, rest, f);
    }
  }
  if (deg(rest) > 0) degrees.push_back(deg(rest));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::set<int> proper_subset_sums(const std::vector<int>& degrees) {
  int total = 0;
  for (int d : degrees) total += d;
  std::vector<char> reach(total + 1, 0);
  reach[0] = 1;
  for (int d : degrees) {
    for (int s = total; s >= d; --s) {
      if (reach[s - d]) reach[s] = 1;
    }
  }
  std::set<int> out;
  for (int s = 1; s < total; ++s) {
    if (reach[s]) out.insert(s);
  }
  return out;
}

DegreeProbe probe_factor_degrees(const Poly& p, std::size_t max_primes) {
  DegreeProbe probe;
  const int n = p.degree();
  for (int k = 1; k < n; ++k) probe.possible.insert(k);
  if (n <= 1) return probe;
  for (std::uint32_t q : first_primes(max_primes + 8)) {
    if (probe.primes_used.size() >= max_primes) break;
    auto degrees = modp_factor_degrees(p, q);
    if (!degrees) continue;
    probe.primes_used.push_back(q);
    if (degrees->size() == 1) {
      probe.irreducible_mod = q;
      probe.possible.clear();
      break;
    }
    std::set<int> sums = proper_subset_sums(*degrees);
    std::set<int> merged;
    std::set_intersection(probe.possible.begin(), probe.possible.end(), sums.begin(), sums.end(),
                          std::inserter(merged, merged.begin()));
    probe.possible = std::move(merged);
    if (probe.possible.empty()) break;
  }
  return probe;
}

}  // namespace bssrw
