// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "bssrw/cake/fairness.hpp"
#include "bssrw/cake/session.hpp"
#include "bssrw/certificates/certificate.hpp"
#include "bssrw/certificates/trinomial.hpp"
#include "bssrw/exact/factor.hpp"
#include "bssrw/exact/modp.hpp"
#include "bssrw/exact/parse.hpp"
#include "bssrw/exact/roots.hpp"
#include "bssrw/protocols/protocols.hpp"
#include "bssrw/tower/tower.hpp"
#include "support/brute_factor.hpp"
#include "support/corpus.hpp"

namespace {

using namespace bssrw;
using AN = AlgebraicNumber;
using Clock = std::chrono::steady_clock;

constexpr std::uint32_t kSeed = 20240611;

// Wall-clock limits in seconds; zero means no limit is stated.
constexpr double kLimitQuintic = 1.0;
constexpr double kLimitEquitableGrid = 10.0;
constexpr double kLimitWelfareGrid = 5.0;
constexpr double kLimitWelfare = 30.0;
constexpr double kLimitFactorOracle = 60.0;

constexpr int kCutEvalPairs = 200;
constexpr int kWelfareAllocations = 1000;
constexpr int kFactorPolys = 300;
constexpr int kDeterminismRepeats = 3;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail = what;
    ok = ok && condition;
  }
};

Poly T(std::string s) {
  for (char& ch : s)
    if (ch == 'T') ch = 'x';
  return parse_poly(s);
}

Outcome quintic_certificate(bool allow_sqrt) {
  Outcome o;
  const Certificate c = check_impossibility_equitable(5, allow_sqrt);
  o.require(c.factorization.size() == 2, "expected two factors");
  if (!o.ok) return o;
  Poly product{Rational(1)};
  for (const auto& f : c.factorization) product *= f.factor;
  o.require(product == c.equation, "factor product differs from T^5+T-1");
  o.require(c.factorization[0].factor == T("T^2-T+1"), "first factor is not T^2-T+1");
  o.require(c.factorization[1].factor == T("T^3+T^2-1"), "second factor is not T^3+T^2-1");
  o.require(c.real_root_degree() == 3, "real-root factor degree is not 3");
  const std::vector<long> primes = allow_sqrt ? std::vector<long>{2, 5} : std::vector<long>{5};
  o.require(c.tower_primes == primes, "unexpected tower primes");
  o.require(degree_obstruction(3, c.tower_primes), "3 divides an allowed tower degree");
  o.require(c.verdict == Verdict::impossible, "verdict is not IMPOSSIBLE");
  o.detail = o.ok ? "factors (T^2-T+1)(T^3+T^2-1), degree 3, primes " + std::string(allow_sqrt ? "{2, 5}" : "{5}")
                  : o.detail;
  return o;
}

Outcome equitable_grid() {
  Outcome o;
  for (int d : {6, 7, 8, 9, 10, 12}) {
    const Certificate c = check_impossibility_equitable(d, false);
    o.require(c.verdict == Verdict::impossible && c.galois_fact == "S_" + std::to_string(d) + "-nonsolvable",
              "d=" + std::to_string(d) + " not IMPOSSIBLE via S_d");
  }
  const Certificate eleven = check_impossibility_equitable(11, false);
  std::multiset<int> degrees;
  for (const auto& f : eleven.factorization) degrees.insert(f.degree);
  o.require(eleven.verdict == Verdict::impossible && degrees == std::multiset<int>{2, 9},
            "d=11 not IMPOSSIBLE via degrees {2, 9}");
  o.require(degree_obstruction(2, {11}) && degree_obstruction(9, {11}), "a factor degree is a power of 11");
  for (int d : {1, 2, 3, 4})
    o.require(check_impossibility_equitable(d, false).verdict == Verdict::no_obstruction_found,
              "d=" + std::to_string(d) + " not NO-OBSTRUCTION-FOUND");
  if (o.ok) o.detail = "d=6..10,12 S_d; d=11 degrees {2, 9}; d=1..4 no obstruction";
  return o;
}

Outcome welfare_grid() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    for (int p : {3, 5, 7}) {
      const std::string tag = "(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")";
      const Certificate c = check_impossibility_welfare(n, p);
      o.require(c.verdict == Verdict::impossible, tag + " not IMPOSSIBLE");
      o.require(c.real_root_degree() == p - 1, tag + " degree is not p-1");
      const EisensteinResult e = eisenstein(c.real_root_factor, p, true);
      o.require(e.verdict == EisensteinVerdict::irreducible_certified, tag + " minpoly not Eisenstein-certified");
    }
  }
  if (o.ok) o.detail = "9 cases, degrees {2, 4, 6} Eisenstein-certified";
  return o;
}

Outcome selmer() {
  Outcome o;
  std::set<int> reducible;
  for (int d = 5; d <= 12; ++d) {
    const TrinomialClass c = selmer_classify(d, TrinomialFamily::plus_minus);
    if (c.status != TrinomialStatus::irreducible) {
      reducible.insert(d);
      const Poly q = T("T^2-T+1");
      o.require(divides(q, c.trinomial) && c.cofactor && q * *c.cofactor == c.trinomial,
                "d=" + std::to_string(d) + " exact division failed");
    } else {
      const bool modp = probe_factor_degrees(c.trinomial).possible.empty();
      bool kron = false;
      if (!modp && d <= 8) kron = certify_irreducible(c.trinomial) == IrreducibilityCertificate::kronecker;
      o.require(modp || kron, "d=" + std::to_string(d) + " irreducibility not confirmed independently");
    }
  }
  o.require(reducible == std::set<int>{5, 11}, "reducible set is not {5, 11}");
  if (o.ok) o.detail = "reducible exactly at {5, 11}";
  return o;
}

Outcome equitable_cutpoint() {
  Outcome o;
  const auto ms = parse_measures("a: x\nb: x^5");
  const EquitableCutpoint cut = isolate_equitable_cutpoint(ms[0], ms[1]);
  const Rational width = make_rational(1, 1000000000000L);
  const DyadicInterval iv = refine_root(cut.t.minpoly(), cut.t.isolator(), width);
  o.require(iv.width() <= width, "interval wider than 1e-12");
  o.require(make_rational(754877666, 1000000000) <= iv.lo() && iv.hi() <= make_rational(754877667, 1000000000),
            "interval not inside [0.754877666, 0.754877667]");
  o.require(cut.t.minpoly() == parse_poly("x^3+x^2-1"), "minpoly is not T^3+T^2-1");
  o.require(cut.degree == check_impossibility_equitable(5, false).real_root_degree(), "degree mismatch");
  if (o.ok) o.detail = "root in " + to_string(iv) + ", degree 3";
  return o;
}

Outcome step_degrees() {
  Outcome o;
  int runs = 0, steps = 0;
  for (const char* profile : {"a: x\nb: x^5", "a: x^5\nb: x", "a: x\nb: x\nc: x^5", "a: x^5\nb: x\nc: x"}) {
    const auto ms = parse_measures(profile);
    for (const char* name : {"cut_and_choose", "even_paz", "last_diminisher"}) {
      if (std::string(name) == "cut_and_choose" && ms.size() != 2) continue;
      const ProtocolRun run = run_protocol(name, ms);
      const StepDegreeReport r = verify_step_degrees(run.session.tower(), 5);
      o.require(r.passed, std::string(name) + " violated the {1, 5} rule");
      ++runs;
      steps += static_cast<int>(r.steps.size());
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " runs, " + std::to_string(steps) + " steps, 0 violations";
  return o;
}

Rational unit_rational(std::mt19937& rng, long max_den = 1000) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(0, d);
  return make_rational(num(rng), d);
}

Outcome cut_eval_identity() {
  Outcome o;
  std::mt19937 rng(kSeed);
  std::set<std::string> seen;
  int checks = 0;
  for (const auto& c : testing::corpus()) {
    for (const auto& m : testing::load(c)) {
      if (!seen.insert(to_string(m.cdf())).second) continue;
      for (int k = 0; k < kCutEvalPairs; ++k) {
        Session s({m});
        const Rational x = unit_rational(rng);
        const AN a = (AN(1) - m.cdf_at(x)) * AN(unit_rational(rng));
        const AN y = s.cut(0, x, a);
        o.require(alg_sign(s.eval(0, x, y) - a) == Sign::zero, "identity failed for " + to_string(m.cdf()));
        ++checks;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " pairs over " + std::to_string(seen.size()) + " distinct measures";
  return o;
}

Outcome fairness_audit() {
  Outcome o;
  int runs = 0;
  for (const auto& c : testing::corpus()) {
    const auto ms = testing::load(c);
    for (const auto& name : testing::applicable_protocols(ms.size())) {
      const FairnessReport r = check_fairness(run_protocol(name, ms).allocation, ms);
      const std::string tag = name + " on " + c.name;
      if (name == "cut_and_choose") o.require(r.envy_free && r.proportional, tag);
      if (name == "even_paz" || name == "last_diminisher") o.require(r.proportional, tag);
      if (name == "selfridge_conway") o.require(r.envy_free, tag);
      ++runs;
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " protocol runs on " + std::to_string(testing::corpus().size()) + " profiles";
  return o;
}

Allocation from_cuts(const std::vector<AN>& cuts, const std::vector<std::size_t>& owners) {
  Allocation a;
  a.pieces.resize(2);
  AN lo(0);
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    const AN hi = i < cuts.size() ? cuts[i] : AN(1);
    a.pieces[owners[i]].push_back({lo, hi});
    lo = hi;
  }
  return a;
}

Outcome welfare_optimality() {
  Outcome o;
  const auto ms = parse_measures("a: x\nb: x^3");
  const Allocation best = max_welfare(ms);
  const auto cuts = best.cutpoints();
  const AN sqrt3 = AN(3).nth_root(2);
  o.require(cuts.size() == 1 && cuts[0] == AN(1) / sqrt3, "cut is not 3^(-1/2)");
  const AN w = welfare(best, ms);
  o.require(w == AN(1) + AN(2) * sqrt3 / AN(9), "welfare is not 1 + 2*sqrt(3)/9");

  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int k = 0; k < kWelfareAllocations; ++k) {
    std::vector<AN> cs;
    std::vector<Rational> raw{unit_rational(rng)};
    if (k % 2) raw.push_back(unit_rational(rng));
    std::sort(raw.begin(), raw.end());
    for (const auto& r : raw) cs.emplace_back(r);
    std::vector<std::size_t> owners;
    for (std::size_t i = 0; i <= cs.size(); ++i) owners.push_back(static_cast<std::size_t>(bit(rng)));
    o.require(welfare(from_cuts(cs, owners), ms) <= w, "a random allocation beats the optimum");
  }

  for (int p : {3, 5, 7}) {
    const auto mp = parse_measures("a: x\nb: x^" + std::to_string(p));
    const Allocation opt = max_welfare(mp);
    const auto oc = opt.cutpoints();
    o.require(oc.size() == 1, "p=" + std::to_string(p) + " expected one cut");
    if (oc.size() != 1) continue;
    const std::size_t left = opt.pieces[0].front().lo == AN(0) ? 0 : 1;
    const std::vector<std::size_t> owners{left, 1 - left};
    const AN wopt = welfare(opt, mp);
    const AN eps(make_rational(1, 1000));
    for (const AN& moved : {oc[0] + eps, oc[0] - eps})
      o.require(welfare(from_cuts({moved}, owners), mp) < wopt, "p=" + std::to_string(p) + " perturbation did not lose");
  }
  if (o.ok) o.detail = "exact optimum, " + std::to_string(kWelfareAllocations) + " random allocations dominated, p in {3, 5, 7} stationary";
  return o;
}

Outcome factor_oracle() {
  Outcome o;
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int k = 0; k < kFactorPolys; ++k) {
    const int d = deg(rng);
    testing::IntPoly ip(d + 1);
    for (auto& c : ip) c = coef(rng);
    while (ip.back() == 0) ip.back() = coef(rng);
    std::vector<Rational> cs;
    for (auto c : ip) cs.emplace_back(static_cast<long>(c));
    const Poly p(cs);
    const Factorization f = factor_over_q(p);
    const auto brute = testing::brute_force_factor(ip);
    std::vector<Poly> ours, theirs;
    for (const auto& t : f.terms)
      for (int i = 0; i < t.multiplicity; ++i) ours.push_back(t.factor);
    for (const auto& b : brute.factors) {
      std::vector<Rational> bc;
      for (auto c : b) bc.emplace_back(static_cast<long>(c));
      theirs.emplace_back(bc);
    }
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    o.require(ours == theirs && f.content == Rational(static_cast<long>(brute.content)),
              "disagreement on " + to_string(p));
  }
  if (o.ok) o.detail = std::to_string(kFactorPolys) + " polynomials agree";
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  std::array<char, 4096> buf{};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return out + "\n<status " + std::to_string(status) + ">";
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bssrw_acceptance";
  fs::create_directories(dir);
  const std::string two = (dir / "two.txt").string(), three = (dir / "three.txt").string(),
                    alloc = (dir / "alloc.txt").string();
  std::ofstream(two) << "alice: x\nbob: x^5\n";
  std::ofstream(three) << "a: x\nb: x^2\nc: x^3\n";
  std::ofstream(alloc) << "alice: [0, root(x^3+x^2-1, 0, 1)]\nbob: [root(x^3+x^2-1, 0, 1), 1]\n";
  const std::string exe = BSSRW_CLI_EXE;
  const std::vector<std::string> commands = {
      "run-protocol cut-and-choose --measures " + two,
      "run-protocol selfridge-conway --measures " + three,
      "run-protocol even-paz --measures " + three,
      "check-fairness --measures " + two + " --allocation " + alloc,
      "max-welfare --measures " + three,
      "check-impossibility equitable --d 5",
      "check-impossibility equitable --d 4",
      "check-impossibility welfare --n 3 --p 7",
      "analyze-trinomial --d 11 --family plus-minus",
      "isolate-cutpoint --measures " + two,
      "verify-tower last-diminisher --measures " + three,
  };
  int compared = 0;
  for (const auto& cmd : commands) {
    for (const char* fmt : {"text", "json"}) {
      const std::string line = exe + " --format " + fmt + " " + cmd + " 2>&1";
      const std::string first = capture(line);
      for (int k = 1; k < kDeterminismRepeats; ++k) o.require(capture(line) == first, "output changed: " + cmd);
      ++compared;
    }
  }
  fs::remove_all(dir);
  if (o.ok) o.detail = std::to_string(compared) + " command/format pairs byte-identical over " +
                       std::to_string(kDeterminismRepeats) + " runs";
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "quintic equitable certificate", kLimitQuintic, [] { return quintic_certificate(false); }},
      {2, "quintic certificate with square roots allowed", 0, [] { return quintic_certificate(true); }},
      {3, "equitable degree grid", kLimitEquitableGrid, equitable_grid},
      {4, "welfare (n, p) grid", kLimitWelfareGrid, welfare_grid},
      {5, "trinomial classification", 0, selmer},
      {6, "equitable cutpoint isolation", 0, equitable_cutpoint},
      {7, "tower step degrees", 0, step_degrees},
      {8, "cut/eval identity", 0, cut_eval_identity},
      {9, "fairness audits", 0, fairness_audit},
      {10, "welfare optimality", kLimitWelfare, welfare_optimality},
      {11, "factorization oracle", kLimitFactorOracle, factor_oracle},
      {12, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit > 0 && seconds > c.limit) o.require(false, "exceeded time limit");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << o.detail << "; " << seconds
         << " s";
    if (c.limit > 0) line << " of " << c.limit << " s";
    line << ")";
    std::cout << line.str() << std::endl;
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
