#include "bssrw/cake/session.hpp"

#include "bssrw/error.hpp"

namespace bssrw {

namespace {

const AlgebraicNumber& one() {
  static const AlgebraicNumber o(1L);
  return o;
}

}  // namespace

Session::Session(std::vector<Measure> measures) : measures_(std::move(measures)) {
  if (measures_.empty()) throw DomainError("a session needs at least one player");
}

const Measure& Session::measure(std::size_t player) const {
  if (player >= measures_.size()) throw QueryError("no player with index " + std::to_string(player + 1));
  return measures_[player];
}

void Session::log(std::size_t player, QueryKind kind, std::vector<AlgebraicNumber> args,
                  const AlgebraicNumber& answer, std::optional<RadicalClaim> claim) {
  const std::size_t id = records_.size() + 1;
  tower_.adjoin(answer, "#" + std::to_string(id), std::move(claim));
  records_.push_back({id, player, kind, std::move(args), answer});
}

AlgebraicNumber Session::eval(std::size_t player, const AlgebraicNumber& x, const AlgebraicNumber& y) {
  const Measure& m = measure(player);
  if (x.sign() == Sign::negative || y.compare(one()) > 0 || x.compare(y) > 0)
    throw QueryError("eval needs 0 <= x <= y <= 1, got [" + x.display() + ", " + y.display() + "]");
  AlgebraicNumber answer = m.value(x, y);
  log(player, QueryKind::eval, {x, y}, answer, std::nullopt);
  return answer;
}

AlgebraicNumber Session::cut(std::size_t player, const AlgebraicNumber& x, const AlgebraicNumber& a) {
  const Measure& m = measure(player);
  if (x.sign() == Sign::negative || x.compare(one()) > 0)
    throw QueryError("cut needs 0 <= x <= 1, got x = " + x.display());
  const AlgebraicNumber fx = m.cdf_at(x);
  const AlgebraicNumber remaining = one() - fx;
  if (a.sign() == Sign::negative || a.compare(remaining) > 0)
    throw QueryError("infeasible cut amount " + a.display() + " (at most " + remaining.display() + " remains)");

  AlgebraicNumber answer;
  std::optional<RadicalClaim> claim;
  const AlgebraicNumber target = fx + a;
  if (a.sign() == Sign::zero) {
    answer = x;
  } else if (a.compare(remaining) == 0) {
    answer = one();
  } else if (auto d = m.monomial_degree()) {
    answer = target.nth_root(*d);
    claim = RadicalClaim{*d, target};
  } else {
    std::vector<AlgebraicNumber> coeffs;
    for (const auto& c : m.cdf().coefficients()) coeffs.emplace_back(c);
    coeffs[0] = coeffs[0] - target;
    answer = AlgebraicNumber::root_of(coeffs, DyadicInterval(Rational(0), Rational(1)));
  }
  log(player, QueryKind::cut, {x, a}, answer, std::move(claim));
  return answer;
}

AlgebraicNumber Session::arith(ArithOp op, const AlgebraicNumber& a, const AlgebraicNumber& b) {
  ++bss_ops_;
  return alg_arith(op, a, b);
}

int Session::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  ++bss_ops_;
  return a.compare(b);
}

std::string Session::dump(int digits) const {
  std::string out;
  for (const auto& r : records_) {
    out += "#" + std::to_string(r.id) + " " + measures_[r.player].label() + " " +
           (r.kind == QueryKind::cut ? "cut" : "eval") + " args=(";
    for (std::size_t i = 0; i < r.args.size(); ++i) out += (i ? ", " : "") + r.args[i].display(digits);
    out += ") answer=" + r.answer.display(digits) + "\n";
  }
  out += tower_.dump();
  return out;
}

}  // namespace bssrw
