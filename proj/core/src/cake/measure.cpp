#include "bssrw/cake/measure.hpp"

#include "bssrw/error.hpp"
#include "bssrw/exact/parse.hpp"
#include "bssrw/exact/roots.hpp"

namespace bssrw {

namespace {

bool changes_sign_inside_unit(const Poly& density) {
  if (density.degree() <= 0) return false;
  const auto parts = squarefree_decomposition(density);
  for (std::size_t k = 0; k < parts.size(); k += 2) {  // odd multiplicities 1, 3, ...
    const Poly& q = parts[k];
    if (q.degree() < 1) continue;
    SturmSequence s(q);
    int inside = s.count(Rational(0), Rational(1));
    if (q(Rational(1)) == 0) --inside;
    if (inside > 0) return true;
  }
  return false;
}

}  // namespace

Measure::Measure(Poly cdf, std::string label)
    : cdf_(std::move(cdf)), density_(cdf_.derivative()), label_(std::move(label)) {
  if (cdf_(Rational(0)) != 0) throw InvalidMeasure(label_ + ": cdf(0) must be 0, got " + to_string(cdf_(Rational(0))));
  if (cdf_(Rational(1)) != 1) throw InvalidMeasure(label_ + ": cdf(1) must be 1, got " + to_string(cdf_(Rational(1))));
  if (changes_sign_inside_unit(density_))
    throw InvalidMeasure(label_ + ": density " + to_string(density_) + " changes sign on (0,1)");
  if (cdf_ == Poly::monomial(Rational(1), static_cast<unsigned>(cdf_.degree())))
    monomial_ = static_cast<unsigned>(cdf_.degree());
}

AlgebraicNumber Measure::cdf_at(const AlgebraicNumber& x) const {
  if (monomial_) return pow(x, *monomial_);
  return evaluate(cdf_, x);
}

AlgebraicNumber Measure::value(const AlgebraicNumber& a, const AlgebraicNumber& b) const {
  return cdf_at(b) - cdf_at(a);
}

std::vector<Measure> parse_measures(std::string_view text) {
  std::vector<Measure> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'name: polynomial'", line_no, static_cast<int>(first) + 1);
    std::string_view name = line.substr(first, colon - first);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.remove_suffix(1);
    if (name.empty()) throw ParseError("missing player name", line_no, static_cast<int>(first) + 1);
    for (const auto& m : out)
      if (m.label() == name)
        throw ParseError("duplicate player name '" + std::string(name) + "'", line_no, static_cast<int>(first) + 1);
    Poly cdf = parse_poly(line.substr(colon + 1), line_no, static_cast<int>(colon) + 1);
    try {
      out.emplace_back(std::move(cdf), std::string(name));
    } catch (const InvalidMeasure& e) {
      const auto body = line.find_first_not_of(" \t", colon + 1);
      throw InvalidMeasure(std::to_string(line_no) + ":" +
                           std::to_string(body == std::string_view::npos ? colon + 2 : body + 1) + ": " + e.what());
    }
    if (end == text.size()) break;
  }
  if (out.empty()) throw ParseError("no measures given", line_no, 1);
  return out;
}

}  // namespace bssrw
