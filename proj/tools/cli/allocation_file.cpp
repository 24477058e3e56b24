#include "cli/allocation_file.hpp"

#include <algorithm>
#include <string>

#include "bssrw/error.hpp"
#include "bssrw/exact/parse.hpp"
#include "bssrw/exact/roots.hpp"

namespace bssrw::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Rational rational_at(std::string_view text, int line, int column) {
  try {
    return parse_rational(std::string(trim(text)));
  } catch (const std::exception&) {
    throw ParseError("expected a rational, got '" + std::string(trim(text)) + "'", line, column);
  }
}

AlgebraicNumber root_in(const Poly& p, const Rational& lo, const Rational& hi, int line, int column) {
  if (p.is_zero() || p.degree() < 1) throw ParseError("root() needs a non-constant polynomial", line, column);
  if (lo > hi) throw ParseError("root() bounds are reversed", line, column);
  const Poly sq = squarefree_part(p);
  if (SturmSequence(sq).count_closed(lo, hi) != 1)
    throw ParseError("root() interval must contain exactly one root", line, column);
  for (const Rational& r : rational_roots(sq))
    if (lo <= r && r <= hi) return AlgebraicNumber(r);
  for (const auto& iv : sturm_isolate(sq)) {
    const Rational a = std::max(lo, iv.lo()), b = std::min(hi, iv.hi());
    if (a <= b && SturmSequence(sq).count_closed(a, b) == 1) return AlgebraicNumber::root_of(sq, iv);
  }
  throw ParseError("root() interval does not match an isolated root", line, column);
}

}  // namespace

AlgebraicNumber parse_endpoint(std::string_view text, int line, int column) {
  const std::string_view t = trim(text);
  if (t.starts_with("root(")) {
    if (!t.ends_with(")")) throw ParseError("unterminated root(", line, column);
    const std::string_view inner = t.substr(5, t.size() - 6);
    const auto c2 = inner.rfind(',');
    const auto c1 = c2 == std::string_view::npos ? c2 : inner.rfind(',', c2 - 1);
    if (c1 == std::string_view::npos) throw ParseError("root() needs (poly, lo, hi)", line, column);
    const Poly p = parse_poly(inner.substr(0, c1), line, column + 4);
    return root_in(p, rational_at(inner.substr(c1 + 1, c2 - c1 - 1), line, column),
                   rational_at(inner.substr(c2 + 1), line, column), line, column);
  }
  if (const auto caret = t.find("^(1/"); caret != std::string_view::npos) {
    if (!t.ends_with(")")) throw ParseError("expected r^(1/d)", line, column);
    const Rational r = rational_at(t.substr(0, caret), line, column);
    const Rational d = rational_at(t.substr(caret + 4, t.size() - caret - 5), line, column);
    if (!is_integer(d) || d < 1) throw ParseError("root index must be a positive integer", line, column);
    return AlgebraicNumber(r).nth_root(static_cast<unsigned>(d.get_num().get_ui()));
  }
  return AlgebraicNumber(rational_at(t, line, column));
}

Allocation parse_allocation(std::string_view text, const std::vector<Measure>& measures) {
  Allocation alloc;
  alloc.pieces.resize(measures.size());
  std::vector<bool> seen(measures.size(), false);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'name: [a, b] ...'", line_no, 1);
    const std::string name(trim(line.substr(0, colon)));
    const auto it = std::find_if(measures.begin(), measures.end(), [&](const Measure& m) { return m.label() == name; });
    if (it == measures.end()) throw ParseError("unknown player '" + name + "'", line_no, 1);
    const std::size_t player = static_cast<std::size_t>(it - measures.begin());
    if (seen[player]) throw ParseError("player '" + name + "' listed twice", line_no, 1);
    seen[player] = true;

    std::size_t i = colon + 1;
    while (true) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      if (line[i] != '[') throw ParseError("expected '['", line_no, static_cast<int>(i) + 1);
      // Find the matching ']' and the top-level comma (root(...) contains commas).
      int depth = 0;
      std::size_t comma = std::string_view::npos, close = std::string_view::npos;
      for (std::size_t k = i + 1; k < line.size(); ++k) {
        if (line[k] == '(') ++depth;
        else if (line[k] == ')') --depth;
        else if (line[k] == ',' && depth == 0 && comma == std::string_view::npos) comma = k;
        else if (line[k] == ']' && depth == 0) {
          close = k;
          break;
        }
      }
      if (close == std::string_view::npos || comma == std::string_view::npos)
        throw ParseError("expected '[a, b]'", line_no, static_cast<int>(i) + 1);
      Piece piece{parse_endpoint(line.substr(i + 1, comma - i - 1), line_no, static_cast<int>(i) + 2),
                  parse_endpoint(line.substr(comma + 1, close - comma - 1), line_no, static_cast<int>(comma) + 2)};
      alloc.pieces[player].push_back(std::move(piece));
      i = close + 1;
    }
  }
  return alloc;
}

}  // namespace bssrw::cli
