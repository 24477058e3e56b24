#include "bssrw/protocols/protocols.hpp"

#include <algorithm>
#include <numeric>

#include "bssrw/error.hpp"

namespace bssrw {

namespace {

using AN = AlgebraicNumber;

AN frac(long p, long q) { return AN(make_rational(p, q)); }

// Index of the largest value; earlier index wins ties.
std::size_t best_of(Session& s, const std::vector<AN>& values, const std::vector<bool>& available) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!available[k]) continue;
    if (!best || s.compare(values[k], values[*best]) > 0) best = k;
  }
  return *best;
}

void even_paz_step(Session& s, Allocation& alloc, std::vector<std::size_t> players, const AN& lo, const AN& hi,
                   bool whole_cake) {
  const long k = static_cast<long>(players.size());
  if (k == 1) {
    alloc.pieces[players[0]].push_back({lo, hi});
    return;
  }
  const long h = (k + 1) / 2;
  struct Mark {
    AN at;
    std::size_t player;
  };
  std::vector<Mark> marks;
  for (std::size_t p : players) {
    const AN own = whole_cake ? AN(1L) : s.eval(p, lo, hi);
    const AN amount = s.arith(ArithOp::mul, own, frac(h, k));
    marks.push_back({s.cut(p, lo, amount), p});
  }
  std::stable_sort(marks.begin(), marks.end(), [&](const Mark& a, const Mark& b) {
    const int c = s.compare(a.at, b.at);
    return c < 0 || (c == 0 && a.player < b.player);
  });
  const AN split = marks[static_cast<std::size_t>(h - 1)].at;
  std::vector<std::size_t> left, right;
  for (long i = 0; i < k; ++i) (i < h ? left : right).push_back(marks[static_cast<std::size_t>(i)].player);
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  even_paz_step(s, alloc, left, lo, split, false);
  even_paz_step(s, alloc, right, split, hi, false);
}

}  // namespace

std::string to_string(Guarantee g) { return g == Guarantee::proportional ? "proportional" : "envy_free"; }

ProtocolRun cut_and_choose(const Measure& first, const Measure& second) {
  Session s({first, second});
  const AN half = frac(1, 2);
  const AN y = s.cut(0, AN(0L), half);
  const AN left_value = s.eval(1, AN(0L), y);
  Allocation alloc;
  alloc.pieces.resize(2);
  if (s.compare(left_value, half) >= 0) {
    alloc.pieces[1].push_back({AN(0L), y});
    alloc.pieces[0].push_back({y, AN(1L)});
  } else {
    alloc.pieces[0].push_back({AN(0L), y});
    alloc.pieces[1].push_back({y, AN(1L)});
  }
  return {"cut_and_choose", std::move(alloc), std::move(s), {Guarantee::proportional, Guarantee::envy_free}};
}

ProtocolRun last_diminisher(std::vector<Measure> measures) {
  const std::size_t n = measures.size();
  if (n < 2) throw DomainError("last_diminisher needs at least two players");
  Session s(std::move(measures));
  Allocation alloc;
  alloc.pieces.resize(n);
  const AN share = frac(1, static_cast<long>(n));
  std::vector<std::size_t> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  AN left(0L);
  while (remaining.size() > 1) {
    std::size_t holder = remaining.front();
    AN y = s.cut(holder, left, share);
    for (std::size_t k = 1; k < remaining.size(); ++k) {
      const std::size_t p = remaining[k];
      if (s.compare(s.eval(p, left, y), share) > 0) {
        y = s.cut(p, left, share);
        holder = p;
      }
    }
    alloc.pieces[holder].push_back({left, y});
    remaining.erase(std::find(remaining.begin(), remaining.end(), holder));
    left = y;
  }
  alloc.pieces[remaining.front()].push_back({left, AN(1L)});
  return {"last_diminisher", std::move(alloc), std::move(s), {Guarantee::proportional}};
}

ProtocolRun even_paz(std::vector<Measure> measures) {
  const std::size_t n = measures.size();
  if (n < 1) throw DomainError("even_paz needs at least one player");
  Session s(std::move(measures));
  Allocation alloc;
  alloc.pieces.resize(n);
  std::vector<std::size_t> players(n);
  std::iota(players.begin(), players.end(), 0);
  even_paz_step(s, alloc, players, AN(0L), AN(1L), true);
  return {"even_paz", std::move(alloc), std::move(s), {Guarantee::proportional}};
}

ProtocolRun selfridge_conway(std::vector<Measure> measures) {
  if (measures.size() != 3) throw DomainError("selfridge_conway needs exactly three players");
  Session s(std::move(measures));
  Allocation alloc;
  alloc.pieces.resize(3);
  const AN zero(0L), one(1L), third = frac(1, 3);

  // P1 cuts three pieces it values equally.
  const AN c1 = s.cut(0, zero, third);
  const AN c2 = s.cut(0, c1, third);
  std::vector<Piece> pieces{{zero, c1}, {c1, c2}, {c2, one}};

  // P2 trims its favourite down to its second favourite when strictly larger.
  std::vector<AN> v2;
  for (const auto& p : pieces) v2.push_back(s.eval(1, p.lo, p.hi));
  std::vector<std::size_t> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.compare(v2[a], v2[b]) > 0; });
  std::optional<std::size_t> trimmed;
  std::optional<Piece> trimming;
  if (s.compare(v2[order[0]], v2[order[1]]) > 0) {
    trimmed = order[0];
    Piece& p = pieces[*trimmed];
    const AN t = s.cut(1, p.lo, v2[order[1]]);
    trimming = Piece{t, p.hi};
    p.hi = t;
  }

  std::vector<bool> available(3, true);
  auto values_for = [&](std::size_t player) {
    std::vector<AN> v;
    for (std::size_t k = 0; k < pieces.size(); ++k)
      v.push_back(available[k] ? s.eval(player, pieces[k].lo, pieces[k].hi) : AN(0L));
    return v;
  };

  // P3 chooses, then P2 (taking the trimmed piece if still there), then P1.
  const std::size_t pick3 = best_of(s, values_for(2), available);
  available[pick3] = false;
  alloc.pieces[2].push_back(pieces[pick3]);
  std::size_t pick2;
  if (trimmed && available[*trimmed]) {
    pick2 = *trimmed;
  } else {
    pick2 = best_of(s, values_for(1), available);
  }
  available[pick2] = false;
  alloc.pieces[1].push_back(pieces[pick2]);
  const std::size_t pick1 = static_cast<std::size_t>(std::find(available.begin(), available.end(), true) - available.begin());
  alloc.pieces[0].push_back(pieces[pick1]);

  if (trimming) {
    const std::size_t taker = pick3 == *trimmed ? 2 : 1;
    const std::size_t divider = taker == 2 ? 1 : 2;
    const AN w = s.eval(divider, trimming->lo, trimming->hi);
    const AN part = s.arith(ArithOp::div, w, AN(3L));
    const AN d1 = s.cut(divider, trimming->lo, part);
    const AN d2 = s.cut(divider, d1, part);
    pieces = {{trimming->lo, d1}, {d1, d2}, {d2, trimming->hi}};
    available.assign(3, true);
    for (std::size_t chooser : {taker, std::size_t{0}, divider}) {
      const std::size_t pick = chooser == divider
                                   ? static_cast<std::size_t>(std::find(available.begin(), available.end(), true) -
                                                              available.begin())
                                   : best_of(s, values_for(chooser), available);
      available[pick] = false;
      alloc.pieces[chooser].push_back(pieces[pick]);
    }
  }
  return {"selfridge_conway", std::move(alloc), std::move(s), {Guarantee::envy_free}};
}

const std::vector<std::string>& protocol_names() {
  static const std::vector<std::string> names{"cut_and_choose", "last_diminisher", "even_paz", "selfridge_conway"};
  return names;
}

ProtocolRun run_protocol(std::string_view name, std::vector<Measure> measures) {
  if (name == "cut_and_choose") {
    if (measures.size() != 2) throw DomainError("cut_and_choose needs exactly two players");
    return cut_and_choose(measures[0], measures[1]);
  }
  if (name == "last_diminisher") return last_diminisher(std::move(measures));
  if (name == "even_paz") return even_paz(std::move(measures));
  if (name == "selfridge_conway") return selfridge_conway(std::move(measures));
  throw DomainError("unknown protocol '" + std::string(name) + "'");
}

}  // namespace bssrw
