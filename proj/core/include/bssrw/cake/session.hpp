#pragma once

#include <string>
#include <vector>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/cake/measure.hpp"
#include "bssrw/tower/tower.hpp"

namespace bssrw {

enum class QueryKind { eval, cut };

struct QueryRecord {
  std::size_t id = 0;      // 1-based
  std::size_t player = 0;  // 0-based index into the session's measures
  QueryKind kind = QueryKind::eval;
  std::vector<AlgebraicNumber> args;
  AlgebraicNumber answer;
};

// A Robertson-Webb query session: players answer eval and cut queries about
// their measures, every answer is logged and adjoined to the tower, and the
// mediator's own arithmetic is counted as BSS operations.
class Session {
 public:
  explicit Session(std::vector<Measure> measures);

  // mu_i([x, y]); requires 0 <= x <= y <= 1.
  AlgebraicNumber eval(std::size_t player, const AlgebraicNumber& x, const AlgebraicNumber& y);
  // The y in [x, 1] with mu_i([x, y]) = a; requires 0 <= a <= mu_i([x, 1]).
  AlgebraicNumber cut(std::size_t player, const AlgebraicNumber& x, const AlgebraicNumber& a);

  // Mediator arithmetic and comparisons, counted.
  AlgebraicNumber arith(ArithOp op, const AlgebraicNumber& a, const AlgebraicNumber& b);
  int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

  std::size_t players() const noexcept { return measures_.size(); }
  const std::vector<Measure>& measures() const noexcept { return measures_; }
  const std::vector<QueryRecord>& records() const noexcept { return records_; }
  std::size_t rw_query_count() const noexcept { return records_.size(); }
  std::size_t bss_op_count() const noexcept { return bss_ops_; }
  const Tower& tower() const noexcept { return tower_; }

  // Transcript lines "#k <player> <cut|eval> args=(..) answer=.." then the tower dump.
  std::string dump(int digits = 12) const;

 private:
  const Measure& measure(std::size_t player) const;
  void log(std::size_t player, QueryKind kind, std::vector<AlgebraicNumber> args, const AlgebraicNumber& answer,
           std::optional<RadicalClaim> claim);

  std::vector<Measure> measures_;
  std::vector<QueryRecord> records_;
  std::size_t bss_ops_ = 0;
  Tower tower_;
};

}  // namespace bssrw
