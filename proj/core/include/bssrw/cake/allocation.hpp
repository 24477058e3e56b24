#pragma once

#include <string>
#include <vector>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/cake/measure.hpp"

namespace bssrw {

// Closed interval [lo, hi] of the cake. Single shared points carry no measure.
struct Piece {
  AlgebraicNumber lo;
  AlgebraicNumber hi;
};

// pieces[i] is the (possibly empty, possibly non-contiguous) share of player i.
struct Allocation {
  std::vector<std::vector<Piece>> pieces;

  std::size_t players() const noexcept { return pieces.size(); }
  // Sorted, distinct piece endpoints strictly inside (0,1).
  std::vector<AlgebraicNumber> cutpoints() const;
  // Throws DomainError unless the pieces tile [0,1] with disjoint interiors.
  void validate() const;
};

AlgebraicNumber share_value(const Measure& m, const std::vector<Piece>& share);

// Allocation report: per player, its intervals in display form and the exact value.
std::string describe(const Allocation& alloc, const std::vector<Measure>& measures, int digits = 12);

}  // namespace bssrw
