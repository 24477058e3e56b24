#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bssrw/algebraic/algebraic_number.hpp"
#include "bssrw/cake/allocation.hpp"
#include "bssrw/cake/measure.hpp"

namespace bssrw {

// A violated inequality: for proportionality (i, i, mu_i(X_i), 1/n); for envy
// (i, j, mu_i(X_i), mu_i(X_j)); for equitability (i, j, mu_i(X_i), mu_j(X_j)).
struct FairnessWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  AlgebraicNumber lhs;
  AlgebraicNumber rhs;
};

struct FairnessReport {
  bool proportional = true;
  bool envy_free = true;
  bool equitable = true;
  std::optional<FairnessWitness> proportional_witness;
  std::optional<FairnessWitness> envy_witness;
  std::optional<FairnessWitness> equitable_witness;
  // values[i][j] = mu_i(X_j)
  std::vector<std::vector<AlgebraicNumber>> values;
};

// All three properties decided exactly. Throws DomainError if the player
// counts differ or the allocation does not tile the cake.
FairnessReport check_fairness(const Allocation& alloc, const std::vector<Measure>& measures);

// Sum over players of mu_i(X_i).
AlgebraicNumber welfare(const Allocation& alloc, const std::vector<Measure>& measures);

// A welfare-maximising allocation: the cake is cut at the roots in (0,1) of the
// pairwise density differences and each part goes to a player of largest
// density there (lowest index on ties). Adjacent parts of one player are merged.
Allocation max_welfare(const std::vector<Measure>& measures);

}  // namespace bssrw
