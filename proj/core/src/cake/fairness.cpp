#include "bssrw/cake/fairness.hpp"

#include "bssrw/error.hpp"

namespace bssrw {

FairnessReport check_fairness(const Allocation& alloc, const std::vector<Measure>& measures) {
  const std::size_t n = measures.size();
  if (alloc.players() != n)
    throw DomainError("allocation has " + std::to_string(alloc.players()) + " players but " + std::to_string(n) +
                      " measures were given");
  alloc.validate();

  FairnessReport r;
  r.values.assign(n, std::vector<AlgebraicNumber>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.values[i][j] = share_value(measures[i], alloc.pieces[j]);

  const AlgebraicNumber fair_share(Rational(1, static_cast<long>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraicNumber& own = r.values[i][i];
    if (r.proportional && own.compare(fair_share) < 0) {
      r.proportional = false;
      r.proportional_witness = FairnessWitness{i, i, own, fair_share};
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (r.envy_free && own.compare(r.values[i][j]) < 0) {
        r.envy_free = false;
        r.envy_witness = FairnessWitness{i, j, own, r.values[i][j]};
      }
      if (j > i && r.equitable && own.compare(r.values[j][j]) != 0) {
        r.equitable = false;
        r.equitable_witness = FairnessWitness{i, j, own, r.values[j][j]};
      }
    }
  }
  return r;
}

AlgebraicNumber welfare(const Allocation& alloc, const std::vector<Measure>& measures) {
  if (alloc.players() != measures.size()) throw DomainError("player count mismatch");
  AlgebraicNumber total;
  for (std::size_t i = 0; i < measures.size(); ++i) total = total + share_value(measures[i], alloc.pieces[i]);
  return total;
}

}  // namespace bssrw
