#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "bssrw/exact/poly.hpp"

namespace bssrw {

// Degrees of the irreducible factors of an integral polynomial reduced mod the
// prime q (distinct-degree factorization). nullopt when q divides the leading
// coefficient or the reduction is not squarefree, i.e. the probe is unusable.
std::optional<std::vector<int>> modp_factor_degrees(const Poly& p, std::uint32_t q);

// All sums of sub-multisets of degrees, excluding 0 and the total.
std::set<int> proper_subset_sums(const std::vector<int>& degrees);

// Intersection of possible proper factor degrees over Q, from `primes` usable
// reductions. An empty result certifies irreducibility.
struct DegreeProbe {
  std::set<int> possible;      // candidate degrees of a proper factor
  std::vector<std::uint32_t> primes_used;
  std::optional<std::uint32_t> irreducible_mod;  // a prime where p stays irreducible
};
DegreeProbe probe_factor_degrees(const Poly& p, std::size_t max_primes = 24);

}  // namespace bssrw
