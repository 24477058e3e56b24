#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bssrw/exact/rational.hpp"

namespace bssrw {

bool is_prime(const Integer& n);
bool is_prime(long n);

// Prime factorization of |n| as (prime, exponent) pairs in increasing order.
// n = 0 yields an empty list.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

// Positive divisors of |n| in increasing order; n must be nonzero.
std::vector<Integer> positive_divisors(const Integer& n);

// Distinct prime factors of a machine integer.
std::vector<long> prime_factors(long n);

// The first `count` primes.
std::vector<std::uint32_t> first_primes(std::size_t count);

}  // namespace bssrw
