#pragma once

#include "excol/rational.hpp"

#include <utility>
#include <vector>

namespace excol::detail {

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace excol::detail
