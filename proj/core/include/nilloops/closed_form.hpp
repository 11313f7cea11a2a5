#pragma once

#include <string>
#include <vector>

#include "nilloops/big_count.hpp"

namespace nilloops {

// Maximal proper divisors of d: those d' with d / d' prime. Ascending.
std::vector<int> pred(int d);

// Number of nilpotent loops of order 2q for an odd prime q.
// Throws Error(kNotOddPrime); Error(kNonIntegralTerm) signals a logic error.
BigCount count_2q(int q);

// N(2q) (q - 1) / 2^((q-2)(q-1)), exactly.
BigRatio asymptotic_ratio(int q);

// (q - 1)^3 / 2^((q-2)(q-1)/2).
BigRatio squeeze_bound(int q);

// Decimal expansion with the given number of fractional digits (truncated).
std::string to_decimal(const BigRatio& value, int digits);

}  // namespace nilloops
