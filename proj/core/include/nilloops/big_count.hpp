#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nilloops {

// Exact counts of isomorphism classes; values reach ~10^80 for the orders we handle.
using BigCount = boost::multiprecision::cpp_int;
using BigRatio = boost::multiprecision::cpp_rational;

BigCount big_pow(unsigned base, unsigned exponent);

// Bare decimal digits.
std::string to_decimal(const BigCount& value);

// Decimal with thousands separators, e.g. "2,623,755".
std::string to_grouped_decimal(const BigCount& value);

// Accepts digits with optional ',' separators. Throws Error(kParse) otherwise.
BigCount parse_big_count(std::string_view text);

}  // namespace nilloops
