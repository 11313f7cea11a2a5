#include "nilloops/big_count.hpp"

#include <cctype>

#include "nilloops/error.hpp"

namespace nilloops {

BigCount big_pow(unsigned base, unsigned exponent) {
  return boost::multiprecision::pow(BigCount(base), exponent);
}

std::string to_decimal(const BigCount& value) { return value.str(); }

std::string to_grouped_decimal(const BigCount& value) {
  std::string digits = value.str();
  std::string sign;
  if (!digits.empty() && digits.front() == '-') {
    sign = "-";
    digits.erase(digits.begin());
  }
  std::string out;
  out.reserve(digits.size() + digits.size() / 3);
  const std::size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (i - lead) % 3 == 0 && i >= lead) out.push_back(',');
    out.push_back(digits[i]);
  }
  return sign + out;
}

BigCount parse_big_count(std::string_view text) {
  std::string digits;
  for (char c : text) {
    if (c == ',') continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(Errc::kParse, "not a decimal count: '" + std::string(text) + "'");
    }
    digits.push_back(c);
  }
  if (digits.empty()) throw Error(Errc::kParse, "empty count");
  return BigCount(digits);
}

}  // namespace nilloops
