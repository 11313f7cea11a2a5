#include "nilloops/closed_form.hpp"

#include <algorithm>
#include <numeric>

#include "nilloops/error.hpp"
#include "nilloops/gfp.hpp"

namespace nilloops {
namespace {

void check_odd_prime(int q) {
  if (q < 3 || !is_prime(static_cast<std::uint64_t>(q))) {
    throw Error(Errc::kNotOddPrime, std::to_string(q) + " is not an odd prime");
  }
}

}  // namespace

std::vector<int> pred(int d) {
  std::vector<int> out;
  for (int r = 2; r <= d; ++r) {
    if (d % r == 0 && is_prime(static_cast<std::uint64_t>(r))) out.push_back(d / r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigCount count_2q(int q) {
  check_odd_prime(q);
  const unsigned step = static_cast<unsigned>(q - 2);
  BigCount total = 0;
  for (int d = 1; d <= q - 1; ++d) {
    if ((q - 1) % d != 0) continue;
    const std::vector<int> preds = pred(d);
    BigCount term = big_pow(2, step * d);
    for (std::size_t mask = 1; mask < (std::size_t{1} << preds.size()); ++mask) {
      int g = 0;
      int bits = 0;
      for (std::size_t i = 0; i < preds.size(); ++i) {
        if (mask & (std::size_t{1} << i)) {
          g = std::gcd(g, preds[i]);
          ++bits;
        }
      }
      const BigCount inner = big_pow(2, step * g);
      if (bits % 2 == 1) {
        term -= inner;
      } else {
        term += inner;
      }
    }
    if (term < 0 || term % d != 0) {
      throw Error(Errc::kNonIntegralTerm,
                  "term for d = " + std::to_string(d) + " is " + to_decimal(term));
    }
    total += term / d;
  }
  return total;
}

BigRatio asymptotic_ratio(int q) {
  const BigCount n = count_2q(q);
  return BigRatio(n * (q - 1), big_pow(2, static_cast<unsigned>((q - 2) * (q - 1))));
}

BigRatio squeeze_bound(int q) {
  check_odd_prime(q);
  // (q-2)(q-1) is always even.
  const unsigned e = static_cast<unsigned>((q - 2) * (q - 1) / 2);
  const BigCount c = BigCount(q - 1) * (q - 1) * (q - 1);
  return BigRatio(c, big_pow(2, e));
}

std::string to_decimal(const BigRatio& value, int digits) {
  BigCount num = boost::multiprecision::numerator(value);
  const BigCount den = boost::multiprecision::denominator(value);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  std::string out = sign + to_decimal(BigCount(num / den));
  if (digits <= 0) return out;
  BigCount rem = num % den;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  return out;
}

}  // namespace nilloops
