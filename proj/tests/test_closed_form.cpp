#include <gtest/gtest.h>

#include "nilloops/aut_action.hpp"
#include "nilloops/closed_form.hpp"
#include "nilloops/error.hpp"
#include "nilloops/gfp.hpp"

using namespace nilloops;

TEST(Pred, Examples) {
  EXPECT_TRUE(pred(1).empty());
  EXPECT_EQ(pred(6), (std::vector<int>{2, 3}));
  EXPECT_EQ(pred(12), (std::vector<int>{4, 6}));
  EXPECT_EQ(pred(7), (std::vector<int>{1}));
  EXPECT_EQ(pred(30), (std::vector<int>{6, 10, 15}));
}

TEST(Count2q, TableValues) {
  EXPECT_EQ(count_2q(3), 3);
  EXPECT_EQ(count_2q(5), 1044);
  EXPECT_EQ(count_2q(7), 178962784);
  EXPECT_EQ(to_decimal(count_2q(11)), "123794003928541545927226368");
  EXPECT_EQ(to_decimal(count_2q(13)), "453709822561251284623981727533724162048");
  EXPECT_EQ(to_decimal(count_2q(17)),
            "110427941548649020598956093796432407322294493291283427083203517192617984");
}

TEST(Count2q, MatchesOrbitCounting) {
  for (int q : {3, 5, 7, 11}) {
    Loop zq = cyclic_group(q);
    EXPECT_EQ(count_2q(q), iso_class_count(CocycleSpace(zq, 2), false)) << q;
  }
}

TEST(Count2q, RejectsNonOddPrimes) {
  for (int q : {-3, 0, 1, 2, 4, 9, 15}) {
    try {
      count_2q(q);
      ADD_FAILURE() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kNotOddPrime);
    }
  }
  EXPECT_THROW(asymptotic_ratio(4), Error);
}

TEST(AsymptoticRatio, SmallValue) {
  EXPECT_EQ(asymptotic_ratio(3), BigRatio(3, 2));
  EXPECT_EQ(to_decimal(asymptotic_ratio(3), 3), "1.500");
}

TEST(AsymptoticRatio, WithinSqueezeBound) {
  for (int q = 3; q <= 37; ++q) {
    if (!is_prime(q)) continue;
    const BigRatio r = asymptotic_ratio(q);
    const BigRatio dev = r > 1 ? BigRatio(r - 1) : BigRatio(1 - r);
    EXPECT_LE(dev, squeeze_bound(q)) << q;
  }
  const BigRatio r13 = asymptotic_ratio(13);
  EXPECT_LT(BigRatio(r13 - 1), BigRatio(1, BigCount("1000000000000000")));
}

TEST(RatioDecimal, Truncates) {
  EXPECT_EQ(to_decimal(BigRatio(2, 3), 4), "0.6666");
  EXPECT_EQ(to_decimal(BigRatio(-7, 2), 1), "-3.5");
  EXPECT_EQ(to_decimal(BigRatio(5), 0), "5");
}
