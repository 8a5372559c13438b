#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "welter/padic.hpp"

using namespace welter;

TEST(Base, RejectsBelowTwo) {
  EXPECT_THROW(Base(0), std::invalid_argument);
  EXPECT_THROW(Base(1), std::invalid_argument);
  EXPECT_NO_THROW(Base(2));
  EXPECT_THROW(oplus(1, 2, Base(1)), std::invalid_argument);
}

TEST(Oplus, Examples) {
  for (Nat x : {0, 1, 17, 242}) EXPECT_EQ(oplus(x, 0, Base(3)), x);
  EXPECT_EQ(oplus(4, 3, Base(2)), 7u);
  EXPECT_EQ(oplus(5, 7, Base(3)), 0u);  // (2,1) + (1,2) = (0,0) mod 3
}

TEST(Ominus, Examples) {
  const Base three(3);
  // (0,0) (-) 1 = (p-1, 0)
  EXPECT_EQ(ominus(0, 1, three), 2u);
  EXPECT_EQ(truncate(static_cast<std::int64_t>(ominus(0, 1, three)), 2, three), 2u);
  // (0,0) (-) p^2 = (0,0) after truncation to two digits
  EXPECT_EQ(truncate(static_cast<std::int64_t>(ominus(0, 9, three)), 2, three), 0u);
  // (0,0) - 1 = (p-1, p-1): ordinary subtraction, then truncation
  EXPECT_EQ(truncate(-1, 2, three), 8u);
  for (Nat x : {0, 5, 80}) EXPECT_EQ(ominus(x, x, three), 0u);
}

TEST(Ominus, ZeroOnlyForEqualArguments) {
  for (Nat x = 0; x < 60; ++x)
    for (Nat y = 0; y < 60; ++y) EXPECT_EQ(ominus(x, y, Base(4)) == 0, x == y);
}

TEST(BorrowMask, Examples) {
  for (Nat p = 2; p < 8; ++p) EXPECT_EQ(borrow_mask(1, Base(p)), 1u);
  EXPECT_EQ(borrow_mask(4, Base(2)), 7u);
  EXPECT_EQ(borrow_mask(9, Base(3)), 13u);
  EXPECT_THROW(borrow_mask(0, Base(2)), std::invalid_argument);
}

TEST(BorrowMask, AgreesWithBorrowFreeDecrement) {
  for (Nat p = 2; p <= 7; ++p)
    for (Nat x = 1; x < 2000; ++x) ASSERT_EQ(borrow_mask(x, Base(p)), ominus(x, x - 1, Base(p))) << x << " p=" << p;
}

TEST(BorrowMask, RunningSumCountsUp) {
  // (+)_{j=1..x} N(j) = x: digit L of the left side counts multiples of p^L up to x, mod p.
  for (Nat p = 2; p <= 6; ++p) {
    Nat acc = 0;
    for (Nat x = 1; x <= 1000; ++x) {
      acc = oplus(acc, borrow_mask(x, Base(p)), Base(p));
      ASSERT_EQ(acc, x) << "p=" << p;
    }
  }
}

TEST(Ordp, Examples) {
  EXPECT_TRUE(ordp(0, Base(5)).is_infinite());
  EXPECT_EQ(ordp(12, Base(2)), Order::finite(2));
  EXPECT_EQ(ordp(12, Base(3)), Order::finite(1));
  EXPECT_LT(Order::finite(40), Order::infinite());
  EXPECT_THROW((void)Order::infinite().value(), std::logic_error);
}

TEST(TopDigitLess, Examples) {
  const std::vector<Nat> a{0, 3};
  EXPECT_FALSE(top_digit_less(a, a));
  EXPECT_TRUE(top_digit_less(std::vector<Nat>{0, 3}, std::vector<Nat>{1, 3}));
  EXPECT_TRUE(top_digit_less(std::vector<Nat>{5}, std::vector<Nat>{0, 1}));
  EXPECT_EQ(top_difference(std::vector<Nat>{5}, std::vector<Nat>{0, 1}), 1);
  EXPECT_EQ(top_difference(a, std::vector<Nat>{0, 3, 0}), -1);
}

TEST(TopDigitLess, StrictTotalOrder) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Nat> entry(0, 4);
  std::uniform_int_distribution<std::size_t> len(0, 4);
  auto draw = [&] {
    std::vector<Nat> v(len(rng));
    for (auto& e : v) e = entry(rng);
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  for (int trial = 0; trial < 5000; ++trial) {
    const auto a = draw(), b = draw(), c = draw();
    const bool ab = top_digit_less(a, b), ba = top_digit_less(b, a);
    ASSERT_FALSE(ab && ba);
    ASSERT_EQ(ab || ba, a != b);
    if (ab && top_digit_less(b, c)) {
      ASSERT_TRUE(top_digit_less(a, c));
    }
  }
}

TEST(DigitSeq, RoundTrip) {
  for (Nat p = 2; p <= 7; ++p)
    for (Nat x = 0; x < 1000000; x += 997) {
      const auto d = DigitSeq::from_value(x, Base(p));
      ASSERT_EQ(d.value(), x);
      if (!d.empty()) {
        ASSERT_NE(d[d.size() - 1], 0u);
      }
      for (std::size_t L = 0; L < d.size(); ++L) ASSERT_EQ(d[L], digit(x, static_cast<unsigned>(L), Base(p)));
    }
  EXPECT_THROW(DigitSeq::from_digits({1, 3}, Base(3)), std::invalid_argument);
  EXPECT_EQ(DigitSeq::from_digits({1, 2, 0, 0}, Base(3)).size(), 2u);
}

TEST(CarryFree, SubtractionInvertsAddition) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Nat> val(0, 1u << 30);
  for (Nat p = 2; p <= 9; ++p)
    for (int i = 0; i < 2000; ++i) {
      const Nat x = val(rng), y = val(rng);
      ASSERT_EQ(ominus(oplus(x, y, Base(p)), y, Base(p)), x);
      ASSERT_EQ(oplus(x, y, Base(p)), oplus(y, x, Base(p)));
    }
}
