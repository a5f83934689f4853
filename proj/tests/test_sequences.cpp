#include "support/oracle.hpp"

#include <golden/errors.hpp>
#include <golden/sequences.hpp>

#include <gtest/gtest.h>

using golden::BigInt;

TEST(Sequences, SpotValues) {
  EXPECT_EQ(golden::fib(10), 55);
  EXPECT_EQ(golden::lucas(10), 123);
  EXPECT_EQ(golden::fib(-5), 5);
  EXPECT_EQ(golden::lucas(-3), -4);
  EXPECT_EQ(golden::fib(0), 0);
  EXPECT_EQ(golden::lucas(0), 2);
  EXPECT_EQ(golden::fib(-1), 1);
  EXPECT_EQ(golden::fib(-2), -1);
}

TEST(Sequences, MatchesRecurrenceOracle) {
  for (long n = -600; n <= 600; ++n) {
    ASSERT_EQ(golden::fib(n), oracle::fib(n)) << "n=" << n;
    ASSERT_EQ(golden::lucas(n), oracle::lucas(n)) << "n=" << n;
  }
}

TEST(Sequences, CacheAgreesWithDoubling) {
  for (long n = -golden::kCacheLimit - 3; n <= golden::kCacheLimit + 3; ++n) {
    ASSERT_EQ(golden::fib(n), golden::fib_uncached(n)) << n;
    ASSERT_EQ(golden::lucas(n), golden::lucas_uncached(n)) << n;
    ASSERT_EQ(golden::fib_pair(n), golden::fib_pair_uncached(n)) << n;
  }
}

TEST(Sequences, NegativeIndexSignRules) {
  for (long n = 0; n <= 200; ++n) {
    BigInt sign_f = (n % 2 == 1) ? 1 : -1;
    BigInt sign_l = (n % 2 == 0) ? 1 : -1;
    ASSERT_EQ(golden::fib(-n), sign_f * golden::fib(n));
    ASSERT_EQ(golden::lucas(-n), sign_l * golden::lucas(n));
  }
}

TEST(Sequences, LargeIndexAgainstOracle) {
  for (long n : {1000L, 1001L, 4097L, -2049L, 9999L}) {
    EXPECT_EQ(golden::fib(n), oracle::fib(n)) << n;
    EXPECT_EQ(golden::lucas(n), oracle::lucas(n)) << n;
  }
}

TEST(Sequences, FibPairIsConsecutive) {
  for (long n = -40; n <= 40; ++n) {
    auto [prev, cur] = golden::fib_pair(n);
    EXPECT_EQ(prev, oracle::fib(n - 1));
    EXPECT_EQ(cur, oracle::fib(n));
  }
}

TEST(Sequences, Cassini) {
  for (long n = -300; n <= 300; ++n) {
    BigInt want = (n % 2 == 0) ? 1 : -1;
    ASSERT_EQ(golden::fib(n - 1) * golden::fib(n + 1) - golden::fib(n) * golden::fib(n), want);
  }
}

TEST(Sequences, GibonacciFollowsRecurrence) {
  golden::GibonacciSeed seed(2, 1);
  for (long k = -30; k <= 30; ++k) {
    EXPECT_EQ(golden::gibonacci(seed, k), golden::lucas(k));
  }
  golden::GibonacciSeed other(-3, 7);
  oracle::Recurrence g(-3, 7);
  for (long k = -40; k <= 40; ++k) {
    EXPECT_EQ(golden::gibonacci(other, k), g(k)) << k;
  }
}

TEST(Sequences, ZeroSeedRejected) {
  EXPECT_THROW(golden::GibonacciSeed(0, 0), golden::InvalidSeed);
}
