#pragma once

// Fibonacci, Lucas and Fibonacci-like ("gibonacci") numbers at any integer
// index, exact.
//
// Values for |n| <= kCacheLimit come from a table built once on first use;
// everything else is computed by fast doubling. The *_uncached variants skip
// the table and must return identical values.

#include <golden/numeric.hpp>

#include <utility>

namespace golden {

inline constexpr long kCacheLimit = 512;

/// Seeds G(0), G(1) of a sequence with G(k) = G(k-1) + G(k-2).
struct GibonacciSeed {
  BigInt g0;
  BigInt g1;

  /// Throws InvalidSeed when both seeds are zero.
  GibonacciSeed(BigInt g0, BigInt g1);

  friend bool operator==(const GibonacciSeed&, const GibonacciSeed&) = default;
};

BigInt fib(long n);
BigInt lucas(long n);

/// (F(n-1), F(n)) in one doubling pass.
std::pair<BigInt, BigInt> fib_pair(long n);

/// G(k) = g1*F(k) + g0*F(k-1).
BigInt gibonacci(const GibonacciSeed& seed, long k);

BigInt fib_uncached(long n);
BigInt lucas_uncached(long n);
std::pair<BigInt, BigInt> fib_pair_uncached(long n);

}  // namespace golden
