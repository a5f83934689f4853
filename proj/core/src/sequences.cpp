#include <golden/errors.hpp>
#include <golden/sequences.hpp>

#include <vector>

namespace golden {

GibonacciSeed::GibonacciSeed(BigInt g0_, BigInt g1_) : g0(std::move(g0_)), g1(std::move(g1_)) {
  if (sgn(g0) == 0 && sgn(g1) == 0) throw InvalidSeed("gibonacci seeds are both zero");
}

namespace {

unsigned long magnitude(long n) {
  return n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
}

// (F(m), F(m+1)) by fast doubling:
//   F(2k)   = F(k) * L(k) = F(k) * (2F(k+1) - F(k))
//   F(2k+1) = F(k)^2 + F(k+1)^2
std::pair<BigInt, BigInt> doubling(unsigned long m) {
  BigInt f = 0;
  BigInt g = 1;
  int top = 0;
  for (unsigned long v = m; v != 0; v >>= 1) ++top;
  BigInt t;
  for (int bit = top - 1; bit >= 0; --bit) {
    t = 2 * g - f;
    t *= f;    // F(2k)
    g = g * g + f * f;  // F(2k+1)
    f.swap(t);
    if ((m >> bit) & 1UL) {
      t = f + g;
      f.swap(g);
      g.swap(t);
    }
  }
  return {f, g};
}

bool odd(unsigned long m) { return (m & 1UL) != 0; }

struct Table {
  // Index i holds the value at n = i - offset.
  static constexpr long offset = kCacheLimit + 1;
  std::vector<BigInt> fib;
  std::vector<BigInt> lucas;

  Table() : fib(2 * offset + 1), lucas(2 * offset + 1) {
    fib[offset] = 0;
    fib[offset + 1] = 1;
    lucas[offset] = 2;
    lucas[offset + 1] = 1;
    for (long n = 2; n <= offset; ++n) {
      fib[offset + n] = fib[offset + n - 1] + fib[offset + n - 2];
      lucas[offset + n] = lucas[offset + n - 1] + lucas[offset + n - 2];
    }
    for (long n = 1; n <= offset; ++n) {
      fib[offset - n] = (n % 2 == 0) ? BigInt(-fib[offset + n]) : fib[offset + n];
      lucas[offset - n] = (n % 2 == 0) ? lucas[offset + n] : BigInt(-lucas[offset + n]);
    }
  }

  static const Table& instance() {
    static const Table table;
    return table;
  }
};

bool cached(long n) { return n >= -kCacheLimit && n <= kCacheLimit; }

}  // namespace

BigInt fib_uncached(long n) {
  unsigned long m = magnitude(n);
  BigInt f = doubling(m).first;
  if (n < 0 && !odd(m)) f = -f;
  return f;
}

BigInt lucas_uncached(long n) {
  unsigned long m = magnitude(n);
  auto [f, g] = doubling(m);
  BigInt l = 2 * g - f;
  if (n < 0 && odd(m)) l = -l;
  return l;
}

std::pair<BigInt, BigInt> fib_pair_uncached(long n) {
  if (n >= 1) return doubling(static_cast<unsigned long>(n - 1));
  // n <= 0: F(n) = (-1)^(m-1) F(m), F(n-1) = (-1)^m F(m+1) with m = -n.
  unsigned long m = magnitude(n);
  auto [f, g] = doubling(m);
  if (odd(m)) {
    g = -g;
  } else {
    f = -f;
  }
  return {g, f};
}

BigInt fib(long n) {
  if (cached(n)) return Table::instance().fib[n + Table::offset];
  return fib_uncached(n);
}

BigInt lucas(long n) {
  if (cached(n)) return Table::instance().lucas[n + Table::offset];
  return lucas_uncached(n);
}

std::pair<BigInt, BigInt> fib_pair(long n) {
  if (cached(n)) {
    const auto& t = Table::instance();
    return {t.fib[n - 1 + Table::offset], t.fib[n + Table::offset]};
  }
  return fib_pair_uncached(n);
}

BigInt gibonacci(const GibonacciSeed& seed, long k) {
  auto [prev, cur] = fib_pair(k);
  return seed.g1 * cur + seed.g0 * prev;
}

}  // namespace golden
