#include "support/oracle.hpp"
#include "support/support.hpp"

#include <golden/errors.hpp>
#include <golden/golden_ring.hpp>
#include <golden/sequences.hpp>

#include <gtest/gtest.h>

using golden::GoldenNum;
using golden::Rational;

namespace {

GoldenNum from(const oracle::Golden& g) { return GoldenNum(g.p, g.q); }

}  // namespace

TEST(GoldenRing, Constants) {
  EXPECT_EQ(GoldenNum::alpha() * GoldenNum::alpha(), GoldenNum::alpha() + GoldenNum(1));
  EXPECT_EQ(GoldenNum::alpha() * GoldenNum::beta(), GoldenNum(-1));
  EXPECT_EQ(GoldenNum::alpha() + GoldenNum::beta(), GoldenNum(1));
  EXPECT_EQ(GoldenNum::sqrt5() * GoldenNum::sqrt5(), GoldenNum(5));
  EXPECT_EQ(GoldenNum::alpha() - GoldenNum::beta(), GoldenNum::sqrt5());
  EXPECT_EQ(golden::sqrt5_const(), GoldenNum(-1, 2));
}

TEST(GoldenRing, Formatting) {
  EXPECT_EQ(golden::to_string(GoldenNum(13)), "13");
  EXPECT_EQ(golden::to_string(GoldenNum(0, 1)), "alpha");
  EXPECT_EQ(golden::to_string(GoldenNum(0, -1)), "-alpha");
  EXPECT_EQ(golden::to_string(GoldenNum(2, 3)), "2 + 3*alpha");
  EXPECT_EQ(golden::to_string(GoldenNum(1, -1)), "1 - alpha");
  EXPECT_EQ(golden::to_string(GoldenNum(Rational(1, 2), Rational(-3, 4))), "1/2 - 3/4*alpha");
  EXPECT_EQ(golden::to_string(GoldenNum()), "0");
}

TEST(GoldenRing, InverseClosedForm) {
  // 1/alpha = alpha - 1, 1/sqrt5 = (2*alpha - 1)/5.
  EXPECT_EQ(golden::ring_inv(GoldenNum::alpha()), GoldenNum(-1, 1));
  EXPECT_EQ(golden::ring_inv(GoldenNum::sqrt5()), GoldenNum(Rational(-1, 5), Rational(2, 5)));
  EXPECT_THROW(golden::ring_inv(GoldenNum()), golden::ZeroDivision);
  EXPECT_THROW(golden::ring_div(GoldenNum(1), GoldenNum()), golden::ZeroDivision);
}

TEST(GoldenRing, MultiplicationMatchesHandExpansion) {
  support::Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    GoldenNum x = gen.golden();
    GoldenNum y = gen.golden();
    auto want = oracle::mul({x.a(), x.b()}, {y.a(), y.b()});
    ASSERT_EQ(x * y, from(want));
  }
}

TEST(GoldenRing, PowerMatchesRepeatedProduct) {
  support::Gen gen(12);
  for (int i = 0; i < 200; ++i) {
    GoldenNum x = gen.nonzero_golden();
    long n = gen.range(0, 12);
    ASSERT_EQ(golden::ring_pow(x, n), from(oracle::pow({x.a(), x.b()}, n)));
    ASSERT_EQ(golden::ring_pow(x, -n) * golden::ring_pow(x, n), GoldenNum(1));
  }
  EXPECT_EQ(golden::ring_pow(GoldenNum(), 0), GoldenNum(1));
  EXPECT_THROW(golden::ring_pow(GoldenNum(), -2), golden::SingularPower);
}

TEST(GoldenRing, AlphaPowCoefficients) {
  for (long n = -200; n <= 200; ++n) {
    auto [a, b] = golden::coeffs(golden::alpha_pow(n));
    ASSERT_EQ(a, Rational(oracle::fib(n - 1)));
    ASSERT_EQ(b, Rational(oracle::fib(n)));
    ASSERT_EQ(golden::alpha_pow(n), golden::ring_pow(GoldenNum::alpha(), n));
    ASSERT_EQ(golden::beta_pow(n), golden::ring_pow(GoldenNum::beta(), n));
    auto [la, lb] = golden::coeffs(golden::ring_mul(golden::alpha_pow(n), GoldenNum::sqrt5()));
    ASSERT_EQ(la, Rational(oracle::lucas(n - 1)));
    ASSERT_EQ(lb, Rational(oracle::lucas(n)));
  }
}

TEST(GoldenRing, SqrtFiveTimesAlpha) {
  // (2*alpha - 1)*alpha = alpha + 2, coefficients (L0, L1).
  EXPECT_EQ(golden::coeffs(GoldenNum::sqrt5() * GoldenNum::alpha()),
            std::make_pair(Rational(2), Rational(1)));
}

TEST(GoldenRing, FieldAxioms) {
  support::Gen gen(13);
  for (int i = 0; i < 1000; ++i) {
    GoldenNum x = gen.golden();
    GoldenNum y = gen.golden();
    GoldenNum z = gen.golden();
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x + (-x), GoldenNum());
    ASSERT_EQ(x * GoldenNum(1), x);
    if (!x.is_zero()) ASSERT_EQ(x * golden::ring_inv(x), GoldenNum(1));
  }
}

TEST(GoldenRing, ConjugateAndNorm) {
  support::Gen gen(14);
  for (int i = 0; i < 1000; ++i) {
    GoldenNum x = gen.golden();
    GoldenNum y = gen.golden();
    ASSERT_EQ(golden::conjugate(x * y), golden::conjugate(x) * golden::conjugate(y));
    ASSERT_EQ(golden::conjugate(x + y), golden::conjugate(x) + golden::conjugate(y));
    ASSERT_EQ(golden::conjugate(golden::conjugate(x)), x);
    const Rational& a = x.a();
    const Rational& b = x.b();
    ASSERT_EQ(x * golden::conjugate(x), GoldenNum(a * a + a * b - b * b));
    ASSERT_EQ(golden::norm(x), a * a + a * b - b * b);
  }
  EXPECT_EQ(golden::conjugate(GoldenNum::alpha()), GoldenNum::beta());
}

TEST(GoldenRing, DivisionClosedFormAgrees) {
  support::Gen gen(15);
  for (int i = 0; i < 1000; ++i) {
    GoldenNum x = gen.golden();
    GoldenNum y = gen.nonzero_golden();
    GoldenNum q = golden::ring_div(x, y);
    ASSERT_EQ(q, golden::ring_div_closed_form(x, y));
    ASSERT_EQ(q * y, x);
  }
}
