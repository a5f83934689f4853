#include "support/oracle.hpp"

#include <golden/errors.hpp>
#include <golden/expr.hpp>

#include <gtest/gtest.h>

using golden::Env;
using golden::GoldenNum;
using golden::Rational;

namespace {

GoldenNum ev(const std::string& text, const Env& env = {}) {
  return golden::eval_ring(golden::parse_expr(text), env);
}

Env ints(std::initializer_list<std::pair<const char*, long>> vals) {
  Env env;
  for (const auto& [name, v] : vals) env.set_int(name, v);
  return env;
}

}  // namespace

TEST(Eval, Arithmetic) {
  EXPECT_EQ(ev("F(3)*F(5)+F(2)*F(4)"), GoldenNum(13));
  EXPECT_EQ(ev("1/2 + 1/3"), GoldenNum(Rational(5, 6)));
  EXPECT_EQ(ev("alpha^2 - alpha - 1"), GoldenNum());
  EXPECT_EQ(ev("(alpha - beta)^2"), GoldenNum(5));
  EXPECT_EQ(ev("1/alpha"), GoldenNum(-1, 1));
  EXPECT_EQ(ev("2^-2"), GoldenNum(Rational(1, 4)));
  EXPECT_EQ(ev("0^0"), GoldenNum(1));
}

TEST(Eval, Variables) {
  Env env = ints({{"p", 3}, {"q", 4}});
  env.set_rat("x", Rational(1, 2));
  EXPECT_EQ(ev("F(p+q)", env), GoldenNum(13));
  EXPECT_EQ(ev("x*p", env), GoldenNum(Rational(3, 2)));
  EXPECT_THROW(ev("F(x)", env), golden::NonIntegerIndex);
  EXPECT_THROW(ev("y", env), golden::EvalError);
  EXPECT_EQ(golden::to_string(env), "p=3, q=4, x=1/2");
}

TEST(Eval, SumsAndBinomials) {
  EXPECT_EQ(ev("sum(j=1..10, j)"), GoldenNum(55));
  EXPECT_EQ(ev("sum(j=3..2, j)"), GoldenNum());
  EXPECT_EQ(ev("binom(5,2)"), GoldenNum(10));
  EXPECT_EQ(ev("binom(5,7)"), GoldenNum());
  EXPECT_EQ(ev("binom(5,-1)"), GoldenNum());
  EXPECT_THROW(ev("binom(-1,0)"), golden::EvalError);
  // Nested sums with shadowing.
  EXPECT_EQ(ev("sum(j=1..3, sum(j=1..j, j))"), GoldenNum(1 + 3 + 6));
  // n=2, p=2, q=1: F1 + 2*F2 + F3 = 5 = F(5).
  EXPECT_EQ(ev("sum(j=0..n, binom(n,j)*F(p)^j*F(p-1)^(n-j)*F(j+q))",
               ints({{"n", 2}, {"p", 2}, {"q", 1}})),
            GoldenNum(Rational(oracle::fib(5))));
}

TEST(Eval, Gibonacci) {
  Env env = ints({{"k", 5}});
  EXPECT_THROW(ev("G(k)", env), golden::EvalError);
  env.set_seed(golden::GibonacciSeed(2, 1));
  EXPECT_EQ(ev("G(k)", env), GoldenNum(11));
}

TEST(Eval, Errors) {
  EXPECT_THROW(ev("1/0"), golden::SyntaxError);
  EXPECT_THROW(ev("1/(1-1)"), golden::ZeroDivision);
  EXPECT_THROW(ev("0^-1"), golden::SingularPower);
  EXPECT_THROW(ev("(F(0)*5)^(0-2)"), golden::SingularPower);
  EXPECT_THROW(ev("F(10000000)"), golden::IndexOutOfRange);
  EXPECT_THROW(ev("2^(1/2)"), golden::NonIntegerIndex);
  EXPECT_THROW(ev("F(alpha)"), golden::NonIntegerIndex);
  EXPECT_THROW(ev("F(3/2)"), golden::NonIntegerIndex);
  EXPECT_EQ(ev("F(6/2)"), GoldenNum(2));
  EXPECT_THROW(ev("sum(j=0..10000000, j)"), golden::IndexOutOfRange);
}

TEST(Eval, IntegerPath) {
  Env env = ints({{"n", 4}});
  EXPECT_EQ(golden::eval_int(golden::parse_expr("(-1)^(n-1)*F(n)"), env), -3);
  EXPECT_EQ(golden::eval_int(golden::parse_expr("(-1)^(0-3)"), env), -1);
  EXPECT_THROW(golden::eval_int(golden::parse_expr("7/2"), env), golden::NonIntegerIndex);
  EXPECT_EQ(golden::eval_int(golden::parse_expr("8 / 2"), env), 4);
}

TEST(Eval, Constraints) {
  Env env = ints({{"p", 0}, {"n", 3}});
  auto cs = golden::parse_constraints("p != 0, n >= 0");
  EXPECT_FALSE(golden::holds(cs, env));
  env.set_int("p", 2);
  EXPECT_TRUE(golden::holds(cs, env));
  EXPECT_THROW(golden::holds(golden::parse_constraints("alpha > 1")[0], env), golden::EvalError);
  EXPECT_TRUE(golden::holds(golden::parse_constraints("alpha != 1")[0], env));
}
