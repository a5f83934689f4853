#include "support/support.hpp"

#include <golden/catalog.hpp>
#include <golden/errors.hpp>
#include <golden/expr.hpp>

#include <gtest/gtest.h>

using golden::Expr;
using golden::NodeKind;

TEST(Parser, Precedence) {
  EXPECT_EQ(golden::parse_expr("1+2*3"),
            Expr::add(Expr::integer(1), Expr::mul(Expr::integer(2), Expr::integer(3))));
  EXPECT_EQ(golden::parse_expr("-x^2"), Expr::neg(Expr::pow(Expr::var("x"), Expr::integer(2))));
  EXPECT_EQ(golden::parse_expr("(-1)^n"),
            Expr::pow(Expr::neg(Expr::integer(1)), Expr::var("n")));
  EXPECT_EQ(golden::parse_expr("a^b^c"),
            Expr::pow(Expr::var("a"), Expr::pow(Expr::var("b"), Expr::var("c"))));
  EXPECT_EQ(golden::parse_expr("a-b-c"),
            Expr::sub(Expr::sub(Expr::var("a"), Expr::var("b")), Expr::var("c")));
  EXPECT_EQ(golden::parse_expr("2^-1"), Expr::pow(Expr::integer(2), Expr::neg(Expr::integer(1))));
}

TEST(Parser, RationalLiteralVersusDivision) {
  Expr rat = golden::parse_expr("1/2");
  EXPECT_EQ(rat.kind(), NodeKind::RatLiteral);
  EXPECT_EQ(rat.literal(), golden::Rational(1, 2));
  EXPECT_EQ(golden::parse_expr("1 / 2").kind(), NodeKind::Div);
  EXPECT_EQ(golden::parse_expr("2/x").kind(), NodeKind::Div);
  EXPECT_EQ(golden::format(golden::parse_expr("1 / 2")), "1 / 2");
  EXPECT_EQ(golden::format(golden::parse_expr("1/2")), "1/2");
}

TEST(Parser, FunctionsAndSums) {
  Expr e = golden::parse_expr("sum(j=0..n, binom(n,j)*F(p*j+q))");
  ASSERT_EQ(e.kind(), NodeKind::Sum);
  EXPECT_EQ(e.name(), "j");
  EXPECT_EQ(e.child(2).child(0).kind(), NodeKind::Binom);
  EXPECT_EQ(e.child(2).child(1).kind(), NodeKind::Fib);
  EXPECT_EQ(golden::format(e), "sum(j=0..n, binom(n,j)*F(p*j+q))");
  EXPECT_EQ(golden::parse_expr("G(k) + L(k) + alpha*beta - sqrt5").kind(), NodeKind::Sub);
}

TEST(Parser, Identity) {
  auto id = golden::parse_identity("F(p+q) = F(p)*F(q+1) + F(p-1)*F(q)");
  EXPECT_EQ(golden::format(id), "F(p+q) = F(p)*F(q+1)+F(p-1)*F(q)");
  auto parsed = golden::parse("F(n) # trailing comment");
  EXPECT_TRUE(std::holds_alternative<Expr>(parsed));
  EXPECT_TRUE(std::holds_alternative<golden::IdentityAst>(golden::parse("1 = 1")));
}

TEST(Parser, Constraints) {
  auto cs = golden::parse_constraints("p != 0, n >= 0, z = 1");
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0].rel, golden::Relation::Ne);
  EXPECT_EQ(cs[1].rel, golden::Relation::Ge);
  EXPECT_EQ(cs[2].rel, golden::Relation::Eq);
  EXPECT_EQ(golden::format(cs), "p != 0, n >= 0, z == 1");
  EXPECT_TRUE(golden::parse_constraints("").empty());
}

TEST(Parser, FreeVariables) {
  auto vars = golden::free_variables(golden::parse_expr("sum(j=0..n, F(p*j+q)*x^j) + j"));
  EXPECT_EQ(vars, (std::set<std::string>{"j", "n", "p", "q", "x"}));
  auto bound = golden::free_variables(golden::parse_expr("sum(j=0..n, j)"));
  EXPECT_EQ(bound, (std::set<std::string>{"n"}));
}

TEST(Parser, CatalogRoundTrip) {
  for (const auto& e : golden::load_catalog()) {
    std::string once = golden::format(e.ast);
    auto again = golden::parse_identity(once);
    EXPECT_EQ(again.lhs, e.ast.lhs) << e.id;
    EXPECT_EQ(again.rhs, e.ast.rhs) << e.id;
    EXPECT_EQ(golden::format(again), once) << e.id;
  }
}

TEST(Parser, FuzzedRoundTrip) {
  support::Gen gen(2024);
  for (int i = 0; i < 1000; ++i) {
    Expr e = gen.expr(6);
    std::string text = golden::format(e);
    Expr back = golden::parse_expr(text);
    ASSERT_EQ(back, e) << text;
    ASSERT_EQ(golden::format(back), text);
  }
}

class Malformed : public ::testing::TestWithParam<const char*> {};

TEST_P(Malformed, RaisesWithPosition) {
  try {
    golden::parse(GetParam());
    FAIL() << "accepted: " << GetParam();
  } catch (const golden::SyntaxError& e) {
    EXPECT_GE(e.line(), 1);
    EXPECT_GE(e.column(), 1);
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, Malformed,
                         ::testing::Values("", "1 +", "* 2", "(1+2", "1+2)", "F(", "F()", "F(1,2)",
                                           "binom(1)", "binom(1,2,3)", "sum(j=0, j)",
                                           "sum(j=0..5 j)", "sum(0=0..1, 1)", "sum(F=0..1, 1)",
                                           "1/0", "2 $ 3", "x ! y", "1 . 2", "1 = 2 = 3",
                                           "= 3", "alpha beta", "3x", "(", ")", "1^", "--",
                                           "F(n) =", "L n", "sum(j=0..n, )", "1\n+\n*"));

TEST(Parser, SyntaxErrorColumn) {
  try {
    golden::parse_expr("F(n) +* 2");
    FAIL();
  } catch (const golden::SyntaxError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 7);
  }
  try {
    golden::parse_expr("1 +\n\n  )");
    FAIL();
  } catch (const golden::SyntaxError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(Parser, DeepNestingIsAnErrorNotACrash) {
  std::string deep(5000, '(');
  deep += "1";
  deep += std::string(5000, ')');
  EXPECT_THROW(golden::parse_expr(deep), golden::SyntaxError);
  std::string negs(5000, '-');
  EXPECT_THROW(golden::parse_expr(negs + "1"), golden::SyntaxError);
}

TEST(Parser, IdentityRequiresEquals) {
  EXPECT_THROW(golden::parse_identity("F(3)"), golden::SyntaxError);
  EXPECT_THROW(golden::parse_expr("F(3) = 2"), golden::SyntaxError);
}
