#include "support.hpp"

#include <gmpxx.h>

#include <numeric>

namespace support {

using golden::Expr;
using golden::NodeKind;

long Gen::range(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t reject_below = (0 - span) % span;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x < reject_below);
  return lo + static_cast<long>(x % span);
}

golden::Rational Gen::rational(long max_num, long max_den) {
  return golden::make_rational(golden::BigInt(range(-max_num, max_num)),
                               golden::BigInt(range(1, max_den)));
}

golden::GoldenNum Gen::golden() {
  // Mostly small, sometimes large, sometimes zero in one slot.
  auto coord = [&]() -> golden::Rational {
    int roll = static_cast<int>(range(0, 9));
    if (roll == 0) return 0;
    if (roll == 1) return rational(1'000'000'000, 1'000'000);
    return rational();
  };
  return golden::GoldenNum(coord(), coord());
}

golden::GoldenNum Gen::nonzero_golden() {
  for (;;) {
    auto x = golden();
    if (!x.is_zero()) return x;
  }
}

Expr Gen::leaf() {
  static const std::vector<std::string> names = {"p", "q", "r", "x", "y", "n", "k", "j"};
  switch (range(0, 6)) {
    case 0:
    case 1: return Expr::integer(range(0, 20));
    case 2: {
      long den = range(2, 9);
      long num = range(1, 30);
      while (std::gcd(num, den) != 1) ++num;
      return Expr::rational(golden::make_rational(num, den));
    }
    case 3:
    case 4: return Expr::var(pick(names));
    case 5: return Expr::alpha();
    default: return coin() ? Expr::beta() : Expr::sqrt5();
  }
}

Expr Gen::expr(int depth) {
  if (depth <= 0 || coin(20)) return leaf();
  auto sub = [&] { return expr(depth - 1); };
  switch (range(0, 11)) {
    case 0: return Expr::neg(sub());
    case 1: return Expr::add(sub(), sub());
    case 2: return Expr::sub(sub(), sub());
    case 3: return Expr::mul(sub(), sub());
    case 4: return Expr::div(sub(), sub());
    case 5: return Expr::pow(sub(), sub());
    case 6: return Expr::fib(sub());
    case 7: return Expr::lucas(sub());
    case 8: return Expr::gib(sub());
    case 9: return Expr::binom(sub(), sub());
    case 10: return Expr::sum(coin() ? "j" : "i", sub(), sub(), sub());
    default: return leaf();
  }
}

namespace {

void variants(const Expr& e, bool in_exponent, std::vector<Expr>& out) {
  if (!in_exponent) {
    switch (e.kind()) {
      case NodeKind::Add: out.push_back(Expr::sub(e.child(0), e.child(1))); break;
      case NodeKind::Sub: out.push_back(Expr::add(e.child(0), e.child(1))); break;
      case NodeKind::Neg: out.push_back(e.child(0)); break;
      default: break;
    }
  }
  if (e.kind() == NodeKind::Fib || e.kind() == NodeKind::Lucas || e.kind() == NodeKind::Gib) {
    out.push_back(e.with_children({Expr::add(e.child(0), Expr::integer(1))}));
  }
  auto kids = e.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    bool exponent = in_exponent || (e.kind() == NodeKind::Pow && i == 1);
    std::vector<Expr> inner;
    variants(kids[i], exponent, inner);
    for (auto& v : inner) {
      std::vector<Expr> copy(kids.begin(), kids.end());
      copy[i] = std::move(v);
      out.push_back(e.with_children(std::move(copy)));
    }
  }
}

}  // namespace

std::vector<golden::IdentityAst> single_mutations(const golden::IdentityAst& identity) {
  std::vector<golden::IdentityAst> out;
  std::vector<Expr> side;
  variants(identity.lhs, false, side);
  for (auto& v : side) out.push_back({v, identity.rhs, identity.constraints});
  side.clear();
  variants(identity.rhs, false, side);
  for (auto& v : side) out.push_back({identity.lhs, v, identity.constraints});
  return out;
}

golden::IdentityEntry with_dsl(const golden::IdentityEntry& base, const std::string& dsl) {
  return golden::make_entry(base.id + "'", base.family, dsl, base.int_params, base.rat_params,
                            base.constraints, base.anchor, base.series_var, base.order_var,
                            base.series_kind);
}

}  // namespace support
