#include <golden/errors.hpp>
#include <golden/expr.hpp>

#include <utility>
#include <vector>

namespace golden {

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Env& env) : env_(env) {}

  BigInt integer(const Expr& e) {
    switch (e.kind()) {
      case NodeKind::IntLiteral: return e.literal().get_num();
      case NodeKind::RatLiteral:
        if (!is_integer(e.literal())) {
          throw NonIntegerIndex("non-integer literal " + to_string(e.literal()) +
                                " in integer position");
        }
        return e.literal().get_num();
      case NodeKind::Var: {
        if (const BigInt* v = lookup_int(e.name())) return *v;
        if (const Rational* r = env_.find_rat(e.name())) {
          if (is_integer(*r)) return r->get_num();
          throw NonIntegerIndex("variable '" + e.name() + "' = " + to_string(*r) +
                                " used in integer position");
        }
        throw EvalError("unbound variable '" + e.name() + "'");
      }
      case NodeKind::Neg: return -integer(e.child(0));
      case NodeKind::Add: return integer(e.child(0)) + integer(e.child(1));
      case NodeKind::Sub: return integer(e.child(0)) - integer(e.child(1));
      case NodeKind::Mul: return integer(e.child(0)) * integer(e.child(1));
      case NodeKind::Div: {
        BigInt num = integer(e.child(0));
        BigInt den = integer(e.child(1));
        if (sgn(den) == 0) throw ZeroDivision("division by zero");
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
          throw NonIntegerIndex("inexact division " + num.get_str() + "/" + den.get_str() +
                                " in integer position");
        }
        BigInt q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
      }
      case NodeKind::Pow: {
        BigInt base = integer(e.child(0));
        long n = exponent(e.child(1));
        if (n >= 0) return pow(base, static_cast<unsigned long>(n));
        if (sgn(base) == 0) throw SingularPower("0 raised to a negative power");
        if (base == 1) return base;
        if (base == -1) return (n % 2 == 0) ? BigInt(1) : BigInt(-1);
        throw NonIntegerIndex("negative power of " + base.get_str() + " in integer position");
      }
      case NodeKind::Fib: return fib(index(e.child(0)));
      case NodeKind::Lucas: return lucas(index(e.child(0)));
      case NodeKind::Gib: return gibonacci(seed(), index(e.child(0)));
      case NodeKind::Binom: return binomial(e);
      case NodeKind::Sum: {
        BigInt total = 0;
        for_each_term(e, [&](const Expr& body) { total += integer(body); });
        return total;
      }
      case NodeKind::Alpha:
      case NodeKind::Beta:
      case NodeKind::Sqrt5: throw NonIntegerIndex("irrational constant in integer position");
    }
    throw EvalError("unknown node");
  }

  GoldenNum ring(const Expr& e) {
    switch (e.kind()) {
      case NodeKind::IntLiteral:
      case NodeKind::RatLiteral: return GoldenNum(e.literal());
      case NodeKind::Var: {
        if (const BigInt* v = lookup_int(e.name())) return GoldenNum(Rational(*v));
        if (const Rational* r = env_.find_rat(e.name())) return GoldenNum(*r);
        throw EvalError("unbound variable '" + e.name() + "'");
      }
      case NodeKind::Neg: return -ring(e.child(0));
      case NodeKind::Add: return ring(e.child(0)) + ring(e.child(1));
      case NodeKind::Sub: return ring(e.child(0)) - ring(e.child(1));
      case NodeKind::Mul: return ring(e.child(0)) * ring(e.child(1));
      case NodeKind::Div: return ring_div(ring(e.child(0)), ring(e.child(1)));
      case NodeKind::Pow: {
        long n = exponent(e.child(1));
        const Expr& base = e.child(0);
        if (base.kind() == NodeKind::Alpha) return alpha_pow(n);
        if (base.kind() == NodeKind::Beta) return beta_pow(n);
        return ring_pow(ring(base), n);
      }
      case NodeKind::Fib: return GoldenNum(Rational(fib(index(e.child(0)))));
      case NodeKind::Lucas: return GoldenNum(Rational(lucas(index(e.child(0)))));
      case NodeKind::Gib: return GoldenNum(Rational(gibonacci(seed(), index(e.child(0)))));
      case NodeKind::Binom: return GoldenNum(Rational(binomial(e)));
      case NodeKind::Sum: {
        GoldenNum total;
        for_each_term(e, [&](const Expr& body) { total += ring(body); });
        return total;
      }
      case NodeKind::Alpha: return GoldenNum::alpha();
      case NodeKind::Beta: return GoldenNum::beta();
      case NodeKind::Sqrt5: return GoldenNum::sqrt5();
    }
    throw EvalError("unknown node");
  }

 private:
  const BigInt* lookup_int(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it->first == name) return &it->second;
    }
    return env_.find_int(name);
  }

  long index(const Expr& e) { return to_index(integer(e), kMaxIndex); }

  long exponent(const Expr& e) {
    try {
      return to_index(integer(e), kMaxIndex);
    } catch (const NonIntegerIndex& err) {
      throw NonIntegerIndex(std::string("exponent must be an integer: ") + err.what());
    }
  }

  const GibonacciSeed& seed() const {
    if (!env_.seed()) throw EvalError("G(.) used without a gibonacci seed");
    return *env_.seed();
  }

  BigInt binomial(const Expr& e) {
    BigInt n = integer(e.child(0));
    BigInt k = integer(e.child(1));
    if (sgn(n) < 0) throw EvalError("binom with negative upper argument " + n.get_str());
    if (sgn(k) < 0 || k > n) return 0;
    long nn = to_index(n, kMaxIndex);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(nn),
                 static_cast<unsigned long>(k.get_si()));
    return out;
  }

  template <typename F>
  void for_each_term(const Expr& e, F&& f) {
    BigInt lo = integer(e.child(0));
    BigInt hi = integer(e.child(1));
    if (hi < lo) return;
    BigInt count = hi - lo + 1;
    if (count > kMaxSumTerms) {
      throw IndexOutOfRange("sum over " + count.get_str() + " terms exceeds limit");
    }
    long first = to_index(lo, kMaxIndex + kMaxSumTerms);
    long n = count.get_si();
    bound_.emplace_back(&e.name(), BigInt(first));
    try {
      for (long i = 0; i < n; ++i) {
        bound_.back().second = first + i;
        f(e.child(2));
      }
    } catch (...) {
      bound_.pop_back();
      throw;
    }
    bound_.pop_back();
  }

  const Env& env_;
  std::vector<std::pair<const std::string*, BigInt>> bound_;
};

}  // namespace

BigInt eval_int(const Expr& e, const Env& env) { return Evaluator(env).integer(e); }

GoldenNum eval_ring(const Expr& e, const Env& env) { return Evaluator(env).ring(e); }

bool holds(const Constraint& c, const Env& env) {
  GoldenNum l = eval_ring(c.lhs, env);
  GoldenNum r = eval_ring(c.rhs, env);
  switch (c.rel) {
    case Relation::Eq: return l == r;
    case Relation::Ne: return !(l == r);
    default: break;
  }
  if (!l.is_rational() || !r.is_rational()) {
    throw EvalError("ordering comparison on irrational values in '" + format(c) + "'");
  }
  int cmp_result = cmp(l.a(), r.a());
  switch (c.rel) {
    case Relation::Lt: return cmp_result < 0;
    case Relation::Le: return cmp_result <= 0;
    case Relation::Gt: return cmp_result > 0;
    case Relation::Ge: return cmp_result >= 0;
    default: return false;
  }
}

bool holds(std::span<const Constraint> constraints, const Env& env) {
  for (const auto& c : constraints) {
    if (!holds(c, env)) return false;
  }
  return true;
}

}  // namespace golden
