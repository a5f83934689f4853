#include <golden/errors.hpp>
#include <golden/sequences.hpp>
#include <golden/verifier.hpp>

#include <algorithm>

namespace golden {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPoly(std::move(v));
}

Rational RationalPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

RationalPoly RationalPoly::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return RationalPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

RationalPoly operator+(const RationalPoly& x, const RationalPoly& y) {
  std::vector<Rational> v(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.coeff(i) + y.coeff(i);
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& x, const RationalPoly& y) {
  std::vector<Rational> v(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.coeff(i) - y.coeff(i);
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& x) {
  std::vector<Rational> v = x.coeffs_;
  for (auto& c : v) c = -c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::mul_trunc(const RationalPoly& x, const RationalPoly& y,
                                     std::size_t max_degree) {
  if (x.is_zero() || y.is_zero()) return {};
  std::size_t len = std::min(x.coeffs_.size() + y.coeffs_.size() - 1, max_degree + 1);
  std::vector<Rational> v(len);
  for (std::size_t i = 0; i < x.coeffs_.size() && i < len; ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size() && i + j < len; ++j) {
      if (sgn(y.coeffs_[j]) == 0) continue;
      v[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const RationalPoly& x, const RationalPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  return RationalPoly::mul_trunc(x, y, x.coeffs_.size() + y.coeffs_.size());
}

std::string to_string(const RationalPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

bool mentions(const Expr& e, const std::string& var) {
  if (e.kind() == NodeKind::Var && e.name() == var) return true;
  for (const auto& c : e.children()) {
    if (mentions(c, var)) return true;
  }
  return false;
}

RationalPoly inverse(const RationalPoly& f, std::size_t max_degree) {
  if (sgn(f.coeff(0)) == 0) {
    throw EvalError("series with zero constant term is not invertible");
  }
  Rational inv0 = 1 / f.coeff(0);
  std::vector<Rational> g(max_degree + 1);
  g[0] = inv0;
  for (std::size_t k = 1; k <= max_degree; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k && i < f.coeffs().size(); ++i) acc += f.coeffs()[i] * g[k - i];
    g[k] = -inv0 * acc;
  }
  return RationalPoly(std::move(g));
}

RationalPoly power(const RationalPoly& base, long n, std::size_t max_degree) {
  if (base.is_zero()) {
    if (n == 0) return RationalPoly::constant(1);
    if (n < 0) throw SingularPower("0 raised to a negative power");
    return {};
  }
  // Single term c*y^d.
  const auto& cs = base.coeffs();
  auto nonzero = std::count_if(cs.begin(), cs.end(), [](const Rational& c) { return sgn(c) != 0; });
  if (nonzero == 1) {
    std::size_t d = cs.size() - 1;
    if (d == 0) return RationalPoly::constant(pow(cs[0], n));
    if (n < 0) throw EvalError("negative power of a series without constant term");
    unsigned long deg = static_cast<unsigned long>(n) * d;
    if (deg > max_degree) return {};
    return RationalPoly::monomial(pow(cs[d], n), deg);
  }
  RationalPoly b = n < 0 ? inverse(base, max_degree) : base.truncated(max_degree);
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  RationalPoly result = RationalPoly::constant(1);
  while (k > 0) {
    if (k & 1) result = RationalPoly::mul_trunc(result, b, max_degree);
    k >>= 1;
    if (k > 0) b = RationalPoly::mul_trunc(b, b, max_degree);
  }
  return result;
}

RationalPoly series(const Expr& e, const Env& env, const std::string& var,
                    std::size_t max_degree) {
  if (!mentions(e, var)) {
    GoldenNum v = eval_ring(e, env);
    if (!v.is_rational()) throw EvalError("irrational coefficient in series '" + format(e) + "'");
    return RationalPoly::constant(v.a());
  }
  auto sub = [&](std::size_t i) { return series(e.child(i), env, var, max_degree); };
  switch (e.kind()) {
    case NodeKind::Var: return RationalPoly::monomial(1, 1).truncated(max_degree);
    case NodeKind::Neg: return -sub(0);
    case NodeKind::Add: return sub(0) + sub(1);
    case NodeKind::Sub: return sub(0) - sub(1);
    case NodeKind::Mul: return RationalPoly::mul_trunc(sub(0), sub(1), max_degree);
    case NodeKind::Div: {
      RationalPoly den = sub(1);
      if (den.is_zero()) throw ZeroDivision("division by zero series");
      return RationalPoly::mul_trunc(sub(0), inverse(den, max_degree), max_degree);
    }
    case NodeKind::Pow: {
      if (mentions(e.child(1), var)) throw EvalError("formal variable in an exponent");
      long n = to_index(eval_int(e.child(1), env), kMaxIndex);
      return power(sub(0), n, max_degree);
    }
    case NodeKind::Sum: {
      if (mentions(e.child(0), var) || mentions(e.child(1), var)) {
        throw EvalError("formal variable in a summation bound");
      }
      BigInt lo = eval_int(e.child(0), env);
      BigInt hi = eval_int(e.child(1), env);
      RationalPoly total;
      if (hi < lo) return total;
      if (hi - lo + 1 > kMaxSumTerms) throw IndexOutOfRange("sum exceeds term limit");
      Env local = env;
      for (BigInt j = lo; j <= hi; ++j) {
        local.set_int(e.name(), j);
        total = total + series(e.child(2), local, var, max_degree);
      }
      return total;
    }
    default: throw EvalError("formal variable '" + var + "' inside '" + format(e) + "'");
  }
}

}  // namespace

RationalPoly eval_series(const Expr& e, const Env& env, const std::string& var,
                         std::size_t max_degree) {
  return series(e, env, var, max_degree).truncated(max_degree);
}

RationalPoly sequence_series(long p, long q, long order, SeriesKind kind) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(order + 1));
  for (long j = 0; j <= order; ++j) {
    long idx = p * j + q;
    v.emplace_back(kind == SeriesKind::Fib ? fib(idx) : lucas(idx));
  }
  return RationalPoly(std::move(v));
}

CheckResult series_check(long p, long q, long order, SeriesKind kind) {
  CheckResult r;
  r.env.set_int("p", p);
  r.env.set_int("q", q);
  r.env.set_int("n", order);
  auto seq = [kind](long i) { return kind == SeriesKind::Fib ? fib(i) : lucas(i); };

  RationalPoly t = sequence_series(p, q, order, kind);
  BigInt sign_p = (p % 2 == 0) ? 1 : -1;
  BigInt sign_q = (q % 2 == 0) ? 1 : -1;
  RationalPoly den({Rational(1), Rational(-lucas(p)), Rational(sign_p)});
  BigInt c1 = kind == SeriesKind::Fib ? BigInt(sign_q * fib(p - q)) : BigInt(-sign_q * lucas(p - q));
  RationalPoly num({Rational(seq(q)), Rational(c1)});

  RationalPoly lhs = RationalPoly::mul_trunc(den, t, static_cast<std::size_t>(order));
  for (long k = 0; k <= order; ++k) {
    Rational got = lhs.coeff(static_cast<std::size_t>(k));
    Rational want = num.coeff(static_cast<std::size_t>(k));
    if (got != want) {
      r.status = Status::Fail;
      r.lhs = GoldenNum(got);
      r.rhs = GoldenNum(want);
      r.detail = "coefficient of y^" + std::to_string(k) + " differs";
      return r;
    }
  }
  r.lhs = GoldenNum(lhs.coeff(0));
  r.rhs = GoldenNum(num.coeff(0));
  return r;
}

}  // namespace golden
