#include <golden/errors.hpp>
#include <golden/golden_ring.hpp>
#include <golden/sequences.hpp>

namespace golden {

GoldenNum& GoldenNum::operator+=(const GoldenNum& y) {
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

GoldenNum& GoldenNum::operator-=(const GoldenNum& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

GoldenNum& GoldenNum::operator*=(const GoldenNum& y) {
  // (a1 + b1 alpha)(a2 + b2 alpha) with alpha^2 = alpha + 1.
  if (is_rational() && y.is_rational()) {
    a_ *= y.a_;
    return *this;
  }
  Rational bb = b_ * y.b_;
  Rational b = a_ * y.b_ + b_ * y.a_ + bb;
  a_ = a_ * y.a_ + bb;
  b_ = std::move(b);
  return *this;
}

GoldenNum operator+(GoldenNum x, const GoldenNum& y) { return x += y; }
GoldenNum operator-(GoldenNum x, const GoldenNum& y) { return x -= y; }
GoldenNum operator*(GoldenNum x, const GoldenNum& y) { return x *= y; }
GoldenNum operator-(const GoldenNum& x) { return GoldenNum(-x.a(), -x.b()); }
GoldenNum operator/(const GoldenNum& x, const GoldenNum& y) { return ring_div(x, y); }

GoldenNum ring_add(const GoldenNum& x, const GoldenNum& y) { return x + y; }
GoldenNum ring_sub(const GoldenNum& x, const GoldenNum& y) { return x - y; }
GoldenNum ring_mul(const GoldenNum& x, const GoldenNum& y) { return x * y; }

GoldenNum ring_inv(const GoldenNum& x) {
  if (x.is_zero()) throw ZeroDivision("inverse of zero");
  if (x.is_rational()) return GoldenNum(1 / x.a());
  const Rational& c = x.b();
  const Rational& d = x.a();
  Rational den = c * c - d * d - c * d;
  return GoldenNum(-(c + d) / den, c / den);
}

GoldenNum ring_div(const GoldenNum& x, const GoldenNum& y) {
  if (y.is_zero()) throw ZeroDivision("division by zero");
  if (y.is_rational()) return GoldenNum(x.a() / y.a(), x.b() / y.a());
  return x * ring_inv(y);
}

GoldenNum ring_div_closed_form(const GoldenNum& x, const GoldenNum& y) {
  if (y.is_zero()) throw ZeroDivision("division by zero");
  const Rational& a = x.b();
  const Rational& b = x.a();
  const Rational& c = y.b();
  const Rational& d = y.a();
  Rational den = c * c - d * d - c * d;
  return GoldenNum((c * a - d * b - c * b) / den, (c * b - d * a) / den);
}

GoldenNum ring_pow(const GoldenNum& x, long n) {
  if (n == 0) return GoldenNum::one();
  if (x.is_zero()) {
    if (n < 0) throw SingularPower("0 raised to a negative power");
    return GoldenNum();
  }
  if (x.is_rational()) return GoldenNum(pow(x.a(), n));

  unsigned long m = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  GoldenNum base = n < 0 ? ring_inv(x) : x;
  GoldenNum result = GoldenNum::one();
  while (m != 0) {
    if (m & 1UL) result *= base;
    m >>= 1;
    if (m != 0) base *= base;
  }
  return result;
}

GoldenNum alpha_pow(long n) {
  auto [prev, cur] = fib_pair(n);
  return GoldenNum(Rational(prev), Rational(cur));
}

GoldenNum beta_pow(long n) { return conjugate(alpha_pow(n)); }

GoldenNum conjugate(const GoldenNum& x) { return GoldenNum(x.a() + x.b(), -x.b()); }

Rational norm(const GoldenNum& x) {
  return x.a() * x.a() + x.a() * x.b() - x.b() * x.b();
}

std::pair<Rational, Rational> coeffs(const GoldenNum& x) { return {x.a(), x.b()}; }

GoldenNum sqrt5_const() { return GoldenNum::sqrt5(); }

std::string to_string(const GoldenNum& x) {
  if (x.is_rational()) return to_string(x.a());
  auto term = [](const Rational& b) {
    if (b == 1) return std::string("alpha");
    return to_string(b) + "*alpha";
  };
  if (sgn(x.a()) == 0) {
    if (x.b() == -1) return "-alpha";
    return term(x.b());
  }
  if (sgn(x.b()) < 0) return to_string(x.a()) + " - " + term(-x.b());
  return to_string(x.a()) + " + " + term(x.b());
}

std::ostream& operator<<(std::ostream& os, const GoldenNum& x) { return os << to_string(x); }

}  // namespace golden
