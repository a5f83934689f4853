#include <golden/errors.hpp>
#include <golden/numeric.hpp>

#include <cctype>
#include <stdexcept>

namespace golden {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw ZeroDivision("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

std::string to_string(const BigInt& n) { return n.get_str(); }

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  BigInt num = parse_integer(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("signed denominator: '" + std::string(text) + "'");
  }
  return make_rational(num, parse_integer(den_text, text));
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

BigInt pow(const BigInt& n, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), n.get_mpz_t(), e);
  return out;
}

Rational pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (sgn(r) == 0) {
    if (e < 0) throw SingularPower("0 raised to a negative power");
    return Rational(0);
  }
  unsigned long m = e < 0 ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  BigInt num = pow(r.get_num(), m);
  BigInt den = pow(r.get_den(), m);
  if (e < 0) std::swap(num, den);
  Rational out(num, den);
  out.canonicalize();  // only moves the sign onto the numerator
  return out;
}

long to_index(const BigInt& n, long limit) {
  if (!n.fits_slong_p() || n.get_si() > limit || n.get_si() < -limit) {
    throw IndexOutOfRange("index " + n.get_str() + " exceeds limit " +
                          std::to_string(limit));
  }
  return n.get_si();
}

}  // namespace golden
