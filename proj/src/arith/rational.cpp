#include "lamfloor/arith/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace lamfloor {

Rational::Rational(long long value) : value_(static_cast<long>(value)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view digits) {
    std::string s(digits);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) {
      throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
      }
    }
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text), mpz_class(1));
  }
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den < 0) {
    throw std::invalid_argument("Rational: negative denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational Rational::abs() const {
  Rational r = *this;
  r.value_ = ::abs(value_);
  return r;
}

std::string Rational::str() const {
  return numerator().get_str() + "/" + denominator().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::invalid_argument("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lamfloor
