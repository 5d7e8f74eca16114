#include "hesscoh/rational.hpp"

#include <cctype>
#include <limits>

#include "hesscoh/errors.hpp"

namespace hesscoh {

namespace {

bool isIntegerLiteral(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parseInteger(std::string_view s) {
  if (!isIntegerLiteral(s)) fail(ErrorKind::Parse, "malformed rational: '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parseInteger(text)));
  mpz_class num = parseInteger(text.substr(0, slash));
  mpz_class den = parseInteger(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

std::string Rational::toFraction() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::toString() const {
  return isInteger() ? value_.get_num().get_str() : toFraction();
}

std::int64_t Rational::toInt64() const {
  if (!isInteger() || !value_.get_num().fits_slong_p()) {
    fail(ErrorKind::InvalidArgument, "rational " + toString() + " is not a machine integer");
  }
  return value_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) fail(ErrorKind::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace hesscoh
