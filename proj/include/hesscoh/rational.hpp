#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hesscoh {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}            // NOLINT(implicit)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p", "-p", "p/q" with q != 0.
  static Rational parse(std::string_view text);

  bool isZero() const { return sgn(value_) == 0; }
  bool isOne() const { return value_ == 1; }
  bool isInteger() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  /// Always "num/den", used by the JSON schema.
  std::string toFraction() const;
  /// "num" for integers, "num/den" otherwise.
  std::string toString() const;

  /// Value as int64 when it is an integer that fits; otherwise throws.
  std::int64_t toInt64() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

private:
  mpq_class value_;
};

}  // namespace hesscoh
