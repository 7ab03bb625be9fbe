#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace shadowham {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// so two equal values always compare equal field by field.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(mpz_class(static_cast<long>(value))) {}  // NOLINT(google-explicit-constructor)

  /// num/den; throws DomainError when den == 0.
  Rational(long num, long den);

  /// Accepts "p", "p/q", decimals like "-0.125" and scientific "2.5e-3".
  /// Decimal input is converted exactly ("0.1" is 1/10, not the binary double).
  static Rational parse(std::string_view text);

  /// Exact value of a finite double.
  static Rational from_double(double value);

  static Rational from_mpq(mpq_class value);

  const mpq_class& raw() const noexcept { return value_; }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  /// "num/den", or just "num" for integers.
  std::string to_string() const { return value_.get_str(); }

  /// Correctly rounded decimal with `digits` significant digits, printf-%g
  /// style (positional for moderate exponents, scientific otherwise).
  std::string to_decimal(int digits = 17) const;

  /// Nearest double (ties to even).
  double to_double() const;

  /// Natural log of |value|; finite for values far outside double range.
  /// Throws DomainError for zero.
  double log_abs() const;

  /// Bits in numerator plus bits in denominator.
  std::size_t bit_size() const;

  Rational abs() const;
  Rational pow(unsigned exponent) const;
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

/// n! as an exact integer-valued rational.
Rational factorial(unsigned n);

}  // namespace shadowham
