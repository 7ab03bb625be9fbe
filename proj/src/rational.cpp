#include "shadowham/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>

#include "shadowham/error.hpp"

namespace shadowham {

namespace {

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Decimal digits of a positive integer.
long digit_count(const mpz_class& n) {
  long d = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10));  // exact or one too many
  if (d > 1 && n < pow10(static_cast<unsigned long>(d - 1))) --d;
  return d;
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class value) { return Rational(std::move(value)); }

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite double to Rational");
  return Rational(mpq_class(value));
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw UsageError("empty rational literal");

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
      throw UsageError("malformed rational literal '" + s + "'");
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(mpq_class(num, den));
  }

  // [sign] digits [. digits] [e|E [sign] digits]
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw UsageError("malformed rational literal '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    const std::string exponent = s.substr(i);
    if (exponent.empty()) throw UsageError("malformed rational literal '" + s + "'");
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exponent, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed rational literal '" + s + "'");
    }
    if (used != exponent.size() || e > 4096 || e < -4096)
      throw UsageError("malformed rational literal '" + s + "'");
    scale += e;
    i = s.size();
  }
  if (i != s.size()) throw UsageError("malformed rational literal '" + s + "'");

  mpz_class num(digits, 10);
  if (negative) num = -num;
  mpq_class q = scale >= 0 ? mpq_class(num * pow10(static_cast<unsigned long>(scale)))
                           : mpq_class(num, pow10(static_cast<unsigned long>(-scale)));
  return Rational(std::move(q));
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";

  const mpz_class num = ::abs(value_.get_num());
  const mpz_class& den = value_.get_den();

  // Estimate of floor(log10 |r|), corrected below.
  long e = digit_count(num) - digit_count(den);
  if (mpq_class(num, den) < (e >= 0 ? mpq_class(pow10(e)) : mpq_class(1, pow10(-e)))) --e;

  // scaled = round(|r| * 10^(digits-1-e)), ties to even like printf.
  auto scaled_for = [&](long exp10) {
    const long shift = digits - 1 - exp10;
    mpz_class n = num, d = den;
    if (shift >= 0) n *= pow10(shift); else d *= pow10(-shift);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const int c = cmp(mpz_class(2 * r), d);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
    return q;
  };
  mpz_class scaled = scaled_for(e);
  if (scaled >= pow10(digits)) {  // rounding carried into a new digit
    ++e;
    scaled = scaled_for(e);
  }

  std::string mant = scaled.get_str();
  // Strip trailing zeros like %g.
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();

  std::string out = sign() < 0 ? "-" : "";
  if (e < -4 || e >= digits) {
    out += mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += e < 0 ? "e-" : "e+";
    const std::string ee = std::to_string(e < 0 ? -e : e);
    if (ee.size() < 2) out += "0";
    out += ee;
  } else if (e >= 0) {
    if (static_cast<long>(mant.size()) <= e + 1) {
      out += mant + std::string(static_cast<std::size_t>(e + 1) - mant.size(), '0');
    } else {
      out += mant.substr(0, static_cast<std::size_t>(e + 1)) + "." + mant.substr(static_cast<std::size_t>(e + 1));
    }
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mant;
  }
  return out;
}

double Rational::to_double() const {
  if (is_zero()) return 0.0;
  // Quotient scaled into [2^62, 2^64), squeezed to 63 bits with a sticky low
  // bit, then rounded once by the integer-to-double conversion.
  const mpz_class num = ::abs(value_.get_num());
  const mpz_class& den = value_.get_den();
  long exponent = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                  static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 63;
  mpz_class n = num, d = den;
  if (exponent <= 0) n <<= static_cast<mp_bitcnt_t>(-exponent); else d <<= static_cast<mp_bitcnt_t>(exponent);
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  bool sticky = r != 0;
  if (mpz_sizeinbase(q.get_mpz_t(), 2) > 63) {
    sticky = sticky || mpz_odd_p(q.get_mpz_t());
    q >>= 1;
    ++exponent;
  }
  std::uint64_t bits = mpz_get_ui(q.get_mpz_t());
  if (sticky) bits |= 1;
  const double result = std::ldexp(static_cast<double>(bits), static_cast<int>(exponent));
  return sign() < 0 ? -result : result;
}

double Rational::log_abs() const {
  if (is_zero()) throw DomainError("log of zero");
  long num_exp = 0, den_exp = 0;
  const double num_m = mpz_get_d_2exp(&num_exp, value_.get_num_mpz_t());
  const double den_m = mpz_get_d_2exp(&den_exp, value_.get_den_mpz_t());
  return std::log(std::fabs(num_m)) - std::log(den_m) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(n, d));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(mpq_class(value_.get_den(), value_.get_num()));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational::from_mpq(mpq_class(r));
}

}  // namespace shadowham
