#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shadowham/rational.hpp"

namespace shadowham {

using Letter = std::uint8_t;

/// Word in the free monoid over at most 16 letters, packed four bits per
/// letter. The empty word is the unit. Words order by length, then
/// lexicographically.
class Word {
 public:
  static constexpr std::size_t kMaxLength = 16;
  static constexpr Letter kMaxLetters = 16;

  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  static Word single(Letter letter) { return Word{letter}; }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>((code_ >> (4 * (size_ - 1 - i))) & 0xF);
  }
  std::vector<Letter> letters() const;

  /// Throws DomainError when the result would exceed kMaxLength.
  friend Word concat(const Word& a, const Word& b);

  /// Letters joined through `names` (names[i] spells letter i).
  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    return a.code_ <=> b.code_;
  }

 private:
  std::uint64_t code_ = 0;  // first letter in the most significant nibble
  std::uint8_t size_ = 0;
};

/// Formal power series in noncommuting letters, truncated at words of length
/// max_degree, with exact rational coefficients. Zero coefficients are never
/// stored, so series equality is map equality.
class FreeSeries {
 public:
  using Terms = std::map<Word, Rational>;

  explicit FreeSeries(int max_degree);

  static FreeSeries zero(int max_degree) { return FreeSeries(max_degree); }
  static FreeSeries unit(int max_degree);
  /// scale * letter
  static FreeSeries letter(Letter letter, int max_degree, const Rational& scale = Rational(1));

  int max_degree() const noexcept { return max_degree_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coeff(const Word& w) const;
  Rational constant_term() const { return coeff(Word{}); }

  /// Adds c to the coefficient of w. Words past max_degree are dropped.
  void add_term(const Word& w, const Rational& c);

  FreeSeries& operator+=(const FreeSeries& other);
  FreeSeries& operator-=(const FreeSeries& other);
  FreeSeries& operator*=(const Rational& s);

  friend FreeSeries operator+(FreeSeries a, const FreeSeries& b) { return a += b; }
  friend FreeSeries operator-(FreeSeries a, const FreeSeries& b) { return a -= b; }
  friend FreeSeries operator*(FreeSeries a, const Rational& s) { return a *= s; }
  friend FreeSeries operator*(const FreeSeries& a, const FreeSeries& b);

  friend bool operator==(const FreeSeries&, const FreeSeries&) = default;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const FreeSeries& other) const;

  int max_degree_;
  Terms terms_;
};

/// Truncated product. Throws UsageError when truncation orders differ.
FreeSeries series_mul(const FreeSeries& a, const FreeSeries& b);

/// sum_{m=0}^{max_degree} a^m / m!. Throws DomainError unless a has zero
/// constant term.
FreeSeries series_exp(const FreeSeries& a);

/// sum_{m>=1} (-1)^{m+1} (a-1)^m / m. Throws DomainError unless the constant
/// term is 1.
FreeSeries series_log(const FreeSeries& a);

/// One exponential factor exp(scale * letter).
struct WeightedLetter {
  Letter letter;
  Rational scale;
};

/// log(exp(s1 L1) exp(s2 L2) ... exp(sk Lk)) truncated at max_degree. Letters
/// may repeat. Throws DomainError for an empty factor list.
FreeSeries log_exp_product(std::span<const WeightedLetter> factors, int max_degree);

/// Algebra homomorphism sending letter i to images[i].scale * images[i].letter.
/// Throws DomainError when a letter of the series has no image.
FreeSeries substitute_letters(const FreeSeries& s, std::span<const WeightedLetter> images);

/// Every word of exactly `length` letters over an alphabet of `letters`
/// letters, in lexicographic order.
std::vector<Word> all_words(Letter letters, std::size_t length);

}  // namespace shadowham
