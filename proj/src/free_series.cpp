#include "shadowham/free_series.hpp"

#include <fmt/format.h>

#include "shadowham/error.hpp"

namespace shadowham {

Word::Word(std::initializer_list<Letter> letters) : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word::Word(std::span<const Letter> letters) {
  if (letters.size() > kMaxLength) throw DomainError(fmt::format("word longer than {} letters", kMaxLength));
  for (const Letter l : letters) {
    if (l >= kMaxLetters) throw DomainError(fmt::format("letter index {} out of range", l));
    code_ = (code_ << 4) | l;
  }
  size_ = static_cast<std::uint8_t>(letters.size());
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = (*this)[i];
  return out;
}

Word concat(const Word& a, const Word& b) {
  if (a.size_ + b.size_ > Word::kMaxLength)
    throw DomainError(fmt::format("word longer than {} letters", Word::kMaxLength));
  Word w;
  w.code_ = (a.code_ << (4 * b.size_)) | b.code_;
  w.size_ = static_cast<std::uint8_t>(a.size_ + b.size_);
  return w;
}

std::string Word::to_string(std::span<const std::string> names) const {
  if (empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < size_; ++i) {
    const Letter l = (*this)[i];
    out += l < names.size() ? names[l] : fmt::format("x{}", l);
  }
  return out;
}

FreeSeries::FreeSeries(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0 || static_cast<std::size_t>(max_degree) > Word::kMaxLength)
    throw UsageError(fmt::format("truncation order {} outside [0, {}]", max_degree, Word::kMaxLength));
}

FreeSeries FreeSeries::unit(int max_degree) {
  FreeSeries s(max_degree);
  s.add_term(Word{}, Rational(1));
  return s;
}

FreeSeries FreeSeries::letter(Letter letter, int max_degree, const Rational& scale) {
  FreeSeries s(max_degree);
  s.add_term(Word::single(letter), scale);
  return s;
}

Rational FreeSeries::coeff(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FreeSeries::add_term(const Word& w, const Rational& c) {
  if (c.is_zero() || w.size() > static_cast<std::size_t>(max_degree_)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FreeSeries::check_compatible(const FreeSeries& other) const {
  if (max_degree_ != other.max_degree_)
    throw UsageError(fmt::format("truncation orders differ ({} vs {})", max_degree_, other.max_degree_));
}

FreeSeries& FreeSeries::operator+=(const FreeSeries& other) {
  check_compatible(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FreeSeries& FreeSeries::operator-=(const FreeSeries& other) {
  check_compatible(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FreeSeries& FreeSeries::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

FreeSeries operator*(const FreeSeries& a, const FreeSeries& b) {
  a.check_compatible(b);
  const auto max_deg = static_cast<std::size_t>(a.max_degree_);

  // Terms of b grouped by degree so pairs past the truncation are never visited.
  std::vector<std::vector<const FreeSeries::Terms::value_type*>> b_by_degree(max_deg + 1);
  for (const auto& term : b.terms_) b_by_degree[term.first.size()].push_back(&term);

  FreeSeries out(a.max_degree_);
  for (const auto& [u, cu] : a.terms_) {
    for (std::size_t d = 0; d + u.size() <= max_deg; ++d) {
      for (const auto* term : b_by_degree[d]) out.add_term(concat(u, term->first), cu * term->second);
    }
  }
  return out;
}

std::string FreeSeries::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += fmt::format("({}){}", c.to_string(), w.empty() ? "" : "*" + w.to_string(names));
  }
  return out;
}

FreeSeries series_mul(const FreeSeries& a, const FreeSeries& b) { return a * b; }

FreeSeries series_exp(const FreeSeries& a) {
  if (!a.constant_term().is_zero()) throw DomainError("series_exp needs a zero constant term");
  FreeSeries result = FreeSeries::unit(a.max_degree());
  FreeSeries power = FreeSeries::unit(a.max_degree());
  for (int m = 1; m <= a.max_degree(); ++m) {
    power = power * a;
    power *= Rational(1, m);
    if (power.size() == 0) break;
    result += power;
  }
  return result;
}

FreeSeries series_log(const FreeSeries& a) {
  if (a.constant_term() != Rational(1)) throw DomainError("series_log needs constant term 1");
  const FreeSeries y = a - FreeSeries::unit(a.max_degree());
  FreeSeries result(a.max_degree());
  FreeSeries power = FreeSeries::unit(a.max_degree());
  for (int m = 1; m <= a.max_degree(); ++m) {
    power = power * y;
    if (power.size() == 0) break;
    result += power * Rational(m % 2 == 1 ? 1 : -1, m);
  }
  return result;
}

FreeSeries log_exp_product(std::span<const WeightedLetter> factors, int max_degree) {
  if (factors.empty()) throw DomainError("log_exp_product needs at least one factor");
  FreeSeries product = FreeSeries::unit(max_degree);
  for (const auto& f : factors) {
    // exp of a single weighted letter is the commutative series sum s^m L^m / m!.
    FreeSeries e(max_degree);
    Word w;
    Rational c(1);
    for (int m = 0; m <= max_degree; ++m) {
      e.add_term(w, c);
      if (m == max_degree) break;
      w = concat(w, Word::single(f.letter));
      c = c * f.scale / Rational(m + 1);
    }
    product = product * e;
  }
  return series_log(product);
}

FreeSeries substitute_letters(const FreeSeries& s, std::span<const WeightedLetter> images) {
  FreeSeries out(s.max_degree());
  for (const auto& [w, c] : s.terms()) {
    std::vector<Letter> letters(w.size());
    Rational scale = c;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter l = w[i];
      if (l >= images.size()) throw DomainError(fmt::format("letter {} has no substitution image", l));
      letters[i] = images[l].letter;
      scale *= images[l].scale;
    }
    out.add_term(Word(letters), scale);
  }
  return out;
}

std::vector<Word> all_words(Letter letters, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> digits(length, 0);
  if (letters == 0) return length == 0 ? std::vector<Word>{Word{}} : out;
  while (true) {
    out.emplace_back(std::span<const Letter>(digits));
    std::size_t i = length;
    while (i > 0 && ++digits[i - 1] == letters) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace shadowham
