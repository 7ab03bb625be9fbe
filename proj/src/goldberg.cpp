#include "shadowham/goldberg.hpp"

#include <cmath>

#include <fmt/format.h>

#include "shadowham/error.hpp"

namespace shadowham {

namespace {

Rational sign_pow(int n) { return Rational(n % 2 == 0 ? 1 : -1); }

// (-1)^n (n!)^2 / (2n+1)!
Rational odd_alternating(unsigned n) { return sign_pow(static_cast<int>(n)) * f_coefficient(n); }

FreeSeries two_letter_oracle(int max_degree) {
  const WeightedLetter factors[] = {{kA, Rational(1)}, {kB, Rational(1)}};
  return log_exp_product(factors, max_degree);
}

FreeSeries three_letter_oracle(int max_degree) {
  const WeightedLetter factors[] = {{kX1, Rational(1)}, {kX2, Rational(1)}, {kX3, Rational(1)}};
  return log_exp_product(factors, max_degree);
}

Letter x_letter(int index) {
  switch (index) {
    case 1: return kX1;
    case 3: return kX3;
    default: throw DomainError(fmt::format("pattern end X{} is not X1 or X3", index));
  }
}

}  // namespace

const std::vector<std::string>& two_letter_names() {
  static const std::vector<std::string> names{"A", "B"};
  return names;
}

const std::vector<std::string>& three_letter_names() {
  static const std::vector<std::string> names{"X1", "X2", "X3"};
  return names;
}

Word AlternatingWord2::word() const {
  if (length < 1) throw DomainError("alternating word needs length >= 1");
  if (start != kA && start != kB) throw DomainError("alternating word must start with A or B");
  std::vector<Letter> letters(static_cast<std::size_t>(length));
  for (std::size_t i = 0; i < letters.size(); ++i) letters[i] = static_cast<Letter>((start + i) % 2);
  return Word(letters);
}

Rational f_coefficient(unsigned n) {
  const Rational nf = factorial(n);
  return nf * nf / factorial(2 * n + 1);
}

Rational f2_coefficient(unsigned n) {
  if (n == 0) return Rational(1);
  return -(factorial(n - 1) * factorial(n)) / (Rational(2) * factorial(2 * n + 1));
}

Rational goldberg_coeff_two(const AlternatingWord2& w) {
  if (w.length < 1) throw DomainError("Goldberg coefficient needs a word of length >= 1");
  if (w.start != kA && w.start != kB) throw DomainError("alternating word must start with A or B");
  if (w.length % 2 == 1) return odd_alternating(static_cast<unsigned>((w.length - 1) / 2));
  const auto n = static_cast<unsigned>((w.length - 2) / 2);
  const Rational c = odd_alternating(n) / Rational(2);
  return w.start == kA ? c : -c;
}

Rational goldberg_coeff_three(const ThreeWordPattern& p) {
  if (p.n < 0) throw DomainError("pattern order n must be >= 0");
  const auto n = static_cast<unsigned>(p.n);
  if (p.shape == PatternShape::Inner) return odd_alternating(n);

  x_letter(p.first);
  x_letter(p.last);
  if (p.first == p.last) return odd_alternating(n);
  if (n == 0) throw DomainError("a single-letter pattern cannot have distinct ends");
  return sign_pow(p.n + 1) * factorial(n - 1) * factorial(n + 1) / factorial(2 * n + 1);
}

std::vector<Word> pattern_words(const ThreeWordPattern& p) {
  goldberg_coeff_three(p);  // validates
  const std::size_t len = static_cast<std::size_t>(p.length());
  // Positions holding a free X1/X3 choice.
  std::vector<std::size_t> free_slots;
  std::vector<Letter> base(len, kX2);
  if (p.shape == PatternShape::Inner) {
    for (std::size_t i = 1; i < len; i += 2) free_slots.push_back(i);
  } else {
    for (std::size_t i = 2; i + 2 < len; i += 2) free_slots.push_back(i);
    base.front() = x_letter(p.first);
    base.back() = x_letter(p.last);
  }

  std::vector<Word> out;
  const std::size_t combos = std::size_t{1} << free_slots.size();
  out.reserve(combos);
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<Letter> letters = base;
    for (std::size_t j = 0; j < free_slots.size(); ++j) letters[free_slots[j]] = (mask >> j) & 1 ? kX3 : kX1;
    out.emplace_back(std::span<const Letter>(letters));
  }
  return out;
}

std::vector<ThreeWordPattern> all_patterns(int max_degree) {
  std::vector<ThreeWordPattern> out;
  for (int n = 0; 2 * n + 1 <= max_degree; ++n) {
    out.push_back({n, PatternShape::Inner, 1, 1});
    out.push_back({n, PatternShape::Outer, 1, 1});
    out.push_back({n, PatternShape::Outer, 3, 3});
    if (n >= 1) {
      out.push_back({n, PatternShape::Outer, 1, 3});
      out.push_back({n, PatternShape::Outer, 3, 1});
    }
  }
  return out;
}

std::vector<CoeffReport> verify_two_letter(int max_degree) {
  if (max_degree < 2) throw DomainError("two-letter verification needs max_degree >= 2");
  const FreeSeries oracle = two_letter_oracle(max_degree);
  std::vector<CoeffReport> out;
  for (int len = 1; len <= max_degree; ++len) {
    for (const Letter start : {kA, kB}) {
      const AlternatingWord2 w{start, len};
      const Word word = w.word();
      CoeffReport r{word.to_string(two_letter_names()), goldberg_coeff_two(w), oracle.coeff(word)};
      r.match = r.closed_form == r.oracle;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CoeffReport> verify_three_letter(int max_degree) {
  if (max_degree < 3) throw DomainError("three-letter verification needs max_degree >= 3");
  const FreeSeries oracle = three_letter_oracle(max_degree);
  std::vector<CoeffReport> out;
  for (const auto& p : all_patterns(max_degree)) {
    const Rational closed = goldberg_coeff_three(p);
    for (const Word& word : pattern_words(p)) {
      CoeffReport r{word.to_string(three_letter_names()), closed, oracle.coeff(word)};
      r.match = r.closed_form == r.oracle;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<std::size_t> count_non_alternating_terms(int max_degree) {
  const FreeSeries oracle = two_letter_oracle(max_degree);
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& [w, c] : oracle.terms()) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        ++counts[w.size()];
        break;
      }
    }
  }
  return counts;
}

std::optional<ReducedWord> reduce_word(const Word& w) {
  if (w.empty()) throw DomainError("the empty word has no nilpotent normal form");
  std::vector<Letter> letters = w.letters();
  for (const Letter l : letters)
    if (l != kA && l != kB) throw DomainError("collapse is defined for words over {A, B} only");

  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == letters[i + 1]) return std::nullopt;  // A^2 = B^2 = 0

  // xyx -> -x, applied leftmost-first until at most two letters remain.
  int sign = 1;
  while (letters.size() > 2) {
    std::size_t i = 0;
    while (letters[i] != letters[i + 2]) ++i;
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  letters.begin() + static_cast<std::ptrdiff_t>(i) + 3);
    sign = -sign;
  }

  ReducedWord r{sign, NormalForm::A};
  if (letters.size() == 1) {
    r.form = letters[0] == kA ? NormalForm::A : NormalForm::B;
  } else {
    r.form = letters[0] == kA ? NormalForm::AB : NormalForm::BA;
  }
  return r;
}

std::vector<NormalCoeffs> collapse_graded(const FreeSeries& s) {
  std::vector<NormalCoeffs> out(static_cast<std::size_t>(s.max_degree()) + 1);
  for (const auto& [w, c] : s.terms()) {
    const auto r = reduce_word(w);
    if (!r) continue;
    auto& slot = out[w.size()][static_cast<std::size_t>(r->form)];
    slot += r->sign > 0 ? c : -c;
  }
  return out;
}

std::vector<TwoLetterCollapse> collapse_two(int max_n) {
  if (max_n < 0) throw DomainError("max_n must be >= 0");
  const auto graded = collapse_graded(two_letter_oracle(2 * max_n + 2));
  std::vector<TwoLetterCollapse> out;
  for (int n = 0; n <= max_n; ++n) {
    const auto& odd = graded[static_cast<std::size_t>(2 * n + 1)];
    const auto& even = graded[static_cast<std::size_t>(2 * n + 2)];
    out.push_back({odd[0], odd[1], even[2], even[3]});
  }
  return out;
}

std::vector<TwoLetterCollapse> collapse_two_closed_form(int max_n) {
  if (max_n < 0) throw DomainError("max_n must be >= 0");
  std::vector<TwoLetterCollapse> out;
  for (int n = 0; n <= max_n; ++n) {
    TwoLetterCollapse t;
    for (const Letter start : {kA, kB}) {
      for (const int len : {2 * n + 1, 2 * n + 2}) {
        const AlternatingWord2 w{start, len};
        const auto r = reduce_word(w.word());
        const Rational c = r->sign > 0 ? goldberg_coeff_two(w) : -goldberg_coeff_two(w);
        switch (r->form) {
          case NormalForm::A: t.a += c; break;
          case NormalForm::B: t.b += c; break;
          case NormalForm::AB: t.ab += c; break;
          case NormalForm::BA: t.ba += c; break;
        }
      }
    }
    out.push_back(t);
  }
  return out;
}

StrangCollapse collapse_strang(int max_n) {
  if (max_n < 0) throw DomainError("max_n must be >= 0");
  const int degree = 2 * max_n + 2;
  if (degree > static_cast<int>(Word::kMaxLength)) throw DomainError("max_n too large for the word length limit");

  const WeightedLetter images[] = {{kB, Rational(1, 2)}, {kA, Rational(1)}, {kB, Rational(1, 2)}};
  const auto graded = collapse_graded(substitute_letters(three_letter_oracle(degree), images));

  StrangCollapse out;
  out.odd_only = true;
  for (std::size_t d = 1; d < graded.size(); ++d) {
    const auto& c = graded[d];
    if (d % 2 == 0) {
      for (const auto& v : c) out.odd_only = out.odd_only && v.is_zero();
    } else {
      out.odd_only = out.odd_only && c[2].is_zero() && c[3].is_zero();
      out.f1.push_back(c[0]);
      out.f2.push_back(c[1]);
    }
  }
  return out;
}

StrangCollapse collapse_strang_closed_form(int max_n) {
  if (max_n < 0) throw DomainError("max_n must be >= 0");
  StrangCollapse out;
  out.odd_only = true;
  out.f1.assign(static_cast<std::size_t>(max_n) + 1, Rational(0));
  out.f2.assign(static_cast<std::size_t>(max_n) + 1, Rational(0));
  const WeightedLetter images[] = {{kB, Rational(1, 2)}, {kA, Rational(1)}, {kB, Rational(1, 2)}};

  for (const auto& p : all_patterns(2 * max_n + 1)) {
    const Rational c = goldberg_coeff_three(p);
    for (const Word& w : pattern_words(p)) {
      FreeSeries term(w.size());
      term.add_term(w, c);
      const auto graded = collapse_graded(substitute_letters(term, images));
      const auto& odd = graded[w.size()];
      out.f1[static_cast<std::size_t>(p.n)] += odd[0];
      out.f2[static_cast<std::size_t>(p.n)] += odd[1];
    }
  }
  return out;
}

double estimate_radius(int num_coeffs) {
  if (num_coeffs < 10) throw DomainError("ratio test needs at least 10 coefficients");
  const auto n = static_cast<unsigned>(num_coeffs - 2);
  const Rational ratio = f_coefficient(n) / f_coefficient(n + 1);
  return std::sqrt(ratio.to_double());
}

}  // namespace shadowham
