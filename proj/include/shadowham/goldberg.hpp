#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shadowham/free_series.hpp"
#include "shadowham/rational.hpp"

namespace shadowham {

// Letter assignments. Two-letter series use A, B; three-letter series use
// X1, X2, X3.
inline constexpr Letter kA = 0;
inline constexpr Letter kB = 1;
inline constexpr Letter kX1 = 0;
inline constexpr Letter kX2 = 1;
inline constexpr Letter kX3 = 2;

const std::vector<std::string>& two_letter_names();    // {"A", "B"}
const std::vector<std::string>& three_letter_names();  // {"X1", "X2", "X3"}

/// Strictly alternating word over {A, B}: start = A, length = 4 is ABAB.
struct AlternatingWord2 {
  Letter start = kA;
  int length = 1;

  Word word() const;
};

/// Coefficient of an alternating word in log(e^A e^B).
///
/// Odd length 2n+1: (-1)^n (n!)^2 / (2n+1)! for either start letter.
/// Even length 2n+2: +-(-1)^n (n!)^2 / (2 (2n+1)!), plus for start A.
/// Throws DomainError for length < 1 or a start letter other than A/B.
Rational goldberg_coeff_two(const AlternatingWord2& w);

enum class PatternShape {
  Inner,  // X2 Xi X2 Xi ... Xi X2, n letters from {X1, X3} between n+1 X2's
  Outer,  // Xi X2 Xi ... X2 Xi, n X2's between n+1 letters from {X1, X3}
};

/// Odd-length word class of log(e^X1 e^X2 e^X3) that survives the
/// substitution X1 = X3 = (x/2) B, X2 = x A. `first`/`last` are the X indices
/// (1 or 3) at the two ends of an Outer word; Inner words ignore them.
struct ThreeWordPattern {
  int n = 0;
  PatternShape shape = PatternShape::Inner;
  int first = 1;
  int last = 1;

  /// Length of every word in the class, 2n+1.
  int length() const { return 2 * n + 1; }
};

/// Closed-form coefficient for every word of the pattern:
///   Inner, and Outer with equal ends:   (-1)^n (n!)^2 / (2n+1)!
///   Outer with ends (1,3) or (3,1):     (-1)^(n+1) (n-1)! (n+1)! / (2n+1)!
/// Throws DomainError for ends outside {1,3}, mixed ends with n = 0, or n < 0.
Rational goldberg_coeff_three(const ThreeWordPattern& p);

/// The 2^k concrete words of a pattern, one per choice of the free X1/X3
/// letters (k = n for Inner, n - 1 for Outer with n >= 1).
std::vector<Word> pattern_words(const ThreeWordPattern& p);

/// Every valid pattern of length <= max_degree, shortest first.
std::vector<ThreeWordPattern> all_patterns(int max_degree);

struct CoeffReport {
  std::string word;
  Rational closed_form;
  Rational oracle;
  bool match = false;
};

/// Closed form vs. free-algebra oracle for every alternating word up to
/// max_degree (throws DomainError below 2).
std::vector<CoeffReport> verify_two_letter(int max_degree);

/// Closed form vs. oracle for every pattern-conforming word up to max_degree
/// (throws DomainError below 3).
std::vector<CoeffReport> verify_three_letter(int max_degree);

/// Number of nonzero oracle terms in log(e^A e^B) whose word contains AA or
/// BB, per degree (index = word length). These only vanish after collapse.
std::vector<std::size_t> count_non_alternating_terms(int max_degree);

// ---------------------------------------------------------------------------
// Collapse under A^2 = B^2 = 0, ABA = -A, BAB = -B.

enum class NormalForm : std::size_t { A = 0, B = 1, AB = 2, BA = 3 };

struct ReducedWord {
  int sign = 1;
  NormalForm form = NormalForm::A;
};

/// Rewrites a nonempty word over {A, B} to +-A, +-B, +-AB, +-BA, or nullopt
/// when it contains AA or BB. Throws DomainError for the empty word or other
/// letters.
std::optional<ReducedWord> reduce_word(const Word& w);

/// Coefficients of A, B, AB, BA, indexed by NormalForm.
using NormalCoeffs = std::array<Rational, 4>;

/// Image of a series over {A, B} under the collapse, graded by word length
/// (the power of the step size). Throws DomainError on a constant term.
std::vector<NormalCoeffs> collapse_graded(const FreeSeries& s);

struct TwoLetterCollapse {
  Rational a;   // x^(2n+1) A
  Rational b;   // x^(2n+1) B
  Rational ab;  // x^(2n+2) AB
  Rational ba;  // x^(2n+2) BA
};

/// Collapsed oracle series log(e^(xA) e^(xB)) for n = 0..max_n.
std::vector<TwoLetterCollapse> collapse_two(int max_n);
/// Same quantity assembled from goldberg_coeff_two instead of the oracle.
std::vector<TwoLetterCollapse> collapse_two_closed_form(int max_n);

struct StrangCollapse {
  std::vector<Rational> f1;  // x^(2n) coefficient multiplying x A
  std::vector<Rational> f2;  // x^(2n) coefficient multiplying x B
  bool odd_only = false;     // every even power of x cancelled exactly
};

/// Three-letter oracle with X1 = X3 = (x/2) B, X2 = x A substituted and
/// collapsed, n = 0..max_n.
StrangCollapse collapse_strang(int max_n);
/// F1, F2 assembled from goldberg_coeff_three over the surviving patterns.
/// odd_only is reported true since the patterns are odd by construction.
StrangCollapse collapse_strang_closed_form(int max_n);

/// (n!)^2 / (2n+1)!, the x^(2n) coefficient of F.
Rational f_coefficient(unsigned n);
/// x^(2n) coefficient of (1 - x^2/4) F: 1 at n = 0, else -(n-1)! n! / (2 (2n+1)!).
Rational f2_coefficient(unsigned n);

/// Ratio-test estimate sqrt(a_n / a_(n+1)) of the radius of convergence of F,
/// taken at the largest n covered by num_coeffs coefficients. Throws
/// DomainError for num_coeffs < 10.
double estimate_radius(int num_coeffs);

}  // namespace shadowham
