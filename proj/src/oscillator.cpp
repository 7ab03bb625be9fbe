#include "shadowham/oscillator.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "shadowham/kernels.hpp"

namespace shadowham {

std::string to_string(SchemeId scheme) { return scheme == SchemeId::FirstOrder ? "first" : "second"; }

std::string to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Elliptic: return "Elliptic";
    case StabilityClass::Parabolic: return "Parabolic";
    case StabilityClass::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

Mat2d matrix_exp(const Mat2d& m) {
  double norm = 0.0;
  for (int r = 0; r < 2; ++r) norm = std::max(norm, std::fabs(m(r, 0)) + std::fabs(m(r, 1)));
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Mat2d scaled = m * std::ldexp(1.0, -squarings);

  Mat2d sum = Mat2d::identity();
  Mat2d term = Mat2d::identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled * (1.0 / k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

double eval_F(double x, double rel_tol) {
  if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
  if (!std::isfinite(x)) throw DomainError("x must be finite");
  if (std::fabs(x) >= 2.0) throw Divergent(x);

  const double x2 = x * x;
  // Term ratios increase towards x^2/4, so the tail after a term t is below
  // t / (1 - x^2/4).
  const double tail_factor = 1.0 / (1.0 - x2 / 4.0);
  double sum = 1.0;
  double compensation = 0.0;
  double term = 1.0;
  for (int n = 0; n < 1'000'000; ++n) {
    term *= x2 * (n + 1) / (2.0 * (2 * n + 3));
    // Neumaier summation.
    const double t = sum + term;
    compensation += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    if (term * tail_factor <= rel_tol * (sum + compensation)) break;
  }
  return sum + compensation;
}

Mat2d effective_generator(SchemeId scheme, double x, double rel_tol) {
  return eval_F(x, rel_tol) * generator_direction<double>(scheme, x);
}

Mat2d matrix_log_principal(const Mat2d& m) {
  const double det = m.det();
  if (!(std::fabs(det - 1.0) <= 1e-12)) throw DomainError(fmt::format("matrix_log_principal needs det 1, got {}", det));
  if (m == Mat2d::identity()) return Mat2d{};
  const double tr = m.trace();
  if (!(std::fabs(tr) < 2.0)) throw NoEllipticLog(tr);
  const double theta = std::acos(tr / 2.0);
  return (theta / std::sin(theta)) * (m - (tr / 2.0) * Mat2d::identity());
}

StabilityClass stability_classify(SchemeId /*scheme*/, double x) {
  // trace = 2 - x^2 for both schemes, so |trace| < 2 <=> 0 < |x| < 2.
  const double ax = std::fabs(x);
  if (ax < 2.0) return StabilityClass::Elliptic;
  if (ax == 2.0) return StabilityClass::Parabolic;
  return StabilityClass::Hyperbolic;
}

double spectral_radius(SchemeId scheme, double x) {
  if (stability_classify(scheme, x) != StabilityClass::Hyperbolic) return 1.0;
  const double x2 = x * x;
  return (x2 - 2.0 + std::fabs(x) * std::sqrt(x2 - 4.0)) / 2.0;
}

std::vector<RelationCheck> check_generator_relations() {
  const Mat2q a = generator_a<Rational>();
  const Mat2q b = generator_b<Rational>();
  const Mat2q zero;
  const Mat2q ab = commutator(a, b);
  return {
      {"A2_zero", a * a == zero},
      {"B2_zero", b * b == zero},
      {"ABA_minus_A", a * b * a == -a},
      {"BAB_minus_B", b * a * b == -b},
      {"comm_A_AB_2A", commutator(a, ab) == Rational(2) * a},
      {"comm_B_AB_minus_2B", commutator(b, ab) == Rational(-2) * b},
  };
}

std::vector<LaneSummary> propagate_batch(SchemeId scheme, std::span<const PhaseStated> s0, std::span<const double> x,
                                         std::size_t n_steps) {
  if (s0.size() != x.size()) throw UsageError("propagate_batch: states and step sizes differ in length");
  const std::size_t n = s0.size();
  std::vector<double> p(n), q(n), max_r2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = s0[i].p;
    q[i] = s0[i].q;
  }
  kernels::advance(scheme, kernels::Batch{p, q, x, max_r2}, n_steps);

  std::vector<LaneSummary> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {{p[i], q[i]}, max_r2[i]};
  return out;
}

}  // namespace shadowham
