#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "shadowham/error.hpp"
#include "shadowham/mat2.hpp"

namespace shadowham {

enum class SchemeId {
  FirstOrder,   // (1 + xA)(1 + xB)
  SecondOrder,  // (1 + x/2 B)(1 + xA)(1 + x/2 B)
};

std::string to_string(SchemeId scheme);

enum class StabilityClass { Elliptic, Parabolic, Hyperbolic };

std::string to_string(StabilityClass c);

/// Symmetric matrix of a conserved quadratic form E = (p q) m (p q)^t.
template <class T>
struct ShadowForm {
  Mat2<T> m;
};

// A = [[0,0],[1,0]] drifts q by p; B = [[0,-1],[0,0]] kicks p by -q.
template <class T>
Mat2<T> generator_a() {
  return {T(0), T(0), T(1), T(0)};
}

template <class T>
Mat2<T> generator_b() {
  return {T(0), T(-1), T(0), T(0)};
}

/// p' = p - x q, q' = q + x p'.
template <class T>
PhaseState<T> step_first_order(const PhaseState<T>& s, const T& x) {
  const T p = s.p - x * s.q;
  return {p, s.q + x * p};
}

/// Half kick, drift, half kick.
template <class T>
PhaseState<T> step_second_order(const PhaseState<T>& s, const T& x) {
  const T h = x / T(2);
  const T p_half = s.p - h * s.q;
  const T q = s.q + x * p_half;
  return {p_half - h * q, q};
}

template <class T>
PhaseState<T> step(SchemeId scheme, const PhaseState<T>& s, const T& x) {
  return scheme == SchemeId::FirstOrder ? step_first_order(s, x) : step_second_order(s, x);
}

/// One-step map. First order: [[1, -x], [x, 1 - x^2]];
/// second order: [[1 - x^2/2, -x + x^3/4], [x, 1 - x^2/2]].
template <class T>
Mat2<T> map_matrix(SchemeId scheme, const T& x) {
  const T x2 = x * x;
  if (scheme == SchemeId::FirstOrder) return {T(1), -x, x, T(1) - x2};
  return {T(1) - x2 / T(2), x * x2 / T(4) - x, x, T(1) - x2 / T(2)};
}

/// Direction L of the effective generator, without the F(x) factor.
/// L1 = A + B + (x/2)[A,B] = [[x/2, -1], [1, -x/2]];
/// L2 = A + (1 - x^2/4) B  = [[0, -(1 - x^2/4)], [1, 0]].
template <class T>
Mat2<T> generator_direction(SchemeId scheme, const T& x) {
  if (scheme == SchemeId::FirstOrder) return {x / T(2), T(-1), T(1), -(x / T(2))};
  return {T(0), x * x / T(4) - T(1), T(1), T(0)};
}

/// First order: 1/2 [[1, -x/2], [-x/2, 1]]; second order: 1/2 diag(1, 1 - x^2/4).
/// Defined for every x; positive definite only for |x| < 2.
template <class T>
ShadowForm<T> shadow_form(SchemeId scheme, const T& x) {
  const T half(T(1) / T(2));
  if (scheme == SchemeId::FirstOrder) return {Mat2<T>{half, -(x / T(4)), -(x / T(4)), half}};
  return {Mat2<T>{half, T(0), T(0), half * (T(1) - x * x / T(4))}};
}

template <class T>
T quadratic_form(const Mat2<T>& m, const PhaseState<T>& s) {
  return s.p * (m.e[0] * s.p + m.e[1] * s.q) + s.q * (m.e[2] * s.p + m.e[3] * s.q);
}

template <class T>
T shadow_energy(const PhaseState<T>& s, SchemeId scheme, const T& x) {
  return quadratic_form(shadow_form(scheme, x).m, s);
}

/// Sum of terms (n!)^2/(2n+1)! x^(2n) until the remaining tail, bounded by
/// term / (1 - x^2/4), falls below rel_tol times the running sum.
/// Throws Divergent for |x| >= 2 and DomainError for rel_tol <= 0 or a
/// non-finite x.
double eval_F(double x, double rel_tol = 1e-14);

/// F(x) L, the real generator with exp(x F(x) L) = map_matrix(scheme, x).
/// Throws Divergent for |x| >= 2.
Mat2d effective_generator(SchemeId scheme, double x, double rel_tol = 1e-14);

/// Real logarithm G = (theta / sin theta)(m - (tr/2) I), theta = arccos(tr/2),
/// of a unit-determinant elliptic matrix. The identity maps to zero. Throws
/// NoEllipticLog for |trace| >= 2 (other than the identity) and DomainError
/// when det(m) differs from 1 by more than 1e-12.
Mat2d matrix_log_principal(const Mat2d& m);

/// trace(map) = 2 - x^2 for both schemes. The identity map (x = 0) counts as
/// Elliptic.
StabilityClass stability_classify(SchemeId scheme, double x);

/// Modulus of the dominant eigenvalue; 1 unless hyperbolic, where it is
/// (x^2 - 2 + |x| sqrt(x^2 - 4)) / 2.
double spectral_radius(SchemeId scheme, double x);

struct RelationCheck {
  std::string name;
  bool holds = false;
};

/// A^2 = 0, B^2 = 0, ABA = -A, BAB = -B, [A,[A,B]] = 2A, [B,[A,B]] = -2B,
/// evaluated exactly on the concrete matrices.
std::vector<RelationCheck> check_generator_relations();

/// Upper bound on rational width along exact trajectories.
inline constexpr std::size_t kDefaultMaxBits = std::size_t{1} << 16;

/// [s0, s1, ..., s_n]. For Rational states, throws RationalOverflow once a
/// component needs more than max_bits bits; it is ignored for doubles.
template <class T>
std::vector<PhaseState<T>> trajectory(const PhaseState<T>& s0, SchemeId scheme, const T& x, std::size_t n_steps,
                                      std::size_t max_bits = kDefaultMaxBits) {
  std::vector<PhaseState<T>> out;
  out.reserve(n_steps + 1);
  out.push_back(s0);
  for (std::size_t i = 1; i <= n_steps; ++i) {
    out.push_back(step(scheme, out.back(), x));
    if constexpr (std::is_same_v<T, Rational>) {
      const auto& s = out.back();
      if (s.p.bit_size() > max_bits || s.q.bit_size() > max_bits) throw RationalOverflow(i, max_bits);
    } else {
      (void)max_bits;
    }
  }
  return out;
}

/// Final state and running maximum of p^2 + q^2 for one propagated lane.
struct LaneSummary {
  PhaseStated final_state;
  double max_radius_sq = 0.0;
};

/// Advances lane i from s0[i] with step x[i] for n_steps steps using the
/// widest available SIMD kernel. Throws UsageError when the spans differ in
/// length.
std::vector<LaneSummary> propagate_batch(SchemeId scheme, std::span<const PhaseStated> s0, std::span<const double> x,
                                         std::size_t n_steps);

}  // namespace shadowham
