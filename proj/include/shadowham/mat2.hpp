#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "shadowham/rational.hpp"

namespace shadowham {

/// Phase-space point (p, q).
template <class T>
struct PhaseState {
  T p{};
  T q{};

  friend bool operator==(const PhaseState&, const PhaseState&) = default;
};

using PhaseStated = PhaseState<double>;
using PhaseStateq = PhaseState<Rational>;

/// Real 2x2 matrix, row-major, acting on the column vector (p, q).
/// T is double for the float path and Rational for the exact path.
template <class T>
struct Mat2 {
  std::array<T, 4> e{T(0), T(0), T(0), T(0)};

  Mat2() = default;
  Mat2(T a00, T a01, T a10, T a11) : e{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  const T& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
  T& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }

  T trace() const { return e[0] + e[3]; }
  T det() const { return e[0] * e[3] - e[1] * e[2]; }
  Mat2 transpose() const { return {e[0], e[2], e[1], e[3]}; }

  Mat2& operator+=(const Mat2& o) {
    for (std::size_t i = 0; i < 4; ++i) e[i] += o.e[i];
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    for (std::size_t i = 0; i < 4; ++i) e[i] -= o.e[i];
    return *this;
  }
  Mat2& operator*=(const T& s) {
    for (auto& v : e) v *= s;
    return *this;
  }

  friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
  friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
  friend Mat2 operator-(const Mat2& a) { return Mat2{} - a; }
  friend Mat2 operator*(Mat2 a, const T& s) { return a *= s; }
  friend Mat2 operator*(const T& s, Mat2 a) { return a *= s; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
            a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
  }
  friend PhaseState<T> operator*(const Mat2& m, const PhaseState<T>& s) {
    return {m.e[0] * s.p + m.e[1] * s.q, m.e[2] * s.p + m.e[3] * s.q};
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.e[0] << ", " << m.e[1] << "], [" << m.e[2] << ", " << m.e[3] << "]]";
  }
};

using Mat2d = Mat2<double>;
using Mat2q = Mat2<Rational>;

template <class T>
Mat2<T> commutator(const Mat2<T>& a, const Mat2<T>& b) {
  return a * b - b * a;
}

inline double max_abs_diff(const Mat2d& a, const Mat2d& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::fabs(a.e[i] - b.e[i]));
  return m;
}

inline Mat2d to_double(const Mat2q& m) {
  return {m.e[0].to_double(), m.e[1].to_double(), m.e[2].to_double(), m.e[3].to_double()};
}

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
Mat2d matrix_exp(const Mat2d& m);

}  // namespace shadowham
