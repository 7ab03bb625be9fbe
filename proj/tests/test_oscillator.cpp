#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shadowham/oscillator.hpp"

using namespace shadowham;

namespace {

constexpr auto kFirst = SchemeId::FirstOrder;
constexpr auto kSecond = SchemeId::SecondOrder;

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST(Step, FirstOrderExamples) {
  EXPECT_EQ(step_first_order(PhaseStateq{q(1), q(0)}, q(1)), (PhaseStateq{q(1), q(1)}));
  EXPECT_EQ(step_first_order(PhaseStateq{q(0), q(1)}, q(2)), (PhaseStateq{q(-2), q(-3)}));
  EXPECT_EQ(step_first_order(PhaseStateq{q(3, 7), q(-2)}, q(0)), (PhaseStateq{q(3, 7), q(-2)}));
}

TEST(Step, SecondOrderExamples) {
  EXPECT_EQ(step_second_order(PhaseStateq{q(1), q(0)}, q(1)), (PhaseStateq{q(1, 2), q(1)}));
  EXPECT_EQ(step_second_order(PhaseStateq{q(0), q(1)}, q(1)), (PhaseStateq{q(-3, 4), q(1, 2)}));
  EXPECT_EQ(step_second_order(PhaseStateq{q(5), q(-1, 3)}, q(0)), (PhaseStateq{q(5), q(-1, 3)}));
}

TEST(Step, MatchesFactorProducts) {
  const Mat2q a = generator_a<Rational>(), b = generator_b<Rational>(), id = Mat2q::identity();
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Rational x = oracle::random_rational(rng, 4, 9);
    const PhaseStateq s{oracle::random_rational(rng, 3, 5), oracle::random_rational(rng, 3, 5)};
    const Mat2q first = (id + x * a) * (id + x * b);
    const Mat2q second = (id + (x / q(2)) * b) * (id + x * a) * (id + (x / q(2)) * b);
    ASSERT_EQ(first, map_matrix(kFirst, x));
    ASSERT_EQ(second, map_matrix(kSecond, x));
    ASSERT_EQ(step_first_order(s, x), first * s);
    ASSERT_EQ(step_second_order(s, x), second * s);
  }
}

TEST(MapMatrix, Examples) {
  EXPECT_EQ(map_matrix(kFirst, q(0)), Mat2q::identity());
  EXPECT_EQ(map_matrix(kFirst, q(1)), (Mat2q{q(1), q(-1), q(1), q(0)}));
  EXPECT_EQ(map_matrix(kFirst, q(1)).trace(), q(1));
  EXPECT_EQ(map_matrix(kSecond, q(1)), (Mat2q{q(1, 2), q(-3, 4), q(1), q(1, 2)}));
  EXPECT_EQ(map_matrix(kSecond, q(1)).det(), q(1));
}

TEST(MapMatrix, UnitJacobianExactly) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Rational x = oracle::random_rational(rng, 10, 97);
    ASSERT_EQ(map_matrix(kFirst, x).det(), q(1));
    ASSERT_EQ(map_matrix(kSecond, x).det(), q(1));
    ASSERT_EQ(map_matrix(kFirst, x).trace(), q(2) - x * x);
    ASSERT_EQ(map_matrix(kSecond, x).trace(), q(2) - x * x);
  }
}

TEST(GeneratorRelations, AllHold) {
  const auto checks = check_generator_relations();
  EXPECT_EQ(checks.size(), 6u);
  for (const auto& c : checks) EXPECT_TRUE(c.holds) << c.name;
  const Mat2q a = generator_a<Rational>(), b = generator_b<Rational>();
  EXPECT_EQ(a * a, Mat2q{});
  EXPECT_EQ(a * b * a, -a);
  EXPECT_EQ(commutator(a, commutator(a, b)), q(2) * a);
}

TEST(EvalF, ClosedFormOracleAgreesWithPartialSums) {
  // Validate the test oracle itself before trusting it anywhere else.
  for (int i = 1; i <= 15; ++i) {
    const double x = 0.1 * i;
    EXPECT_NEAR(oracle::f_closed_form(x), oracle::f_partial_sum(x, 400), 1e-10) << x;
  }
  for (double x : {0.1, 0.5}) EXPECT_NEAR(oracle::f_closed_form(x), oracle::f_partial_sum(x, 30), 1e-10);
}

TEST(EvalF, Examples) {
  EXPECT_EQ(eval_F(0.0), 1.0);
  EXPECT_NEAR(eval_F(1.0), 2.0 * std::numbers::pi / (3.0 * std::sqrt(3.0)), 1e-14);
  EXPECT_THROW(eval_F(2.0), Divergent);
  EXPECT_THROW(eval_F(-2.0), Divergent);
  EXPECT_THROW(eval_F(1.0, 0.0), DomainError);
  EXPECT_THROW(eval_F(NAN), DomainError);
  try {
    eval_F(2.5);
    FAIL();
  } catch (const Divergent& e) {
    EXPECT_EQ(e.x(), 2.5);
  }
}

TEST(EvalF, MatchesClosedFormInsideRadius) {
  for (int i = -19; i <= 19; ++i) {
    const double x = 0.1 * i;
    const double f = oracle::f_closed_form(x);
    EXPECT_NEAR(eval_F(x, 1e-15), f, 1e-13 * f) << x;
    EXPECT_EQ(eval_F(x), eval_F(-x));
  }
}

TEST(MatrixExp, RotationAndNilpotent) {
  const double t = 0.7;
  const Mat2d e = matrix_exp(Mat2d{0, -t, t, 0});
  EXPECT_LT(max_abs_diff(e, Mat2d{std::cos(t), -std::sin(t), std::sin(t), std::cos(t)}), 1e-15);
  EXPECT_EQ(matrix_exp(Mat2d{0, 0, 3, 0}), (Mat2d{1, 0, 3, 1}));
  const double big = 20.0;
  EXPECT_LT(max_abs_diff(matrix_exp(Mat2d{0, -big, big, 0}), Mat2d{std::cos(big), -std::sin(big), std::sin(big), std::cos(big)}),
            1e-12);
}

TEST(MatrixLog, Examples) {
  const double t = std::numbers::pi / 3.0;
  const Mat2d rot{std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
  EXPECT_LT(max_abs_diff(matrix_log_principal(rot), Mat2d{0, -t, t, 0}), 1e-15);
  EXPECT_EQ(matrix_log_principal(Mat2d::identity()), Mat2d{});
  EXPECT_LT(max_abs_diff(matrix_log_principal(map_matrix(kFirst, 1.0)), 1.0 * effective_generator(kFirst, 1.0)), 1e-12);
  try {
    matrix_log_principal(map_matrix(kFirst, 2.0));
    FAIL();
  } catch (const NoEllipticLog& e) {
    EXPECT_EQ(e.trace(), -2.0);
  }
  EXPECT_THROW(matrix_log_principal(Mat2d{2, 0, 0, 2}), DomainError);
}

TEST(EffectiveGenerator, Examples) {
  EXPECT_EQ(effective_generator(kFirst, 0.0), (Mat2d{0, -1, 1, 0}));
  EXPECT_EQ(effective_generator(kSecond, 0.0), (Mat2d{0, -1, 1, 0}));
  EXPECT_LT(max_abs_diff(matrix_exp(1.0 * effective_generator(kFirst, 1.0)), map_matrix(kFirst, 1.0)), 1e-12);
  EXPECT_EQ(generator_direction(kSecond, q(1)), (Mat2q{q(0), q(-3, 4), q(1), q(0)}));
  EXPECT_EQ(generator_direction(kFirst, q(1)), (Mat2q{q(1, 2), q(-1), q(1), q(-1, 2)}));
  EXPECT_THROW(effective_generator(kFirst, 2.0), Divergent);
  EXPECT_THROW(effective_generator(kSecond, -3.0), Divergent);
}

TEST(EffectiveGenerator, ReproducesTheMapInsideTheRadius) {
  for (const auto scheme : {kFirst, kSecond}) {
    for (int i = -18; i <= 18; ++i) {
      const double x = 0.1 * i + 0.05;
      const Mat2d g = x * effective_generator(scheme, x);
      EXPECT_LT(max_abs_diff(matrix_exp(g), map_matrix(scheme, x)), 1e-12) << to_string(scheme) << " " << x;
      EXPECT_LT(max_abs_diff(matrix_log_principal(map_matrix(scheme, x)), g), 1e-12) << to_string(scheme) << " " << x;
    }
  }
}

TEST(EffectiveGenerator, SmallStepLimit) {
  for (const auto scheme : {kFirst, kSecond}) {
    EXPECT_LT(max_abs_diff(effective_generator(scheme, 1e-6), Mat2d{0, -1, 1, 0}), 1e-6);
    const Mat2d m = to_double(shadow_form(scheme, q(1, 1000000)).m);
    EXPECT_LT(max_abs_diff(m, Mat2d{0.5, 0, 0, 0.5}), 1e-6);
  }
}

TEST(ShadowForm, Examples) {
  EXPECT_EQ(shadow_form(kFirst, q(0)).m, (Mat2q{q(1, 2), q(0), q(0), q(1, 2)}));
  EXPECT_EQ(shadow_form(kFirst, q(1)).m, (Mat2q{q(1, 2), q(-1, 4), q(-1, 4), q(1, 2)}));
  EXPECT_EQ(shadow_form(kSecond, q(1)).m, (Mat2q{q(1, 2), q(0), q(0), q(3, 8)}));
  // E1 = (p^2 - x p q + q^2)/2 at x = 1
  EXPECT_EQ(shadow_energy(PhaseStateq{q(2), q(3)}, kFirst, q(1)), q(4 - 6 + 9, 2));
  EXPECT_EQ(shadow_energy(PhaseStateq{q(2), q(2)}, kSecond, q(1)), q(4 * 1 + 3, 2));
}

TEST(ShadowEnergy, Examples) {
  for (const auto scheme : {kFirst, kSecond}) {
    for (long xn : {0, 1, 3, 7}) EXPECT_EQ(shadow_energy(PhaseStateq{q(1), q(0)}, scheme, q(xn, 2)), q(1, 2));
  }
  EXPECT_EQ(shadow_energy(PhaseStateq{q(1), q(1)}, kFirst, q(1)), q(1, 2));
  EXPECT_EQ(shadow_energy(PhaseStateq{q(1, 2), q(1)}, kSecond, q(1)), q(1, 2));
}

TEST(ShadowEnergy, FirstOrderDeviationIsLinearInStep) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Rational x = oracle::random_rational(rng, 3, 11);
    const PhaseStateq s{oracle::random_rational(rng, 3, 7), oracle::random_rational(rng, 3, 7)};
    ASSERT_EQ(shadow_energy(s, kFirst, x) - shadow_energy(s, kFirst, q(0)), -x * s.p * s.q / q(2));
  }
}

TEST(ShadowForm, ProductWithGeneratorIsAntisymmetric) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const Rational x = oracle::random_rational(rng, 5, 31);
    for (const auto scheme : {kFirst, kSecond}) {
      const Mat2q ml = shadow_form(scheme, x).m * generator_direction(scheme, x);
      ASSERT_EQ(ml.transpose() + ml, Mat2q{});
      const Mat2q m = shadow_form(scheme, x).m;
      ASSERT_EQ(m, m.transpose());
      // Exact invariance under the one-step map: S^t M S = M.
      const Mat2q s = map_matrix(scheme, x);
      ASSERT_EQ(s.transpose() * m * s, m);
    }
  }
}

TEST(ShadowForm, DefinitenessBoundary) {
  for (const auto scheme : {kFirst, kSecond}) {
    for (long n = -40; n <= 40; ++n) {
      const Rational x(n, 10);
      const int expected = (q(2) - x.abs()).sign();
      ASSERT_EQ(shadow_form(scheme, x).m.det().sign(), expected) << n;
    }
    EXPECT_EQ(shadow_form(scheme, q(2)).m.det(), q(0));
    EXPECT_EQ(shadow_form(scheme, q(1)).m.det(), q(3, 16));
  }
}

TEST(Stability, Examples) {
  EXPECT_EQ(stability_classify(kFirst, 1.0), StabilityClass::Elliptic);
  EXPECT_EQ(stability_classify(kFirst, 0.0), StabilityClass::Elliptic);
  EXPECT_EQ(stability_classify(kFirst, 2.0), StabilityClass::Parabolic);
  EXPECT_EQ(stability_classify(kSecond, -2.0), StabilityClass::Parabolic);
  EXPECT_EQ(stability_classify(kFirst, 3.0), StabilityClass::Hyperbolic);
  EXPECT_NEAR(spectral_radius(kFirst, 3.0), (7.0 + 3.0 * std::sqrt(5.0)) / 2.0, 1e-14);
  EXPECT_EQ(spectral_radius(kFirst, 2.0), 1.0);
  EXPECT_EQ(spectral_radius(kSecond, 1.5), 1.0);
  EXPECT_EQ(to_string(StabilityClass::Hyperbolic), "Hyperbolic");
}

TEST(Stability, SpectralRadiusIsDominantEigenvalue) {
  for (double x : {2.1, 2.5, 3.0, 4.0, -3.0}) {
    const Mat2d m = map_matrix(kFirst, x);
    const double tr = m.trace();
    // eigenvalues solve l^2 - tr l + 1 = 0
    const double disc = std::sqrt(tr * tr - 4.0);
    const double l = std::max(std::fabs((tr + disc) / 2), std::fabs((tr - disc) / 2));
    EXPECT_NEAR(spectral_radius(kFirst, x), l, 1e-12 * l) << x;
  }
}

TEST(Trajectory, Examples) {
  const PhaseStateq s0{q(1), q(0)};
  EXPECT_EQ(trajectory(s0, kFirst, q(1), 0), std::vector<PhaseStateq>{s0});
  const auto six = trajectory(s0, kFirst, q(1), 6);
  EXPECT_EQ(six.back(), s0);
  for (std::size_t i = 1; i < 6; ++i) EXPECT_NE(six[i], s0);

  const auto grow = trajectory(PhaseStated{1, 0}, kFirst, 3.0, 50);
  const auto& s = grow.back();
  const double rate = std::log(s.p * s.p + s.q * s.q) / (2.0 * 50);
  EXPECT_NEAR(rate, std::log(spectral_radius(kFirst, 3.0)), 0.01 * std::log(spectral_radius(kFirst, 3.0)));
}

TEST(Trajectory, RationalOverflowIsReported) {
  try {
    trajectory(PhaseStateq{q(1), q(0)}, kFirst, q(3), 1000, 64);
    FAIL();
  } catch (const RationalOverflow& e) {
    EXPECT_EQ(e.bits(), 64u);
    EXPECT_GT(e.step(), 10u);
    EXPECT_LT(e.step(), 60u);
  }
}

TEST(Trajectory, ExactShadowConservationIncludingLargeSteps) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 8; ++trial) {
    const Rational x = oracle::random_rational(rng, 4, 8);
    const PhaseStateq s0{oracle::random_rational(rng, 2, 5), oracle::random_rational(rng, 2, 5)};
    for (const auto scheme : {kFirst, kSecond}) {
      const auto traj = trajectory(s0, scheme, x, 1000, std::size_t{1} << 20);
      const Rational e0 = shadow_energy(s0, scheme, x);
      for (const auto& s : traj) ASSERT_EQ(shadow_energy(s, scheme, x), e0) << x << " " << to_string(scheme);
    }
  }
}

TEST(Trajectory, ParabolicEdgeGrowsQuadratically) {
  // At x = 2 the first-order map is -(I - nN) with N^2 = 0, so from (1,0):
  // p_n = (-1)^n (1 - 2n), q_n = (-1)^(n+1) 2n and r^2 = 8n^2 - 4n + 1.
  const auto first = trajectory(PhaseStateq{q(1), q(0)}, kFirst, q(2), 300);
  const auto second = trajectory(PhaseStateq{q(1), q(0)}, kSecond, q(2), 300);
  for (long n = 0; n <= 300; ++n) {
    const auto& s = first[static_cast<std::size_t>(n)];
    ASSERT_EQ(s.p * s.p + s.q * s.q, q(8 * n * n - 4 * n + 1));
    ASSERT_GE(s.p * s.p + s.q * s.q, q(4 * n * n));
    ASSERT_LE(s.p * s.p + s.q * s.q, q(8 * n * n + 1));
    const auto& t = second[static_cast<std::size_t>(n)];
    ASSERT_EQ(t.p * t.p + t.q * t.q, q(4 * n * n + 1));
  }
}

TEST(Trajectory, BoundedInsideTheRadius) {
  const std::vector<double> xs{0.5, 1.0, 1.5, 1.9};
  for (const auto scheme : {kFirst, kSecond}) {
    const std::vector<PhaseStated> s0(xs.size(), PhaseStated{1.0, 0.0});
    const auto lanes = propagate_batch(scheme, s0, xs, 100000);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Mat2d m2 = 2.0 * to_double(shadow_form(scheme, Rational::from_double(xs[i])).m);
      const double tr = m2.trace(), det = m2.det();
      const double lambda_min = (tr - std::sqrt(tr * tr - 4.0 * det)) / 2.0;
      const double e = shadow_energy(s0[i], scheme, xs[i]);
      EXPECT_LE(lanes[i].max_radius_sq, 4.0 * e / lambda_min + 1e-9) << xs[i];
      // The tighter bound E / lambda_min(M) also holds.
      EXPECT_LE(lanes[i].max_radius_sq, 2.0 * e / lambda_min * (1 + 1e-9)) << xs[i];
    }
  }
}

TEST(Trajectory, LogGrowthOutsideTheRadius) {
  for (long tenths : {21L, 25L, 30L}) {
    const Rational x(tenths, 10);
    const auto traj = trajectory(PhaseStateq{q(1), q(0)}, kFirst, x, 200, std::size_t{1} << 20);
    const auto& s = traj.back();
    const double rate = (s.p * s.p + s.q * s.q).log_abs() / 400.0;
    const double expected = std::log(spectral_radius(kFirst, x.to_double()));
    EXPECT_NEAR(rate, expected, 0.01 * expected) << x;
  }
}

TEST(PropagateBatch, MatchesStepLoop) {
  const std::vector<double> xs{0.3, 1.7, 2.2, 0.9, 1.1};
  const std::vector<PhaseStated> s0{{1, 0}, {0.5, -0.25}, {1, 1}, {-2, 0.1}, {0, 1}};
  for (const auto scheme : {kFirst, kSecond}) {
    const auto lanes = propagate_batch(scheme, s0, xs, 37);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto traj = trajectory(s0[i], scheme, xs[i], 37);
      double max_r2 = 0;
      for (const auto& s : traj) max_r2 = std::max(max_r2, s.p * s.p + s.q * s.q);
      EXPECT_EQ(lanes[i].final_state, traj.back());
      EXPECT_EQ(lanes[i].max_radius_sq, max_r2);
    }
  }
  EXPECT_THROW(propagate_batch(kFirst, s0, std::span<const double>(xs).first(2), 3), UsageError);
}
