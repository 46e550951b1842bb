#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rhodonea/curve.hpp"
#include "rhodonea/nodes.hpp"
#include "rhodonea/variety.hpp"

using namespace rhodonea;

TEST(HPoly, LowDegrees) {
  EXPECT_DOUBLE_EQ(h_poly(1, {0.3, -0.7}), 0.3);
  EXPECT_NEAR(h_poly(2, {0.3, -0.7}), 0.09 - 0.49, 1e-15);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int k = 0; k < 1000; ++k) {
    const double t = u(rng);
    EXPECT_NEAR(h_poly(3, {std::cos(t), std::sin(t)}), std::cos(3 * t), 1e-13);
    EXPECT_NEAR(h_poly(8, {std::cos(t), std::sin(t)}), std::cos(8 * t), 1e-12);
  }
  EXPECT_THROW(h_poly(0, {1, 0}), std::invalid_argument);
}

TEST(VarietyResidual, Examples) {
  EXPECT_NEAR(variety_residual({FrequencyPair(1, 1)}, {1.0, 0.0}), 0.0, 1e-15);
  EXPECT_NEAR(variety_residual({FrequencyPair(1, 2)}, {0.5, 0.5}), 0.125, 1e-15);
  EXPECT_THROW(variety_residual({FrequencyPair(1, 2)}, {0.9, 0.9}), std::domain_error);
}

TEST(VarietyResidual, VanishesOnEveryConstituentCurve) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  for (int m1 = 1; m1 <= 6; ++m1)
    for (int m2 = 1; m2 <= 6; ++m2) {
      const FrequencyPair m(m1, m2);
      const VarietySpec spec{m};
      for (int rho = 0; rho < 2 * m.gcd(); ++rho) {
        const RhodoneaCurve c{m, static_cast<double>(rho) / m2};
        for (int k = 0; k < 10000; ++k) {
          Point2 p = c(u(rng));
          const double n = norm(p);
          if (n > 1.0) p = {p.x / n, p.y / n};
          ASSERT_NEAR(variety_residual(spec, p), 0.0, 1e-9);
        }
      }
    }
}

TEST(VarietyResidual, PolarAndCartesianAgree) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ur(0.0, 1.0), ut(-3.14, 3.14);
  for (int m1 = 1; m1 <= 6; ++m1)
    for (int m2 = 1; m2 <= 6; ++m2) {
      const VarietySpec spec{FrequencyPair(m1, m2)};
      for (int k = 0; k < 200; ++k) {
        const double r = ur(rng), t = ut(rng);
        EXPECT_NEAR(variety_residual(spec, {r * std::cos(t), r * std::sin(t)}),
                    variety_residual_polar(spec, r, t), 1e-11);
      }
    }
}

TEST(VarietyResidual, ZeroAtNodes) {
  for (int m1 = 1; m1 <= 8; ++m1)
    for (int m2 = 1; m2 <= 8; ++m2) {
      const FrequencyPair m(m1, m2);
      const VarietySpec spec{m};
      for (const auto& p : node_set(m).points) {
        ASSERT_NEAR(variety_residual(spec, {p.x, p.y}), 0.0, 1e-11);
        ASSERT_LE(std::abs(variety_residual(spec, {p.x, p.y})), variety_tolerance(m));
      }
    }
}

TEST(Extremality, EvenAndOddNodes) {
  const VarietySpec s53{FrequencyPair(5, 3)};
  EXPECT_EQ(node_extremality_check(s53, {0, 0}), Extremality::max_case);
  EXPECT_EQ(node_extremality_check(s53, {1, 1}), Extremality::zero_case);
  EXPECT_EQ(node_extremality_check({FrequencyPair(4, 4)}, {2, 0}), Extremality::max_case);
  EXPECT_THROW(node_extremality_check(s53, {0, 1}), std::out_of_range);
  for (int m1 = 1; m1 <= 7; ++m1)
    for (int m2 = 1; m2 <= 7; ++m2) {
      const FrequencyPair m(m1, m2);
      for (const auto& i : NodalIndexSet(m))
        EXPECT_EQ(node_extremality_check({m}, i),
                  NodalIndexSet::is_even(i) ? Extremality::max_case : Extremality::zero_case);
    }
}
