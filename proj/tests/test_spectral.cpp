#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rhodonea/spectral.hpp"

using namespace rhodonea;

namespace {

std::vector<SpectralIndex> as_vector(const SpectralIndexSet& s) { return {s.begin(), s.end()}; }

std::vector<SpectralIndexSet> all_kinds(const FrequencyPair& m, std::uint32_t seed) {
  std::vector<SpectralIndexSet> out{gamma_rect(m), gamma_triangle(m)};
  for (std::uint32_t k = 0; k < 3; ++k) {
    const auto om = oracle::random_omega(m, seed + k);
    out.push_back(gamma_omega(m, om));
  }
  return out;
}

}  // namespace

TEST(Rectangular, Examples) {
  EXPECT_EQ(gamma_rect(FrequencyPair(5, 3)).size(), 33u);
  const auto s11 = as_vector(gamma_rect(FrequencyPair(1, 1)));
  EXPECT_EQ(s11, (std::vector<SpectralIndex>{{0, 0}, {1, 1}, {2, 0}}));
  const auto ups = gamma_rect(FrequencyPair(5, 3)).upsilon();
  EXPECT_EQ(ups.size(), 5u);
  for (const auto& g : ups) EXPECT_EQ(g.g2, 3);
}

TEST(Triangular, Examples) {
  const auto t53 = gamma_triangle(FrequencyPair(5, 3));
  EXPECT_EQ(t53.size(), 33u);
  EXPECT_EQ(t53.upsilon(), (std::vector<SpectralIndex>{{5, 3}}));
  EXPECT_TRUE(gamma_triangle(FrequencyPair(2, 3)).upsilon().empty());
  for (const auto& g : t53) EXPECT_LE(g.g1 * 3 + std::abs(g.g2) * 5, 2 * 5 * 3);
}

TEST(Triangular, EqualsOmegaConstruction) {
  for (int m1 = 1; m1 <= 9; ++m1)
    for (int m2 = 1; m2 <= 9; ++m2) {
      const FrequencyPair m(m1, m2);
      const auto tri = gamma_triangle(m);
      const auto om = SpectralIndexSet::triangle_omega(m);
      EXPECT_EQ(as_vector(tri), as_vector(gamma_omega(m, om)));
      const auto ups = tri.upsilon();
      if ((m1 + m2) % 2 == 1)
        EXPECT_TRUE(ups.empty());
      else
        EXPECT_EQ(ups, (std::vector<SpectralIndex>{{m1, m2}}));
    }
}

TEST(Omega, Examples) {
  const FrequencyPair m53(5, 3);
  EXPECT_EQ(as_vector(gamma_omega(m53, {})), as_vector(gamma_rect(m53)));
  const std::vector<SpectralIndex> om{{0, 0}};
  EXPECT_EQ(as_vector(gamma_omega(FrequencyPair(1, 1), om)),
            (std::vector<SpectralIndex>{{1, 1}, {2, 0}, {2, 2}}));
  const std::vector<SpectralIndex> bad{{0, 2}};
  EXPECT_THROW(gamma_omega(FrequencyPair(1, 1), bad), std::invalid_argument);
  EXPECT_THROW(make_spectral_set(m53, SpectralKind::omega), std::invalid_argument);
}

TEST(Omega, CardinalityForRandomSubsets) {
  for (int m1 = 1; m1 <= 8; ++m1)
    for (int m2 = 1; m2 <= 8; ++m2) {
      const FrequencyPair m(m1, m2);
      for (const auto& s : all_kinds(m, 100 * m1 + m2)) {
        ASSERT_EQ(s.size(), static_cast<std::size_t>((2 * m1 + 1) * m2));
        for (std::size_t p = 0; p < s.size(); ++p) ASSERT_EQ(s.position(s[p]), p);
      }
    }
}

TEST(Flip, ExamplesAndInvolution) {
  const FrequencyPair m(5, 3);
  EXPECT_EQ(flip(m, {0, 0}), (SpectralIndex{10, 6}));
  EXPECT_EQ(flip(m, {10, 6}), (SpectralIndex{0, 0}));
  EXPECT_THROW(flip(m, {11, 0}), std::out_of_range);
}

TEST(Flip, GlideReflectionInvariance) {
  for (int m1 = 1; m1 <= 7; ++m1)
    for (int m2 = 1; m2 <= 7; ++m2) {
      const FrequencyPair m(m1, m2);
      const NodalIndexSet set(m);
      for (int g1 = 0; g1 <= 2 * m1; ++g1)
        for (int g2 = -2 * m2 + 1; g2 <= 2 * m2; ++g2) {
          const SpectralIndex g{g1, g2};
          ASSERT_EQ(flip(m, flip(m, g)), g);
          if (!even_parity(g)) continue;
          for (const auto& i : set) ASSERT_EQ(chi(m, flip(m, g), i), chi(m, g, i));
        }
    }
}

TEST(Chi, Examples) {
  EXPECT_EQ(chi(FrequencyPair(5, 3), {0, 0}, {3, 1}), complex(1.0, 0.0));
  EXPECT_NEAR(std::abs(chi(FrequencyPair(2, 3), {2, 0}, {1, 1})), 0.0, 1e-16);
  std::mt19937 rng(1);
  for (int m1 = 1; m1 <= 7; ++m1)
    for (int m2 = 1; m2 <= 7; ++m2) {
      const FrequencyPair m(m1, m2);
      const auto idx = oracle::index_set(m);
      for (const auto& g : gamma_rect(m)) {
        const auto& i = idx[rng() % idx.size()];
        const DiskPoint p = node_coords(m, i);
        ASSERT_LT(std::abs(chi(m, g, i) - oracle::basis(g, p.r, p.theta)), 1e-12);
        ASSERT_LT(std::abs(chi(m, g, i) - oracle::chi(m, g, i)), 1e-13);
      }
    }
}

TEST(ChiReal, Examples) {
  const FrequencyPair m(5, 3);
  const auto s = gamma_rect(m);
  for (const auto& i : NodalIndexSet(m)) EXPECT_DOUBLE_EQ(chi_real(s, {0, 0}, i), 1.0);
  const SpectralIndex g{1, -1};
  ASSERT_FALSE(s.in_upsilon(*s.position(g)));
  EXPECT_EQ(s.real_angular(*s.position(g)), Angular::sin);
  const NodeIndex i{2, 2};
  EXPECT_NEAR(chi_real(s, g, i), std::cos(2 * oracle::pi / 10) * std::sin(-2 * oracle::pi / 6), 1e-15);
  EXPECT_THROW(chi_real(s, {1, 5}, i), std::invalid_argument);
}

TEST(InnerProduct, Examples) {
  const FrequencyPair m(5, 3);
  EXPECT_NEAR(std::abs(inner_product(chi_grid(m, {0, 0}), chi_grid(m, {0, 0})) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(chi_grid(m, {1, 1}), chi_grid(m, {1, 1})) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(chi_grid(m, {1, 1}), chi_grid(m, {3, 1}))), 0.0, 1e-15);
  EXPECT_THROW(inner_product(chi_grid(m, {0, 0}), chi_grid(FrequencyPair(3, 5), {0, 0})),
               std::invalid_argument);
}

// Gram matrices from the oracle's independent sampling, compared against the
// library's norm constants.
TEST(Gram, ComplexBasisDiagonalWithExactNorms) {
  for (int m1 = 1; m1 <= 7; ++m1)
    for (int m2 = 1; m2 <= 7; ++m2) {
      const FrequencyPair m(m1, m2);
      for (const auto& s : all_kinds(m, 7 * m1 + m2)) {
        std::vector<std::vector<complex>> v;
        for (const auto& g : s) v.push_back(oracle::sample_chi(m, g));
        for (std::size_t p = 0; p < s.size(); ++p)
          for (std::size_t q = p; q < s.size(); ++q) {
            const complex gpq = oracle::inner(m, v[p], v[q]);
            const double expect = p == q ? 1.0 / s.norm_denominator(p) : 0.0;
            ASSERT_LT(std::abs(gpq - expect), 1e-12) << to_string(s.kind()) << " m=" << m1 << "," << m2;
          }
      }
    }
}

TEST(Gram, RealBasisDiagonalWithExactNorms) {
  for (int m1 = 1; m1 <= 7; ++m1)
    for (int m2 = 1; m2 <= 7; ++m2) {
      const FrequencyPair m(m1, m2);
      for (const auto& s : all_kinds(m, 13 * m1 + m2)) {
        std::vector<std::vector<complex>> v;
        for (std::size_t p = 0; p < s.size(); ++p) {
          v.push_back(oracle::sample_chi_real(m, s[p], s.real_angular(p)));
          const auto lib = chi_real_grid(s, s[p]);
          for (std::size_t q = 0; q < lib.size(); ++q) ASSERT_NEAR(lib[q], v.back()[q].real(), 1e-13);
        }
        for (std::size_t p = 0; p < s.size(); ++p)
          for (std::size_t q = p; q < s.size(); ++q) {
            const complex gpq = oracle::inner(m, v[p], v[q]);
            const double expect = p == q ? 1.0 / s.real_norm_denominator(p) : 0.0;
            ASSERT_LT(std::abs(gpq - expect), 1e-12)
                << to_string(s.kind()) << " m=" << m1 << "," << m2 << " g=" << s[p].g1 << "," << s[p].g2;
          }
      }
    }
}
