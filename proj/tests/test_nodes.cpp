#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "oracles.hpp"
#include "rhodonea/curve.hpp"
#include "rhodonea/nodes.hpp"

using namespace rhodonea;
constexpr double kPi = std::numbers::pi;

TEST(IndexSet, Cardinalities) {
  const NodalIndexSet s53(FrequencyPair(5, 3));
  EXPECT_EQ(s53.size(), 33u);
  EXPECT_EQ(s53.even_part().size(), 18u);
  EXPECT_EQ(s53.odd_part().size(), 15u);
  EXPECT_EQ(NodalIndexSet(FrequencyPair(4, 4)).size(), 36u);

  const NodalIndexSet s11(FrequencyPair(1, 1));
  ASSERT_EQ(s11.size(), 3u);
  EXPECT_EQ(s11[0], (NodeIndex{0, 0}));
  EXPECT_EQ(s11[1], (NodeIndex{0, 2}));
  EXPECT_EQ(s11[2], (NodeIndex{1, -1}));
}

TEST(IndexSet, MatchesBruteEnumerationAndPositions) {
  for (int m1 = 1; m1 <= 9; ++m1)
    for (int m2 = 1; m2 <= 9; ++m2) {
      const FrequencyPair m(m1, m2);
      const NodalIndexSet set(m);
      const auto brute = oracle::index_set(m);
      ASSERT_EQ(set.size(), brute.size());
      ASSERT_EQ(set.size(), static_cast<std::size_t>((2 * m1 + 1) * m2));
      for (std::size_t p = 0; p < brute.size(); ++p) {
        ASSERT_EQ(set[p], brute[p]);
        ASSERT_EQ(set.position(brute[p]), p);
      }
      EXPECT_EQ(set.even_part().size() + set.odd_part().size(), set.size());
      EXPECT_EQ(set.even_part().size(), static_cast<std::size_t>((m1 + 1) * m2));
    }
  EXPECT_THROW(node_position(FrequencyPair(5, 3), {5, 1}), std::out_of_range);
  EXPECT_THROW(node_position(FrequencyPair(5, 3), {0, 1}), std::out_of_range);
}

TEST(IndexSet, WeightsSumToOneExactly) {
  for (int m1 = 1; m1 <= 64; ++m1)
    for (int m2 = 1; m2 <= 64; m2 += (m2 < 8 ? 1 : 7)) {
      const NodalIndexSet set(FrequencyPair(m1, m2));
      std::int64_t num = 0;
      for (const auto& i : set) num += NodalIndexSet::weight_numerator(i);
      ASSERT_EQ(num, set.weight_denominator());
      double sum = 0.0;
      for (const auto& i : set) sum += set.weight(i);
      ASSERT_NEAR(sum, 1.0, 1e-15 * set.size());  // naive summation drift
    }
}

TEST(NodeCoords, Examples) {
  const auto a = node_coords(FrequencyPair(5, 3), {0, 0});
  EXPECT_DOUBLE_EQ(a.r, 1.0);
  EXPECT_DOUBLE_EQ(a.theta, 0.0);
  EXPECT_DOUBLE_EQ(a.x, 1.0);
  EXPECT_EQ(node_coords(FrequencyPair(5, 3), {5, -1}).r, 0.0);
  const auto c = node_coords(FrequencyPair(2, 3), {1, 1});
  EXPECT_NEAR(c.r, std::sqrt(2.0) / 2, 1e-15);
  EXPECT_NEAR(c.theta, kPi / 6, 1e-15);
  EXPECT_NEAR(c.x * c.x + c.y * c.y, c.r * c.r, 1e-14);
  EXPECT_THROW(node_coords(FrequencyPair(5, 3), {6, 0}), std::out_of_range);
}

TEST(IndexFromSample, FirstSample) {
  EXPECT_EQ(index_from_sample(FrequencyPair(2, 3), 0, 0), (NodeIndex{0, 0}));
  EXPECT_THROW(index_from_sample(FrequencyPair(2, 3), 24, 0), std::out_of_range);
  EXPECT_THROW(index_from_sample(FrequencyPair(2, 3), 0, 2), std::out_of_range);
}

TEST(IndexFromSample, SurjectiveWithPreimageCountsAndParity) {
  for (int m1 = 1; m1 <= 8; ++m1)
    for (int m2 = 1; m2 <= 8; ++m2) {
      const FrequencyPair m(m1, m2);
      const NodalIndexSet set(m);
      std::map<NodeIndex, int> count;
      for (std::int64_t l = 0; l < m.sample_count(); ++l)
        for (int rho = 0; rho < 2 * m.gcd(); ++rho) {
          const NodeIndex i = index_from_sample(m, l, rho);
          ++count[i];
          ASSERT_EQ(l % 2 == 0, NodalIndexSet::is_even(i));
          const Point2 p = RhodoneaCurve{m, static_cast<double>(rho) / m2}(sample_time(m, l));
          const DiskPoint q = node_coords(m, i);
          ASSERT_LT(distance(p, {q.x, q.y}), 1e-12);
        }
      ASSERT_EQ(count.size(), set.size());
      for (const auto& [i, c] : count) ASSERT_EQ(c, i.i1 == 0 ? 2 : 4) << m1 << "," << m2;
    }
}

TEST(NodeSet, Cardinalities) {
  EXPECT_EQ(node_set(FrequencyPair(5, 3)).points.size(), 31u);
  EXPECT_EQ(node_set(FrequencyPair(4, 4)).points.size(), 33u);
  EXPECT_EQ(node_set(FrequencyPair(5, 3)).center_multiplicity, 3);
}

TEST(NodeSet, EqualsSingleCurveNodesForOddParity) {
  const auto nodes = node_set(FrequencyPair(2, 3));
  const auto curve = curve_nodes({FrequencyPair(2, 3), 0.0});
  ASSERT_EQ(nodes.points.size(), curve.size());
  for (const auto& p : nodes.points) {
    double best = 1.0;
    for (const auto& q : curve) best = std::min(best, distance({p.x, p.y}, q));
    EXPECT_LT(best, 1e-9);
  }
}

TEST(NodeSet, UnionOfRotatedCurves) {
  for (int m1 = 1; m1 <= 8; ++m1)
    for (int m2 = 1; m2 <= 8; ++m2) {
      const FrequencyPair m(m1, m2);
      std::vector<Point2> samples;
      for (int rho = 0; rho < 2 * m.gcd(); ++rho) {
        const RhodoneaCurve c{m, static_cast<double>(rho) / m2};
        for (std::int64_t l = 0; l < m.sample_count(); ++l) samples.push_back(c(sample_time(m, l)));
      }
      const auto from_curves = unique_points(samples);
      const auto nodes = node_set(m);
      ASSERT_EQ(from_curves.size(), nodes.points.size()) << m1 << "," << m2;
      ASSERT_EQ(nodes.points.size(), static_cast<std::size_t>(2 * m1 * m2 + 1));
      std::vector<Point2> both;
      for (const auto& p : nodes.points) both.push_back({p.x, p.y});
      both.insert(both.end(), from_curves.begin(), from_curves.end());
      ASSERT_EQ(unique_points(both).size(), nodes.points.size()) << m1 << "," << m2;
    }
}
