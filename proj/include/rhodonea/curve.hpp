#pragma once

// Rhodonea (rose) curves on the unit disk: parametrization, equidistant
// sampling and the self-intersection structure of the sampled points.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace rhodonea {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Parity of (m1 + m2) / gcd(m1, m2).
enum class Parity { odd, even };

/// Frequency vector m = (m1, m2) of a rhodonea curve. m1 drives the angular
/// motion, m2 the radial one.
class FrequencyPair {
 public:
  FrequencyPair(int m1, int m2) : m1_(m1), m2_(m2) {
    if (m1 < 1 || m2 < 1)
      throw std::invalid_argument("frequencies must be positive, got (" + std::to_string(m1) +
                                  "," + std::to_string(m2) + ")");
    g_ = std::gcd(m1, m2);
  }

  int m1() const { return m1_; }
  int m2() const { return m2_; }
  int gcd() const { return g_; }
  bool coprime() const { return g_ == 1; }
  Parity parity() const { return ((m1_ / g_ + m2_ / g_) % 2 == 1) ? Parity::odd : Parity::even; }
  FrequencyPair reduced() const { return {m1_ / g_, m2_ / g_}; }

  /// Number of equidistant samples l = 0, ..., 4 m1 m2 / g - 1.
  std::int64_t sample_count() const { return 4LL * m1_ * m2_ / g_; }

  friend bool operator==(const FrequencyPair&, const FrequencyPair&) = default;

 private:
  int m1_;
  int m2_;
  int g_;
};

/// t -> (cos(m2 t) cos(m1 t - alpha pi), cos(m2 t) sin(m1 t - alpha pi)).
/// alpha is measured in units of pi.
struct RhodoneaCurve {
  FrequencyPair freq;
  double alpha = 0.0;

  Point2 operator()(double t) const {
    const double radial = std::cos(freq.m2() * t);
    const double angle = freq.m1() * t - alpha * std::numbers::pi;
    return {radial * std::cos(angle), radial * std::sin(angle)};
  }
};

inline Point2 eval_curve(const RhodoneaCurve& curve, double t) { return curve(t); }

/// 2 pi / g if (m1 + m2) / g is odd, pi / g otherwise.
inline double minimal_period(const FrequencyPair& freq) {
  const double base = freq.parity() == Parity::odd ? 2.0 * std::numbers::pi : std::numbers::pi;
  return base / freq.gcd();
}

/// t_l = l pi / (2 m1 m2).
inline double sample_time(const FrequencyPair& freq, std::int64_t l) {
  return static_cast<double>(l) * std::numbers::pi / (2.0 * freq.m1() * freq.m2());
}

/// Number of parameters s in [0, 2 pi) with curve(s) == curve(t_l).
///
/// Only defined for coprime frequencies; callers with gcd > 1 reduce by g
/// first. The center (l = m1 mod 2 m1) is visited 2 m2 times, ordinary
/// double points twice (four times when m1 + m2 is even, since the curve
/// then closes after pi).
inline int classify_sample(const FrequencyPair& freq, std::int64_t l) {
  if (!freq.coprime())
    throw std::invalid_argument("classify_sample requires relatively prime frequencies");
  const std::int64_t m1 = freq.m1();
  const std::int64_t m2 = freq.m2();
  if (l < 0 || l >= 4 * m1 * m2) throw std::out_of_range("sample index out of range");

  if (l % (2 * m1) == m1 % (2 * m1)) return static_cast<int>(2 * m2);
  if (freq.parity() == Parity::odd) return (l % m1 != 0) ? 2 : 1;
  return (l % 2 == 0 && (l / 2) % m1 != 0) ? 4 : 2;
}

namespace detail {

// Greedy deduplication on a hash grid with cell size tol. Keeps the first
// representative of every cluster, in input order.
class PointDeduplicator {
 public:
  explicit PointDeduplicator(double tol) : tol_(tol) {}

  /// Returns true if p was new.
  bool insert(Point2 p) {
    const std::int64_t cx = cell(p.x);
    const std::int64_t cy = cell(p.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (std::size_t idx : it->second)
          if (distance(points_[idx], p) <= tol_) return false;
      }
    }
    cells_[key(cx, cy)].push_back(points_.size());
    points_.push_back(p);
    return true;
  }

  const std::vector<Point2>& points() const { return points_; }

 private:
  std::int64_t cell(double v) const { return static_cast<std::int64_t>(std::floor(v / tol_)); }
  static std::uint64_t key(std::int64_t a, std::int64_t b) {
    return (static_cast<std::uint64_t>(a) << 32) ^ (static_cast<std::uint64_t>(b) & 0xffffffffULL);
  }

  double tol_;
  std::vector<Point2> points_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

}  // namespace detail

/// Euclidean tolerance used when comparing node sets.
inline constexpr double kPointTolerance = 1e-9;

inline std::vector<Point2> unique_points(const std::vector<Point2>& pts, double tol = kPointTolerance) {
  detail::PointDeduplicator dedup(tol);
  for (const auto& p : pts) dedup.insert(p);
  return dedup.points();
}

/// The sampled points of a single curve with coprime frequencies,
/// deduplicated. For m1 + m2 odd this is the union of all self-intersection
/// and boundary points of the curve (2 m1 m2 + 1 points).
inline std::vector<Point2> curve_nodes(const RhodoneaCurve& curve, double tol = kPointTolerance) {
  if (!curve.freq.coprime())
    throw std::invalid_argument("curve_nodes requires relatively prime frequencies");
  detail::PointDeduplicator dedup(tol);
  const std::int64_t n = 4LL * curve.freq.m1() * curve.freq.m2();
  for (std::int64_t l = 0; l < n; ++l) dedup.insert(curve(sample_time(curve.freq, l)));
  return dedup.points();
}

}  // namespace rhodonea
