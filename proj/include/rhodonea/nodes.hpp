#pragma once

// Nodal index set I^(m) and the rhodonea nodes in polar coordinates.
//
//   I = { (i1, i2) : 0 <= i1 <= m1, -2 m2 < i2 <= 2 m2,
//                    i2 <= 0 if i1 == m1, i1 + i2 even }
//
// Index i maps to the polar point (cos(i1 pi / (2 m1)), i2 pi / (2 m2)).
// The m2 indices with i1 == m1 all describe the center of the disk.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhodonea/curve.hpp"

namespace rhodonea {

struct NodeIndex {
  int i1 = 0;
  int i2 = 0;
  friend auto operator<=>(const NodeIndex&, const NodeIndex&) = default;
};

struct DiskPoint {
  double r = 0.0;
  double theta = 0.0;
  double x = 0.0;
  double y = 0.0;
};

namespace detail {

/// Representative of v mod n in (-n/2, n/2], n even.
inline std::int64_t centered_mod(std::int64_t v, std::int64_t n) {
  std::int64_t r = ((v % n) + n) % n;
  if (r > n / 2) r -= n;
  return r;
}

}  // namespace detail

inline bool in_index_set(const FrequencyPair& freq, NodeIndex i) {
  const int m1 = freq.m1();
  const int m2 = freq.m2();
  if (i.i1 < 0 || i.i1 > m1) return false;
  if (i.i2 <= -2 * m2 || i.i2 > 2 * m2) return false;
  if (i.i1 == m1 && i.i2 > 0) return false;
  return ((i.i1 + i.i2) % 2 + 2) % 2 == 0;
}

/// Position of i in the lexicographic (i1, i2) ordering of I^(m).
/// Every row i1 < m1 holds 2 m2 indices, the center row i1 == m1 holds m2.
inline std::size_t node_position(const FrequencyPair& freq, NodeIndex i) {
  if (!in_index_set(freq, i))
    throw std::out_of_range("node index (" + std::to_string(i.i1) + "," + std::to_string(i.i2) +
                            ") is not in I^(m)");
  const int m2 = freq.m2();
  const int first = (i.i1 % 2 == 0) ? -2 * m2 + 2 : -2 * m2 + 1;
  return static_cast<std::size_t>(i.i1) * 2 * m2 + static_cast<std::size_t>((i.i2 - first) / 2);
}

/// The index set I^(m) with its even/odd split and quadrature weights.
class NodalIndexSet {
 public:
  explicit NodalIndexSet(FrequencyPair freq) : freq_(freq) {
    const int m1 = freq.m1();
    const int m2 = freq.m2();
    indices_.reserve(static_cast<std::size_t>(2 * m1 + 1) * m2);
    for (int i1 = 0; i1 <= m1; ++i1) {
      const int last = (i1 == m1) ? 0 : 2 * m2;
      for (int i2 = -2 * m2 + 1; i2 <= last; ++i2)
        if ((i1 + i2) % 2 == 0) indices_.push_back({i1, i2});
    }
  }

  const FrequencyPair& freq() const { return freq_; }
  std::size_t size() const { return indices_.size(); }
  std::span<const NodeIndex> indices() const { return indices_; }
  const NodeIndex& operator[](std::size_t pos) const { return indices_[pos]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  bool contains(NodeIndex i) const { return in_index_set(freq_, i); }
  std::size_t position(NodeIndex i) const { return node_position(freq_, i); }

  /// Members of I_0 (i1, i2 even) and I_1 (i1, i2 odd).
  static bool is_even(NodeIndex i) { return i.i1 % 2 == 0; }
  bool is_center(NodeIndex i) const { return i.i1 == freq_.m1(); }

  std::vector<NodeIndex> even_part() const { return filter(true); }
  std::vector<NodeIndex> odd_part() const { return filter(false); }

  /// Weight numerator over the common denominator 4 m1 m2: 1 on the boundary
  /// row i1 == 0, 2 elsewhere.
  static int weight_numerator(NodeIndex i) { return i.i1 == 0 ? 1 : 2; }
  std::int64_t weight_denominator() const { return 4LL * freq_.m1() * freq_.m2(); }
  double weight(NodeIndex i) const {
    return static_cast<double>(weight_numerator(i)) / static_cast<double>(weight_denominator());
  }

 private:
  std::vector<NodeIndex> filter(bool even) const {
    std::vector<NodeIndex> out;
    for (const auto& i : indices_)
      if (is_even(i) == even) out.push_back(i);
    return out;
  }

  FrequencyPair freq_;
  std::vector<NodeIndex> indices_;
};

inline NodalIndexSet build_index_set(const FrequencyPair& freq) { return NodalIndexSet(freq); }

/// Radius cos(i1 pi / (2 m1)), written as a sine so that the center row
/// gives exactly 0.
inline double node_radius(const FrequencyPair& freq, int i1) {
  return std::sin(static_cast<double>(freq.m1() - i1) * std::numbers::pi / (2.0 * freq.m1()));
}

inline double node_angle(const FrequencyPair& freq, int i2) {
  return static_cast<double>(i2) * std::numbers::pi / (2.0 * freq.m2());
}

inline DiskPoint node_coords(const FrequencyPair& freq, NodeIndex i) {
  if (!in_index_set(freq, i))
    throw std::out_of_range("node index (" + std::to_string(i.i1) + "," + std::to_string(i.i2) +
                            ") is not in I^(m)");
  const double r = node_radius(freq, i.i1);
  const double theta = node_angle(freq, i.i2);
  return {r, theta, r * std::cos(theta), r * std::sin(theta)};
}

/// The index i in I^(m) reached by the l-th sample of the curve with
/// rotation rho / m2, i.e. the unique i with
///
///   i1 = u (v l + (1 - v) m1)      mod 4 m1
///   i2 = l - 2 rho - (1 - v) m2    mod 4 m2
///
/// for some u, v in {-1, 1}.
inline NodeIndex index_from_sample(const FrequencyPair& freq, std::int64_t l, int rho) {
  if (l < 0 || l >= freq.sample_count()) throw std::out_of_range("sample index out of range");
  if (rho < 0 || rho >= 2 * freq.gcd()) throw std::out_of_range("rotation index out of range");
  const std::int64_t m1 = freq.m1();
  const std::int64_t m2 = freq.m2();

  bool found = false;
  NodeIndex result;
  for (int v : {1, -1}) {
    const std::int64_t i2 = detail::centered_mod(l - 2 * rho - (1 - v) * m2, 4 * m2);
    for (int u : {1, -1}) {
      const std::int64_t i1 = detail::centered_mod(u * (v * l + (1 - v) * m1), 4 * m1);
      const NodeIndex cand{static_cast<int>(i1), static_cast<int>(i2)};
      if (!in_index_set(freq, cand)) continue;
      if (found && cand != result)
        throw std::logic_error("congruences for sample index admit two distinct node indices");
      result = cand;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no node index solves the sample congruences");
  return result;
}

/// Distinct rhodonea nodes. The center is kept once, at the end of the list
/// (the canonical ordering puts the center row last); its index multiplicity
/// is m2.
struct NodeSet {
  std::vector<DiskPoint> points;
  int center_multiplicity = 0;
};

inline NodeSet node_set(const FrequencyPair& freq) {
  NodeSet out;
  const NodalIndexSet set(freq);
  out.points.reserve(2 * static_cast<std::size_t>(freq.m1()) * freq.m2() + 1);
  for (const auto& i : set) {
    if (set.is_center(i)) {
      ++out.center_multiplicity;
      if (out.center_multiplicity > 1) continue;
    }
    out.points.push_back(node_coords(freq, i));
  }
  return out;
}

}  // namespace rhodonea
