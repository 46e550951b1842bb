#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhodonea/nodes.hpp"

namespace rhodonea {

using complex = std::complex<double>;

/// Discrete function on I^(m), stored in the canonical index order.
template <class T>
class DataGrid {
 public:
  using value_type = T;

  explicit DataGrid(FrequencyPair freq)
      : freq_(freq), values_(static_cast<std::size_t>(2 * freq.m1() + 1) * freq.m2(), T{}) {}

  DataGrid(FrequencyPair freq, std::vector<T> values) : freq_(freq), values_(std::move(values)) {
    const auto expected = static_cast<std::size_t>(2 * freq.m1() + 1) * freq.m2();
    if (values_.size() != expected)
      throw std::invalid_argument("expected " + std::to_string(expected) + " values, got " +
                                  std::to_string(values_.size()));
  }

  const FrequencyPair& freq() const { return freq_; }
  std::size_t size() const { return values_.size(); }
  std::span<const T> values() const { return values_; }
  std::span<T> values() { return values_; }

  T& operator[](std::size_t pos) { return values_[pos]; }
  const T& operator[](std::size_t pos) const { return values_[pos]; }
  T& at(NodeIndex i) { return values_[node_position(freq_, i)]; }
  const T& at(NodeIndex i) const { return values_[node_position(freq_, i)]; }

  /// Membership in L_D: all center indices (i1 == m1) carry the same value.
  bool center_consistent(double tol = 0.0) const {
    const std::size_t first = static_cast<std::size_t>(freq_.m1()) * 2 * freq_.m2();
    for (std::size_t p = first + 1; p < values_.size(); ++p)
      if (std::abs(values_[p] - values_[first]) > tol) return false;
    return true;
  }

  /// Shared center value; meaningful when center_consistent().
  const T& center_value() const {
    return values_[static_cast<std::size_t>(freq_.m1()) * 2 * freq_.m2()];
  }

 private:
  FrequencyPair freq_;
  std::vector<T> values_;
};

using ComplexGrid = DataGrid<complex>;
using RealGrid = DataGrid<double>;

inline void require_same_freq(const FrequencyPair& a, const FrequencyPair& b) {
  if (!(a == b))
    throw std::invalid_argument("frequency mismatch: (" + std::to_string(a.m1()) + "," +
                                std::to_string(a.m2()) + ") vs (" + std::to_string(b.m1()) + "," +
                                std::to_string(b.m2()) + ")");
}

}  // namespace rhodonea
