#pragma once

// Algebraic description of the union of rhodonea curves:
//
//   R^(m) = { x in D : |x|^(2 m2) T_m1(|x|)^2 = H_m2(x)^2 }
//
// with the harmonic homogeneous polynomial H_m2(cos t, sin t) = cos(m2 t).

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rhodonea/curve.hpp"
#include "rhodonea/nodes.hpp"

namespace rhodonea {

/// T_n(r) = cos(n arccos r) for r in [-1, 1].
inline double chebyshev_t(int n, double r) {
  return std::cos(n * std::acos(std::clamp(r, -1.0, 1.0)));
}

/// sum_k C(m2, 2k) (-1)^k x1^(m2 - 2k) x2^(2k).
inline double h_poly(int m2, Point2 x) {
  if (m2 < 1) throw std::invalid_argument("h_poly degree must be positive");
  double sum = 0.0;
  double binom = 1.0;  // C(m2, j), advanced one j at a time
  for (int j = 0; j <= m2; ++j) {
    if (j % 2 == 0) {
      const double sign = (j / 2) % 2 == 0 ? 1.0 : -1.0;
      sum += sign * binom * std::pow(x.x, m2 - j) * std::pow(x.y, j);
    }
    binom = binom * (m2 - j) / (j + 1);
  }
  return sum;
}

struct VarietySpec {
  FrequencyPair freq;
};

/// Round-off scale for residual comparisons: order of the variety times
/// machine epsilon times 1e3.
inline double variety_tolerance(const FrequencyPair& freq) {
  return (2.0 * freq.m1() + 2.0 * freq.m2()) * std::numeric_limits<double>::epsilon() * 1e3;
}

/// |x|^(2 m2) T_m1(|x|)^2 - H_m2(x)^2. Zero exactly on R^(m).
inline double variety_residual(const VarietySpec& spec, Point2 x) {
  const double rr = x.x * x.x + x.y * x.y;
  if (std::sqrt(rr) > 1.0 + 1e-12) throw std::domain_error("point lies outside the unit disk");
  const double t = chebyshev_t(spec.freq.m1(), std::sqrt(rr));
  const double h = h_poly(spec.freq.m2(), x);
  return std::pow(rr, spec.freq.m2()) * t * t - h * h;
}

/// Polar form r^(2 m2) (T_m1(r)^2 - cos^2(m2 theta)).
inline double variety_residual_polar(const VarietySpec& spec, double r, double theta) {
  if (r < 0.0 || r > 1.0 + 1e-12) throw std::domain_error("radius outside [0, 1]");
  const double t = chebyshev_t(spec.freq.m1(), r);
  const double c = std::cos(spec.freq.m2() * theta);
  return std::pow(r, 2 * spec.freq.m2()) * (t * t - c * c);
}

enum class Extremality { max_case, zero_case };

/// Rhodonea nodes are the points of the variety where T_m1(r)^2 and
/// cos^2(m2 theta) are both 1 (I_0) or both 0 (I_1).
inline Extremality node_extremality_check(const VarietySpec& spec, NodeIndex i,
                                          double tol = 1e-12) {
  const DiskPoint p = node_coords(spec.freq, i);
  const double t = chebyshev_t(spec.freq.m1(), p.r);
  const double c = std::cos(spec.freq.m2() * p.theta);
  const double t2 = t * t;
  const double c2 = c * c;
  if (std::abs(t2 - 1.0) <= tol && std::abs(c2 - 1.0) <= tol) return Extremality::max_case;
  if (t2 <= tol && c2 <= tol) return Extremality::zero_case;
  throw std::logic_error("node is neither a maximum nor a zero of the variety factors");
}

}  // namespace rhodonea
