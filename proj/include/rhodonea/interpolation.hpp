#pragma once

// Evaluation of the spectral interpolant
//
//   P(r, theta) = sum_g c_g T_g1(r) A_g(g2 theta),
//
// with A_g = exp(1i .) in the complex basis and cos or sin in the real one.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "rhodonea/data_grid.hpp"
#include "rhodonea/nodes.hpp"
#include "rhodonea/spectral.hpp"
#include "rhodonea/transform.hpp"
#include "rhodonea/variety.hpp"

namespace rhodonea {

/// Maps theta into (-pi, pi].
inline double normalize_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::remainder(theta, two_pi);
  if (t <= -std::numbers::pi) t += two_pi;
  return t;
}

/// f(i) = func(r_i1, theta_i2) on I^(m).
template <class F>
auto sample_function(F&& func, const FrequencyPair& freq) {
  using R = std::decay_t<std::invoke_result_t<F&, double, double>>;
  DataGrid<R> out(freq);
  const NodalIndexSet set(freq);
  for (std::size_t p = 0; p < set.size(); ++p) {
    const auto [i1, i2] = set[p];
    out[p] = func(node_radius(freq, i1), node_angle(freq, i2));
  }
  return out;
}

template <class T>
class Interpolant {
 public:
  using value_type = T;

  explicit Interpolant(CoefficientSet<T> coeffs) : c_(std::move(coeffs)) {
    for (std::size_t p = 0; p < c_.size(); ++p) {
      const auto [g1, g2] = c_.indices[p];
      if (g1 < 0 || g1 > 2 * c_.freq.m1() || g2 <= -2 * c_.freq.m2() || g2 > 2 * c_.freq.m2())
        throw std::invalid_argument("coefficient index outside K^(m)");
      if constexpr (std::is_same_v<T, double>) {
        if (c_.angular[p] == Angular::exp)
          throw std::invalid_argument("real interpolant needs cos/sin basis tags");
      }
    }
  }

  const CoefficientSet<T>& coeffs() const { return c_; }
  const FrequencyPair& freq() const { return c_.freq; }
  static constexpr Basis basis_kind() { return CoefficientSet<T>::basis; }

  T evaluate(double r, double theta) const {
    if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("radius outside [0, 1]");
    theta = normalize_angle(theta);
    const int m1 = c_.freq.m1();
    std::vector<double> cheb(2 * m1 + 1);
    const double acr = std::acos(r);
    for (int k = 0; k <= 2 * m1; ++k) cheb[k] = std::cos(k * acr);
    T sum{};
    for (std::size_t p = 0; p < c_.size(); ++p) {
      const auto [g1, g2] = c_.indices[p];
      const double arg = g2 * theta;
      if constexpr (std::is_same_v<T, complex>) {
        sum += c_.values[p] * cheb[g1] * complex(std::cos(arg), std::sin(arg));
      } else {
        sum += c_.values[p] * cheb[g1] * (c_.angular[p] == Angular::cos ? std::cos(arg) : std::sin(arg));
      }
    }
    return sum;
  }

  /// Values on the tensor grid radii x angles, row-major with r outermost.
  /// Radial pass per r collapses g1, then one angular pass per (r, theta)
  /// runs over the at most 4 m2 distinct g2.
  std::vector<T> evaluate_grid(std::span<const double> radii, std::span<const double> angles) const {
    const int m1 = c_.freq.m1();
    const int m2 = c_.freq.m2();
    const int slots = 4 * m2;
    const std::size_t nt = angles.size();
    std::vector<double> ctab(nt * slots), stab(nt * slots);
    for (std::size_t b = 0; b < nt; ++b) {
      const double th = normalize_angle(angles[b]);
      for (int s = 0; s < slots; ++s) {
        const double arg = (s - 2 * m2 + 1) * th;
        ctab[b * slots + s] = std::cos(arg);
        stab[b * slots + s] = std::sin(arg);
      }
    }
    std::vector<T> out(radii.size() * nt);
    std::vector<double> cheb(2 * m1 + 1);
    // Complex: A holds exp-coefficients. Real: A cos, B sin.
    std::vector<T> a(slots), bsin(slots);
    std::vector<int> used;
    for (std::size_t ai = 0; ai < radii.size(); ++ai) {
      const double r = radii[ai];
      if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("radius outside [0, 1]");
      const double acr = std::acos(r);
      for (int k = 0; k <= 2 * m1; ++k) cheb[k] = std::cos(k * acr);
      std::fill(a.begin(), a.end(), T{});
      std::fill(bsin.begin(), bsin.end(), T{});
      for (std::size_t p = 0; p < c_.size(); ++p) {
        const auto [g1, g2] = c_.indices[p];
        const int s = g2 + 2 * m2 - 1;
        const T v = c_.values[p] * cheb[g1];
        if (c_.angular[p] == Angular::sin)
          bsin[s] += v;
        else
          a[s] += v;
      }
      used.clear();
      for (int s = 0; s < slots; ++s)
        if (a[s] != T{} || bsin[s] != T{}) used.push_back(s);
      for (std::size_t b = 0; b < nt; ++b) {
        const double* cr = &ctab[b * slots];
        const double* sr = &stab[b * slots];
        T sum{};
        for (int s : used) {
          if constexpr (std::is_same_v<T, complex>)
            sum += a[s] * complex(cr[s], sr[s]) + bsin[s] * sr[s];
          else
            sum += a[s] * cr[s] + bsin[s] * sr[s];
        }
        out[ai * nt + b] = sum;
      }
    }
    return out;
  }

 private:
  CoefficientSet<T> c_;
};

template <class T>
Interpolant<complex> interpolate(const DataGrid<T>& f, const SpectralIndexSet& gamma) {
  return Interpolant<complex>(forward_coeffs(f, gamma));
}

inline Interpolant<double> interpolate_real(const RealGrid& f, const SpectralIndexSet& gamma) {
  return Interpolant<double>(forward_coeffs_real(f, gamma));
}

/// Values of the interpolant at every node, in canonical order.
template <class T>
DataGrid<T> evaluate_at_nodes(const Interpolant<T>& p) {
  DataGrid<T> out(p.freq());
  const NodalIndexSet set(p.freq());
  for (std::size_t q = 0; q < set.size(); ++q)
    out[q] = p.evaluate(node_radius(p.freq(), set[q].i1), node_angle(p.freq(), set[q].i2));
  return out;
}

/// L_j(r, theta) = w_j sum_g conj(chi_g(j)) / ||chi_g||^2 X_g(r, theta).
inline complex lagrange(const SpectralIndexSet& gamma, NodeIndex j, double r, double theta) {
  const FrequencyPair& freq = gamma.freq();
  if (!in_index_set(freq, j)) throw std::out_of_range("node index is not in I^(m)");
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("radius outside [0, 1]");
  const NodalIndexSet set(freq);
  complex sum{};
  for (std::size_t p = 0; p < gamma.size(); ++p) {
    const SpectralIndex g = gamma[p];
    const double arg = g.g2 * theta;
    sum += std::conj(chi(freq, g, j)) * static_cast<double>(gamma.norm_denominator(p)) *
           chebyshev_t(g.g1, r) * complex(std::cos(arg), std::sin(arg));
  }
  return set.weight(j) * sum;
}

/// Real-basis counterpart with chi_R and X_R.
inline double lagrange_real(const SpectralIndexSet& gamma, NodeIndex j, double r, double theta) {
  const FrequencyPair& freq = gamma.freq();
  if (!in_index_set(freq, j)) throw std::out_of_range("node index is not in I^(m)");
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("radius outside [0, 1]");
  const NodalIndexSet set(freq);
  double sum = 0.0;
  for (std::size_t p = 0; p < gamma.size(); ++p) {
    const SpectralIndex g = gamma[p];
    const double arg = g.g2 * theta;
    const double ang = gamma.real_angular(p) == Angular::cos ? std::cos(arg) : std::sin(arg);
    sum += chi_real(gamma, g, j) * gamma.real_norm_denominator(p) * chebyshev_t(g.g1, r) * ang;
  }
  return set.weight(j) * sum;
}

/// P(0, theta_k) at n_angles equispaced angles in (-pi, pi].
template <class T>
std::vector<T> center_profile(const Interpolant<T>& p, int n_angles) {
  if (n_angles < 1) throw std::invalid_argument("n_angles must be positive");
  std::vector<double> angles(n_angles);
  for (int k = 0; k < n_angles; ++k)
    angles[k] = -std::numbers::pi + 2.0 * std::numbers::pi * (k + 1) / n_angles;
  const double zero = 0.0;
  return p.evaluate_grid(std::span<const double>(&zero, 1), angles);
}

/// max_k |P(0, theta_k) - P(0, theta_0)|.
template <class T>
double center_deviation(const Interpolant<T>& p, int n_angles) {
  const auto prof = center_profile(p, n_angles);
  double dev = 0.0;
  for (const auto& v : prof) dev = std::max(dev, std::abs(v - prof.front()));
  return dev;
}

}  // namespace rhodonea
