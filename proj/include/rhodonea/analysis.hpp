#pragma once

// Experiment harness: built-in test function, polar evaluation grids,
// sup-norm errors, Lebesgue constant estimates and convergence studies.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/trapezoidal.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhodonea/curve.hpp"
#include "rhodonea/fft.hpp"
#include "rhodonea/interpolation.hpp"
#include "rhodonea/nodes.hpp"
#include "rhodonea/quadrature.hpp"
#include "rhodonea/spectral.hpp"
#include "rhodonea/transform.hpp"

namespace rhodonea {

/// exp(-2((1.6 x1 - 0.1)^2 + (2.4 x2 - 0.2)^2)) cos((4 x1 - 0.25)^2 + (6 x2 - 0.5)^2)
inline double test_function(Point2 x) {
  const double a = 1.6 * x.x - 0.1;
  const double b = 2.4 * x.y - 0.2;
  const double c = 4.0 * x.x - 0.25;
  const double d = 6.0 * x.y - 0.5;
  return std::exp(-2.0 * (a * a + b * b)) * std::cos(c * c + d * d);
}

/// Cartesian function composed with x = (r cos theta, r sin theta).
template <class F>
auto in_polar(F func) {
  return [func](double r, double theta) { return func(Point2{r * std::cos(theta), r * std::sin(theta)}); };
}

/// Tensor polar grid: r_a = sin(a pi / (2 (N_r - 1))) clusters toward the
/// boundary, theta_b = -pi + 2 pi (b + 1) / N_theta covers (-pi, pi].
struct PolarGrid {
  int n_r = 1000;
  int n_theta = 1000;

  void validate() const {
    if (n_r < 2 || n_theta < 2) throw std::invalid_argument("grid sizes must be at least 2");
  }
  std::vector<double> radii() const {
    validate();
    std::vector<double> r(n_r);
    for (int a = 0; a < n_r; ++a) r[a] = std::sin(a * std::numbers::pi / (2.0 * (n_r - 1)));
    r.back() = 1.0;
    return r;
  }
  std::vector<double> angles() const {
    validate();
    std::vector<double> t(n_theta);
    for (int b = 0; b < n_theta; ++b) t[b] = -std::numbers::pi + 2.0 * std::numbers::pi * (b + 1) / n_theta;
    return t;
  }
};

/// (1 / pi) int_D func dx by adaptive Gauss-Kronrod in r nested inside the
/// trapezoidal rule in theta (spectrally accurate for periodic integrands).
inline double reference_integral(const std::function<double(Point2)>& func, double tol = 1e-14) {
  using boost::math::quadrature::gauss_kronrod;
  auto radial = [&](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    auto g = [&](double r) { return func(Point2{r * c, r * s}) * r; };
    return gauss_kronrod<double, 61>::integrate(g, 0.0, 1.0, 6, tol);
  };
  const double total =
      boost::math::quadrature::trapezoidal(radial, -std::numbers::pi, std::numbers::pi, tol, 14);
  return total / std::numbers::pi;
}

/// max |P - func| over the grid.
template <class T, class F>
double sup_error(const Interpolant<T>& p, F&& func, const PolarGrid& grid) {
  const auto radii = grid.radii();
  const auto angles = grid.angles();
  const auto vals = p.evaluate_grid(radii, angles);
  std::vector<double> ct(angles.size()), st(angles.size());
  for (std::size_t b = 0; b < angles.size(); ++b) {
    ct[b] = std::cos(angles[b]);
    st[b] = std::sin(angles[b]);
  }
  double err = 0.0;
  for (std::size_t a = 0; a < radii.size(); ++a)
    for (std::size_t b = 0; b < angles.size(); ++b) {
      const double f = func(Point2{radii[a] * ct[b], radii[a] * st[b]});
      err = std::max(err, std::abs(vals[a * angles.size() + b] - f));
    }
  return err;
}

/// Lower bound for the Lebesgue constant: the grid maximum of
/// sum_{i1 < m1} |L_i| + |sum_center L_i|, the center indices counted once
/// as a single node. Lagrange functions of the complex basis.
///
/// Per radius, B[i1][g2] = sum_g1 cos(g1 i1 pi / (2 m1)) T_g1(r) / ||chi_g||^2
/// collapses the radial sum; per angle, one batched length-4 m2 DFT over the
/// m1 + 1 rows of B[i1][g2] exp(1i g2 theta) yields every L_i / w_i.
inline double lebesgue_estimate(const SpectralIndexSet& gamma, const PolarGrid& grid) {
  const FrequencyPair& freq = gamma.freq();
  const int m1 = freq.m1();
  const int m2 = freq.m2();
  const int rows = m1 + 1;
  const int slots = 4 * m2;
  const auto radii = grid.radii();
  const auto angles = grid.angles();
  const NodalIndexSet set(freq);

  std::vector<double> rad_cos(static_cast<std::size_t>(rows) * (2 * m1 + 1));
  for (int i1 = 0; i1 < rows; ++i1)
    for (int g1 = 0; g1 <= 2 * m1; ++g1)
      rad_cos[i1 * (2 * m1 + 1) + g1] = detail::cos_pi_frac(static_cast<std::int64_t>(g1) * i1, 2LL * m1);

  std::vector<complex> b_tab(static_cast<std::size_t>(rows) * slots);
  std::vector<complex> buf(b_tab.size());
  fft::BatchedDft plan(buf, rows, slots, fft::Direction::forward);
  std::vector<double> cheb(2 * m1 + 1);
  std::vector<complex> phase(slots);
  std::vector<int> slot_g2(slots);
  for (int s = 0; s < slots; ++s) slot_g2[s] = s <= 2 * m2 ? s : s - slots;

  double best = 0.0;
  for (double r : radii) {
    const double acr = std::acos(r);
    for (int k = 0; k <= 2 * m1; ++k) cheb[k] = std::cos(k * acr);
    std::fill(b_tab.begin(), b_tab.end(), complex{});
    for (std::size_t p = 0; p < gamma.size(); ++p) {
      const auto [g1, g2] = gamma[p];
      const int s = ((g2 % slots) + slots) % slots;
      const double base = cheb[g1] * gamma.norm_denominator(p);
      for (int i1 = 0; i1 < rows; ++i1) b_tab[i1 * slots + s] += rad_cos[i1 * (2 * m1 + 1) + g1] * base;
    }
    for (double theta : angles) {
      for (int s = 0; s < slots; ++s) phase[s] = std::polar(1.0, slot_g2[s] * theta);
      for (int i1 = 0; i1 < rows; ++i1)
        for (int s = 0; s < slots; ++s) buf[i1 * slots + s] = b_tab[i1 * slots + s] * phase[s];
      plan.execute();
      double sum = 0.0;
      complex center{};
      for (const auto& i : set) {
        const int col = ((i.i2 % slots) + slots) % slots;
        const complex l = set.weight(i) * buf[i.i1 * slots + col];
        if (i.i1 == m1)
          center += l;
        else
          sum += std::abs(l);
      }
      best = std::max(best, sum + std::abs(center));
    }
  }
  return best;
}

struct StudyRow {
  FrequencyPair freq;
  double sup_error = 0.0;
  double q = 0.0;
  double rel_quad_error = 0.0;
  std::optional<double> lebesgue;
};

struct ExperimentReport {
  SpectralKind kind = SpectralKind::rectangular;
  PolarGrid grid;
  double reference = 0.0;
  std::vector<StudyRow> rows;
};

struct StudyOptions {
  PolarGrid grid{1000, 1000};
  std::optional<PolarGrid> lebesgue_grid;  // skipped when empty
  std::optional<double> reference;         // computed when empty
};

/// Real-basis interpolation of func at each m: sup error on the grid,
/// quadrature value and its relative error against the reference integral.
inline ExperimentReport convergence_study(const std::function<double(Point2)>& func,
                                          const std::vector<FrequencyPair>& m_list, SpectralKind kind,
                                          const StudyOptions& opts = {}) {
  if (m_list.empty()) throw std::invalid_argument("convergence study needs at least one frequency pair");
  ExperimentReport rep;
  rep.kind = kind;
  rep.grid = opts.grid;
  rep.reference = opts.reference ? *opts.reference : reference_integral(func);
  for (const auto& freq : m_list) {
    const auto gamma = make_spectral_set(freq, kind);
    const RealGrid f = sample_function(in_polar(func), freq);
    const auto p = interpolate_real(f, gamma);
    StudyRow row{freq, 0.0, 0.0, 0.0, std::nullopt};
    row.sup_error = sup_error(p, func, opts.grid);
    row.q = clenshaw_curtis(f).value;
    row.rel_quad_error = std::abs(row.q - rep.reference) / std::abs(rep.reference);
    if (opts.lebesgue_grid) row.lebesgue = lebesgue_estimate(gamma, *opts.lebesgue_grid);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace rhodonea
