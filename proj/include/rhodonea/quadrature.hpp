#pragma once

// Clenshaw-Curtis rule on the rhodonea nodes: the exact normalized disk
// integral (1 / pi) int int P r dr dtheta of the interpolant. Only the
// radial terms T_4k contribute, each with mean value 1 / (1 - 4 k^2).

#include <cmath>
#include <numbers>
#include <type_traits>
#include <vector>

#include "rhodonea/data_grid.hpp"
#include "rhodonea/nodes.hpp"
#include "rhodonea/spectral.hpp"
#include "rhodonea/transform.hpp"

namespace rhodonea {

template <class T>
struct QuadratureResult {
  T value{};                               // normalized by 1 / pi
  std::vector<SpectralIndex> coeffs_used;  // (4k, 0), k = 0..floor(m1 / 2)

  T raw_integral() const { return value * std::numbers::pi; }
};

/// Normalized disk mean of T_g1(r) exp(1i g2 theta).
inline double disk_mean(SpectralIndex g) {
  if (g.g2 != 0 || g.g1 % 4 != 0) return 0.0;
  const double k = g.g1 / 4;
  return 1.0 / (1.0 - 4.0 * k * k);
}

template <class T>
QuadratureResult<T> clenshaw_curtis(const DataGrid<T>& f) {
  const FrequencyPair& freq = f.freq();
  const int m1 = freq.m1();
  const ExtendedGrid ghat = extension_spectrum(f);
  QuadratureResult<T> out;
  for (int k = 0; 4 * k <= 2 * m1; ++k) {
    const int g1 = 4 * k;
    const double den = (g1 == 0 || g1 == 2 * m1) ? 1.0 : 2.0;
    const complex c = ghat.at(g1, 0) * den / (1.0 - 4.0 * k * k);
    if constexpr (std::is_same_v<T, complex>)
      out.value += c;
    else
      out.value += c.real();
    out.coeffs_used.push_back({g1, 0});
  }
  return out;
}

/// Node weights q with Q(f) = sum_i q_i f(i), canonical order:
/// q_i = w_i sum_k d_k cos(2 k pi i1 / m1) / (1 - 4 k^2), d_k the inverse
/// norm of chi_(4k, 0).
inline std::vector<double> quadrature_weights(const FrequencyPair& freq) {
  const int m1 = freq.m1();
  const NodalIndexSet set(freq);
  std::vector<double> radial(m1 + 1, 0.0);
  for (int i1 = 0; i1 <= m1; ++i1)
    for (int k = 0; 4 * k <= 2 * m1; ++k) {
      const double den = (k == 0 || 4 * k == 2 * m1) ? 1.0 : 2.0;
      radial[i1] += den * detail::cos_pi_frac(4LL * k * i1, 2LL * m1) / (1.0 - 4.0 * k * k);
    }
  std::vector<double> q(set.size());
  for (std::size_t p = 0; p < set.size(); ++p) q[p] = set.weight(set[p]) * radial[set[p].i1];
  return q;
}

}  // namespace rhodonea
