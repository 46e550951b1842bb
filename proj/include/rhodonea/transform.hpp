#pragma once

// Coefficient transforms between data on I^(m) and expansion coefficients on
// a spectral index set, via one DFT on the 4 m1 x 4 m2 group J^(m).
//
// Data f is first extended symmetrically to a function g on J^(m) (value
// f(i) / (8 m1 m2) at i, at its glide reflection i*, and at the mirror
// images (-i1, i2) of both). Its DFT, with the kernel
// exp(-1i g1 i1 pi / (2 m1)) exp(-1i g2 i2 pi / (2 m2)), equals the weighted
// inner product <f, chi_g>_w at every even-parity g in K^(m).

#include <algorithm>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "rhodonea/data_grid.hpp"
#include "rhodonea/fft.hpp"
#include "rhodonea/nodes.hpp"
#include "rhodonea/spectral.hpp"

namespace rhodonea {

/// Dense 4 m1 x 4 m2 array over J^(m); index (i1, i2) is stored at row
/// i1 mod 4 m1, column i2 mod 4 m2.
class ExtendedGrid {
 public:
  explicit ExtendedGrid(FrequencyPair freq)
      : freq_(freq), values_(static_cast<std::size_t>(rows()) * cols(), complex{}) {}

  const FrequencyPair& freq() const { return freq_; }
  int rows() const { return 4 * freq_.m1(); }
  int cols() const { return 4 * freq_.m2(); }

  complex& at(int i1, int i2) { return values_[slot(i1, i2)]; }
  const complex& at(int i1, int i2) const { return values_[slot(i1, i2)]; }

  std::span<complex> values() { return values_; }
  std::span<const complex> values() const { return values_; }

 private:
  std::size_t slot(int i1, int i2) const {
    const int r = ((i1 % rows()) + rows()) % rows();
    const int c = ((i2 % cols()) + cols()) % cols();
    return static_cast<std::size_t>(r) * cols() + static_cast<std::size_t>(c);
  }

  FrequencyPair freq_;
  std::vector<complex> values_;
};

/// Symmetric extension of f to J^(m), scaled by 1 / (8 m1 m2).
template <class T>
ExtendedGrid extend_data(const DataGrid<T>& f) {
  const FrequencyPair& freq = f.freq();
  const int m1 = freq.m1();
  const int m2 = freq.m2();
  const double scale = 1.0 / (8.0 * m1 * m2);
  ExtendedGrid g(freq);
  const NodalIndexSet set(freq);
  for (std::size_t p = 0; p < set.size(); ++p) {
    const auto [j1, j2] = set[p];
    const complex v = complex(f[p]) * scale;
    g.at(j1, j2) = v;
    g.at(-j1, j2) = v;
    g.at(2 * m1 - j1, j2 + 2 * m2) = v;
    g.at(j1 - 2 * m1, j2 + 2 * m2) = v;
  }
  return g;
}

enum class Basis { complex, real };

inline std::string_view to_string(Basis b) { return b == Basis::complex ? "complex" : "real"; }

/// Expansion coefficients of P = sum_g c_g X_g, where X_g carries the
/// angular factor exp(1i g2 t) for complex coefficients and cos(g2 t) or
/// sin(g2 t) for real ones.
template <class T>
struct CoefficientSet {
  FrequencyPair freq;
  std::string kind;
  std::vector<SpectralIndex> indices;  // sorted lexicographically
  std::vector<Angular> angular;
  std::vector<T> values;

  static constexpr Basis basis = std::is_same_v<T, complex> ? Basis::complex : Basis::real;

  std::size_t size() const { return indices.size(); }

  std::optional<T> find(SpectralIndex g) const {
    auto it = std::lower_bound(indices.begin(), indices.end(), g);
    if (it == indices.end() || *it != g) return std::nullopt;
    return values[static_cast<std::size_t>(it - indices.begin())];
  }
};

using ComplexCoefficients = CoefficientSet<complex>;
using RealCoefficients = CoefficientSet<double>;

/// DFT of the symmetric extension: ghat(g) = <f, chi_g>_w for g in K^(m).
template <class T>
ExtendedGrid extension_spectrum(const DataGrid<T>& f) {
  ExtendedGrid g = extend_data(f);
  fft::dft2d(g.values(), g.rows(), g.cols(), fft::Direction::forward);
  return g;
}

/// c_g = <f, chi_g>_w / ||chi_g||_w^2 for all g in the spectral set.
template <class T>
ComplexCoefficients forward_coeffs(const DataGrid<T>& f, const SpectralIndexSet& gamma) {
  require_same_freq(f.freq(), gamma.freq());
  const ExtendedGrid ghat = extension_spectrum(f);
  ComplexCoefficients out{gamma.freq(), std::string(to_string(gamma.kind())), {}, {}, {}};
  out.indices.assign(gamma.begin(), gamma.end());
  out.angular.assign(gamma.size(), Angular::exp);
  out.values.resize(gamma.size());
  for (std::size_t p = 0; p < gamma.size(); ++p)
    out.values[p] = ghat.at(gamma[p].g1, gamma[p].g2) * static_cast<double>(gamma.norm_denominator(p));
  return out;
}

/// c_R,g = <f, chi_R,g>_w / ||chi_R,g||_w^2, read off as Re ghat (cos
/// factor) or -Im ghat (sin factor).
inline RealCoefficients forward_coeffs_real(const RealGrid& f, const SpectralIndexSet& gamma) {
  require_same_freq(f.freq(), gamma.freq());
  const ExtendedGrid ghat = extension_spectrum(f);
  RealCoefficients out{gamma.freq(), std::string(to_string(gamma.kind())), {}, {}, {}};
  out.indices.assign(gamma.begin(), gamma.end());
  out.angular.resize(gamma.size());
  out.values.resize(gamma.size());
  for (std::size_t p = 0; p < gamma.size(); ++p) {
    const complex v = ghat.at(gamma[p].g1, gamma[p].g2);
    const Angular a = gamma.real_angular(p);
    out.angular[p] = a;
    out.values[p] = (a == Angular::cos ? v.real() : -v.imag()) * gamma.real_norm_denominator(p);
  }
  return out;
}

inline RealCoefficients forward_coeffs_real(const ComplexGrid& f, const SpectralIndexSet& gamma) {
  RealGrid re(f.freq());
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (f[p].imag() != 0.0)
      throw std::invalid_argument("real coefficients require real-valued data");
    re[p] = f[p].real();
  }
  return forward_coeffs_real(re, gamma);
}

/// f(i) = sum_g c_g chi_g(i), through the extension
/// h(g) = h(-g1, g2) = c_g / 2 off the lines g1 in {0, 2 m1}, h(g) = c_g on them.
inline ComplexGrid inverse_transform(const ComplexCoefficients& c) {
  const FrequencyPair& freq = c.freq;
  const int m1 = freq.m1();
  ExtendedGrid h(freq);
  for (std::size_t p = 0; p < c.size(); ++p) {
    const auto [g1, g2] = c.indices[p];
    if (!in_k_set(freq, c.indices[p])) throw std::invalid_argument("coefficient index outside K^(m)");
    if (g1 == 0 || g1 == 2 * m1) {
      h.at(g1, g2) += c.values[p];
    } else {
      h.at(g1, g2) += 0.5 * c.values[p];
      h.at(-g1, g2) += 0.5 * c.values[p];
    }
  }
  fft::dft2d(h.values(), h.rows(), h.cols(), fft::Direction::backward);
  ComplexGrid f(freq);
  const NodalIndexSet set(freq);
  for (std::size_t p = 0; p < set.size(); ++p) f[p] = h.at(set[p].i1, set[p].i2);
  return f;
}

/// Real counterpart: cos terms enter as c, sin terms as -1i c, and the real
/// part of the complex inverse is returned.
inline RealGrid inverse_transform_real(const RealCoefficients& c) {
  ComplexCoefficients z{c.freq, c.kind, c.indices, std::vector<Angular>(c.size(), Angular::exp), {}};
  z.values.resize(c.size());
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (c.angular[p] == Angular::exp)
      throw std::invalid_argument("real coefficient set carries a complex basis function");
    z.values[p] = c.angular[p] == Angular::cos ? complex(c.values[p], 0.0) : complex(0.0, -c.values[p]);
  }
  const ComplexGrid fz = inverse_transform(z);
  RealGrid f(c.freq);
  for (std::size_t p = 0; p < f.size(); ++p) f[p] = fz[p].real();
  return f;
}

/// Coefficients on the symmetric rectangle -m2 <= g2 <= m2. The basis
/// function at (g1, m2) is replaced by lambda X_g + (1 - lambda) X_g*, with
/// g* = (2 m1 - g1, -m2), so the coefficient mass of the g2 = m2 row is split
/// between the rows g2 = m2 (weight lambda) and g2 = -m2 (weight 1 - lambda).
/// Both interpolants agree at every node.
template <class T>
ComplexCoefficients averaged_coeffs(const DataGrid<T>& f, double lambda = 0.5) {
  const FrequencyPair& freq = f.freq();
  const int m1 = freq.m1();
  const int m2 = freq.m2();
  const ExtendedGrid ghat = extension_spectrum(f);
  ComplexCoefficients out{freq, "averaged", {}, {}, {}};
  for (int g1 = 0; g1 <= 2 * m1; ++g1)
    for (int g2 = -m2; g2 <= m2; ++g2) {
      const SpectralIndex g{g1, g2};
      if (!even_parity(g)) continue;
      const double den = (g1 == 0 || g1 == 2 * m1) ? 1.0 : 2.0;
      complex c = ghat.at(g1, g2) * den;
      if (g2 == m2) c *= lambda;
      if (g2 == -m2) c *= (1.0 - lambda);
      out.indices.push_back(g);
      out.angular.push_back(Angular::exp);
      out.values.push_back(c);
    }
  return out;
}

}  // namespace rhodonea
