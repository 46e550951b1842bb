#pragma once

// Spectral index sets Gamma^(m) subset of
//
//   K^(m) = { (g1, g2) : 0 <= g1 <= 2 m1, -2 m2 < g2 <= 2 m2 }
//
// for which { chi_g : g in Gamma } is an orthogonal basis of the discrete
// functions on I^(m) under the weighted inner product. All sets are built
// from the rectangular set by replacing a subset Omega with its image under
// the glide reflection g* = (2 m1 - g1, g2 + 2 m2 mod 4 m2).

#include <algorithm>
#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rhodonea/data_grid.hpp"
#include "rhodonea/nodes.hpp"

namespace rhodonea {

struct SpectralIndex {
  int g1 = 0;
  int g2 = 0;
  friend auto operator<=>(const SpectralIndex&, const SpectralIndex&) = default;
};

enum class SpectralKind { rectangular, triangular, omega };

inline std::string_view to_string(SpectralKind kind) {
  switch (kind) {
    case SpectralKind::rectangular: return "rect";
    case SpectralKind::triangular: return "triangle";
    case SpectralKind::omega: return "omega";
  }
  return "unknown";
}

/// Trigonometric factor of a basis function in theta.
enum class Angular { exp, cos, sin };

namespace detail {

/// cos(k pi / n) with exact symmetry: values at k and at its reflections
/// k -> -k, k -> n - k differ at most in sign, and cos(pi / 2) is 0.
inline double cos_pi_frac(std::int64_t k, std::int64_t n) {
  k %= 2 * n;
  if (k < 0) k += 2 * n;
  if (k > n) k = 2 * n - k;
  double sign = 1.0;
  if (2 * k > n) {
    k = n - k;
    sign = -1.0;
  }
  return sign * std::sin(static_cast<double>(n - 2 * k) * std::numbers::pi / (2.0 * n));
}

inline double sin_pi_frac(std::int64_t k, std::int64_t n) { return cos_pi_frac(2 * k - n, 2 * n); }

}  // namespace detail

inline bool in_k_set(const FrequencyPair& freq, SpectralIndex g) {
  return g.g1 >= 0 && g.g1 <= 2 * freq.m1() && g.g2 > -2 * freq.m2() && g.g2 <= 2 * freq.m2();
}

inline bool even_parity(SpectralIndex g) { return ((g.g1 + g.g2) % 2 + 2) % 2 == 0; }

/// Glide reflection (2 m1 - g1, g2 + 2 m2 mod 4 m2) on K^(m). An involution.
inline SpectralIndex flip(const FrequencyPair& freq, SpectralIndex g) {
  if (!in_k_set(freq, g)) throw std::out_of_range("spectral index outside K^(m)");
  return {2 * freq.m1() - g.g1,
          static_cast<int>(detail::centered_mod(g.g2 + 2 * freq.m2(), 4 * freq.m2()))};
}

/// chi_g(i) = cos(g1 i1 pi / (2 m1)) exp(1i g2 i2 pi / (2 m2)).
inline complex chi(const FrequencyPair& freq, SpectralIndex g, NodeIndex i) {
  const double radial = detail::cos_pi_frac(static_cast<std::int64_t>(g.g1) * i.i1, 2LL * freq.m1());
  const std::int64_t k = static_cast<std::int64_t>(g.g2) * i.i2;
  return {radial * detail::cos_pi_frac(k, 2LL * freq.m2()),
          radial * detail::sin_pi_frac(k, 2LL * freq.m2())};
}

/// The rectangular set: -m2 < g2 <= m2, g1 + g2 even.
inline bool in_rectangular(const FrequencyPair& freq, SpectralIndex g) {
  return in_k_set(freq, g) && g.g2 > -freq.m2() && g.g2 <= freq.m2() && even_parity(g);
}

class SpectralIndexSet {
 public:
  /// Gamma_Omega = (Gamma_rect \ Omega) u { g in K : g* in Omega }.
  static SpectralIndexSet from_omega(const FrequencyPair& freq, std::span<const SpectralIndex> omega,
                                     SpectralKind kind = SpectralKind::omega) {
    std::vector<SpectralIndex> om(omega.begin(), omega.end());
    std::sort(om.begin(), om.end());
    om.erase(std::unique(om.begin(), om.end()), om.end());
    for (const auto& g : om)
      if (!in_rectangular(freq, g))
        throw std::invalid_argument("omega must be a subset of the rectangular spectral set");

    std::vector<SpectralIndex> idx;
    for (int g1 = 0; g1 <= 2 * freq.m1(); ++g1)
      for (int g2 = -freq.m2() + 1; g2 <= freq.m2(); ++g2) {
        const SpectralIndex g{g1, g2};
        if (!even_parity(g)) continue;
        if (std::binary_search(om.begin(), om.end(), g))
          idx.push_back(flip(freq, g));
        else
          idx.push_back(g);
      }
    return SpectralIndexSet(freq, kind, std::move(idx), std::move(om));
  }

  static SpectralIndexSet rectangular(const FrequencyPair& freq) {
    return from_omega(freq, {}, SpectralKind::rectangular);
  }

  /// { g in K : g1/(2 m1) + |g2|/(2 m2) < 1, g1 + g2 even }
  ///   u { g in Gamma_rect : g1/(2 m1) + |g2|/(2 m2) = 1 }.
  static SpectralIndexSet triangular(const FrequencyPair& freq) {
    const std::int64_t m1 = freq.m1();
    const std::int64_t m2 = freq.m2();
    std::vector<SpectralIndex> idx;
    for (int g1 = 0; g1 <= 2 * m1; ++g1)
      for (int g2 = static_cast<int>(-2 * m2 + 1); g2 <= 2 * m2; ++g2) {
        const SpectralIndex g{g1, g2};
        if (!even_parity(g)) continue;
        const std::int64_t lhs = g1 * m2 + std::abs(g2) * m1;
        if (lhs < 2 * m1 * m2 || (lhs == 2 * m1 * m2 && in_rectangular(freq, g))) idx.push_back(g);
      }
    return SpectralIndexSet(freq, SpectralKind::triangular, std::move(idx), triangle_omega(freq));
  }

  /// The Omega that turns the rectangular set into the triangular one.
  static std::vector<SpectralIndex> triangle_omega(const FrequencyPair& freq) {
    const std::int64_t m1 = freq.m1();
    const std::int64_t m2 = freq.m2();
    std::vector<SpectralIndex> om;
    for (int g1 = 0; g1 <= 2 * m1; ++g1)
      for (int g2 = static_cast<int>(-m2 + 1); g2 <= m2; ++g2) {
        const SpectralIndex g{g1, g2};
        if (even_parity(g) && g1 * m2 + std::abs(g2) * m1 > 2 * m1 * m2) om.push_back(g);
      }
    return om;
  }

  const FrequencyPair& freq() const { return freq_; }
  SpectralKind kind() const { return kind_; }
  std::size_t size() const { return indices_.size(); }
  std::span<const SpectralIndex> indices() const { return indices_; }
  const SpectralIndex& operator[](std::size_t pos) const { return indices_[pos]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  std::span<const SpectralIndex> omega() const { return omega_; }

  std::optional<std::size_t> position(SpectralIndex g) const {
    if (!in_k_set(freq_, g)) return std::nullopt;
    const int p = table_[table_slot(g)];
    if (p < 0) return std::nullopt;
    return static_cast<std::size_t>(p);
  }
  bool contains(SpectralIndex g) const { return position(g).has_value(); }

  /// ||chi_g||^2 = 1 / norm_denominator: 1 on the lines g1 in {0, 2 m1}, 2 elsewhere.
  int norm_denominator(std::size_t pos) const {
    const int g1 = indices_[pos].g1;
    return (g1 == 0 || g1 == 2 * freq_.m1()) ? 1 : 2;
  }

  /// Upsilon = { g in Gamma : (g1, -g2) not in Gamma }, with -g2 taken mod 4 m2.
  bool in_upsilon(std::size_t pos) const { return upsilon_[pos]; }
  std::vector<SpectralIndex> upsilon() const {
    std::vector<SpectralIndex> out;
    for (std::size_t p = 0; p < size(); ++p)
      if (upsilon_[p]) out.push_back(indices_[p]);
    return out;
  }

  /// Which trigonometric factor the real basis function at pos carries.
  ///
  /// Outside Upsilon the pair (g1, +-g2) splits into cos and sin. Inside
  /// Upsilon the partner of g is (2 m1 - g1, 2 m2 - g2); the one with
  /// g1 < m1 takes cos. When g1 == m1 both partners share g1 and the one with
  /// |g2| <= m2 takes cos.
  Angular real_angular(std::size_t pos) const {
    const SpectralIndex g = indices_[pos];
    if (!upsilon_[pos]) return g.g2 >= 0 ? Angular::cos : Angular::sin;
    if (g.g1 != freq_.m1()) return g.g1 < freq_.m1() ? Angular::cos : Angular::sin;
    return std::abs(g.g2) <= freq_.m2() ? Angular::cos : Angular::sin;
  }

  /// ||chi_R,g||^2 = 1 / real_norm_denominator. Equal to the complex norm
  /// when chi_g is real on I^(m) (g2 in {0, 2 m2} or g = (m1, +-m2)), half of
  /// it otherwise.
  int real_norm_denominator(std::size_t pos) const {
    const SpectralIndex g = indices_[pos];
    const bool real_valued = g.g2 == 0 || g.g2 == 2 * freq_.m2() ||
                             (g.g1 == freq_.m1() && std::abs(g.g2) == freq_.m2());
    return norm_denominator(pos) * (real_valued ? 1 : 2);
  }

 private:
  SpectralIndexSet(FrequencyPair freq, SpectralKind kind, std::vector<SpectralIndex> idx,
                   std::vector<SpectralIndex> omega)
      : freq_(freq), kind_(kind), indices_(std::move(idx)), omega_(std::move(omega)) {
    std::sort(indices_.begin(), indices_.end());
    const auto expected = static_cast<std::size_t>(2 * freq.m1() + 1) * freq.m2();
    if (indices_.size() != expected)
      throw std::logic_error("spectral index set has wrong cardinality");
    table_.assign(static_cast<std::size_t>(2 * freq.m1() + 1) * 4 * freq.m2(), -1);
    for (std::size_t p = 0; p < indices_.size(); ++p) {
      const auto& g = indices_[p];
      if (!in_k_set(freq, g) || !even_parity(g))
        throw std::logic_error("spectral index violates the parity or range condition");
      int& slot = table_[table_slot(g)];
      if (slot >= 0) throw std::logic_error("duplicate spectral index");
      slot = static_cast<int>(p);
    }
    upsilon_.resize(indices_.size());
    for (std::size_t p = 0; p < indices_.size(); ++p) {
      const auto& g = indices_[p];
      const SpectralIndex mirrored{
          g.g1, static_cast<int>(detail::centered_mod(-g.g2, 4 * freq.m2()))};
      upsilon_[p] = !contains(mirrored);
    }
  }

  std::size_t table_slot(SpectralIndex g) const {
    return static_cast<std::size_t>(g.g1) * 4 * freq_.m2() +
           static_cast<std::size_t>(g.g2 + 2 * freq_.m2() - 1);
  }

  FrequencyPair freq_;
  SpectralKind kind_;
  std::vector<SpectralIndex> indices_;
  std::vector<SpectralIndex> omega_;
  std::vector<int> table_;
  std::vector<bool> upsilon_;
};

inline SpectralIndexSet gamma_rect(const FrequencyPair& freq) {
  return SpectralIndexSet::rectangular(freq);
}
inline SpectralIndexSet gamma_triangle(const FrequencyPair& freq) {
  return SpectralIndexSet::triangular(freq);
}
inline SpectralIndexSet gamma_omega(const FrequencyPair& freq, std::span<const SpectralIndex> omega) {
  return SpectralIndexSet::from_omega(freq, omega);
}

inline SpectralIndexSet make_spectral_set(const FrequencyPair& freq, SpectralKind kind) {
  switch (kind) {
    case SpectralKind::rectangular: return gamma_rect(freq);
    case SpectralKind::triangular: return gamma_triangle(freq);
    case SpectralKind::omega: break;
  }
  throw std::invalid_argument("omega spectral sets need an explicit Omega");
}

/// Real basis function chi_R,g evaluated at i.
inline double chi_real(const SpectralIndexSet& set, SpectralIndex g, NodeIndex i) {
  const auto pos = set.position(g);
  if (!pos) throw std::invalid_argument("spectral index is not in the set");
  const FrequencyPair& freq = set.freq();
  const double radial = detail::cos_pi_frac(static_cast<std::int64_t>(g.g1) * i.i1, 2LL * freq.m1());
  const std::int64_t k = static_cast<std::int64_t>(g.g2) * i.i2;
  return set.real_angular(*pos) == Angular::cos
             ? radial * detail::cos_pi_frac(k, 2LL * freq.m2())
             : radial * detail::sin_pi_frac(k, 2LL * freq.m2());
}

/// <f, h>_w = sum_i w_i f(i) conj(h(i)).
template <class T, class U>
auto inner_product(const DataGrid<T>& f, const DataGrid<U>& h) {
  require_same_freq(f.freq(), h.freq());
  const NodalIndexSet set(f.freq());
  using R = decltype(T{} * U{});
  R acc{};
  for (std::size_t p = 0; p < set.size(); ++p) {
    const double w = set.weight(set[p]);
    if constexpr (std::is_same_v<U, complex>)
      acc += w * f[p] * std::conj(h[p]);
    else
      acc += w * f[p] * h[p];
  }
  return acc;
}

/// chi_g sampled on I^(m).
inline ComplexGrid chi_grid(const FrequencyPair& freq, SpectralIndex g) {
  ComplexGrid out(freq);
  const NodalIndexSet set(freq);
  for (std::size_t p = 0; p < set.size(); ++p) out[p] = chi(freq, g, set[p]);
  return out;
}

inline RealGrid chi_real_grid(const SpectralIndexSet& gamma, SpectralIndex g) {
  RealGrid out(gamma.freq());
  const NodalIndexSet set(gamma.freq());
  for (std::size_t p = 0; p < set.size(); ++p) out[p] = chi_real(gamma, g, set[p]);
  return out;
}

}  // namespace rhodonea
