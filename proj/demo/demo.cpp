// Interpolates the builtin test function on a few node sets and prints the
// sup-norm error and quadrature value for each.

#include <cstdio>
#include <numbers>

#include "rhodonea/rhodonea.hpp"

int main() {
  using namespace rhodonea;
  const double ref = reference_integral(test_function);
  std::printf("%-10s %-9s %-14s %-16s %s\n", "m", "set", "sup error", "integral", "rel. error");
  for (const FrequencyPair m : {FrequencyPair(10, 11), FrequencyPair(20, 21), FrequencyPair(30, 31)}) {
    const RealGrid f = sample_function(in_polar(test_function), m);
    const double q = clenshaw_curtis(f).value;
    for (const SpectralKind kind : {SpectralKind::rectangular, SpectralKind::triangular}) {
      const auto p = interpolate_real(f, make_spectral_set(m, kind));
      const double err = sup_error(p, test_function, PolarGrid{400, 400});
      std::printf("(%d,%d)%*s %-9s %-14.6e %-16.12f %.4e\n", m.m1(), m.m2(), m.m1() < 10 ? 4 : 3, "",
                  std::string(to_string(kind)).c_str(), err, q * std::numbers::pi,
                  std::abs(q - ref) / std::abs(ref));
    }
  }
}
