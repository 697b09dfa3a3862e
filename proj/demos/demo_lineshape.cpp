// Usage example for the emission spectrum: locate the shifted line center
// and print the normalized long-time line shape around it.

#include <cstdio>
#include <vector>

#include "udw/spectrum.hpp"

int main() {
  using namespace udw;

  const PhysParams params(1.0, 1.0, 1.0);
  const auto bath = spectral::response(params);
  const auto sp = spectrum::spectrum_params(params, bath);
  std::printf("bare line at 2*Omega = %.6f, shifted resonance at %.6f\n", 2.0 * params.omega,
              sp.resonance);

  std::vector<double> grid;
  for (int i = -10; i <= 10; ++i) grid.push_back(sp.resonance + 0.02 * i);
  const auto shape = spectrum::lorentzian_limit(params, bath, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    std::printf("omega=%.4f  p1=%+.6f  p2=%+.6f\n", grid[i], shape.p1[i], shape.p2[i]);

  const auto finite = spectrum::spectrum_finite_T(params, bath, 50.0, grid);
  std::printf("finite window T=50: peak at %.6f, fwhm %.6f\n", finite.peak_omega, finite.fwhm);
  return 0;
}
