// Minimal usage example: build the generator for one parameter triple,
// propagate the excited state through a few lifetimes and compare the
// excited-state population against the closed form.

#include <cstdio>

#include "udw/dynamics.hpp"
#include "udw/spectral.hpp"

int main() {
  using namespace udw;

  const PhysParams params(1.0, 1.0, 1.0);
  const auto bath = spectral::response(params);
  const auto gen = dynamics::build_generator(params, bath);

  std::printf("G(Omega)=%.6f  G(-Omega)=%.6g  P_rod=%.6f  K-=%.6f\n", bath.g_pos, bath.g_neg,
              bath.g_plus, bath.k_minus);

  const double lifetime = 4.0 / (params.mu * params.mu * bath.g_plus);
  const double h = dynamics::default_step(params, bath);
  auto rho = dynamics::DensityMatrix::excited();
  double t = 0.0;
  std::printf("%10s %14s %14s\n", "tau", "population", "closed form");
  for (int k = 0; k <= 5; ++k) {
    const double target = k * lifetime;
    rho = dynamics::propagate(gen, rho, target - t, h);
    t = target;
    std::printf("%10.3f %14.9f %14.9f\n", t, rho.rho_pp.real(),
                dynamics::expect_number(params, bath, t));
  }
  return 0;
}
