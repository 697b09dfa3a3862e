#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "udw/errors.hpp"
#include "udw/params.hpp"
#include "udw/quadrature.hpp"

// Bath response along the uniformly accelerated trajectory: the Wightman
// two-point function, its Fourier-transformed response values G(+/-Omega),
// G(0), the combinations G+ and G-, the branching ratios P1/P2, and the
// exponentially regularized level-shift function K-(Omega). Each closed form
// is paired with an independent numerical oracle (direct oscillatory
// quadrature for G, regularized partial sums with Richardson extrapolation
// for K-).

namespace udw::spectral {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// Cached response values for one parameter triple. For a > 0 the detailed
// balance ratio g_pos/g_neg equals exp(2 pi omega / a); for a = 0 the flat
// branch applies (g_neg = g_zero = 0, k_minus = 0).
struct BathSpectrum {
  double g_pos;    // G(Omega)
  double g_neg;    // G(-Omega)
  double g_zero;   // G(0) = a / 4 pi^2
  double g_plus;   // G+ = G(Omega) + G(-Omega), the population decay scale
  double g_minus;  // G- = G(Omega) - G(-Omega) = Omega / 2 pi
  double p1;       // G(Omega) / G+
  double p2;       // G(-Omega) / G+
  double k_minus;  // real level-shift value, <= 0 (script-K = i * k_minus)
};

// Vacuum two-point function along the accelerated worldline, regulated by
// the imaginary shift eps inside sinh. Finite for all real s when eps > 0.
inline std::complex<double> wightman(const PhysParams& p, double s, double eps) {
  if (!(eps > 0.0)) throw InvalidRegulator("wightman: regulator eps must be positive");
  if (p.a == 0.0)
    throw UnsupportedBranch("wightman: a = 0 flat branch is not supported here");
  const std::complex<double> arg(0.5 * p.a * s, -eps);
  const std::complex<double> sh = std::sinh(arg);
  return -(p.a * p.a) / (16.0 * M_PI * M_PI) / (sh * sh);
}

// Re psi(1 + i y) for y >= 0 via the convergent series
//   Re psi(1 + i y) + gamma = sum_{n>=1} y^2 / (n (n^2 + y^2)),
// truncated at N with the Euler-Maclaurin tail
//   sum_{n>N} f(n) = (1/2) ln(1 + y^2/N^2) - f(N)/2 - f'(N)/12 + O(f'''(N)),
// f(x) = y^2 / (x (x^2 + y^2)). Absolute accuracy is well below 1e-12 over
// the whole domain (the neglected term is ~ y^2 / (60 N^5)).
inline double re_digamma_one_plus_iy(double y) {
  if (!(y >= 0.0)) throw InvalidParameter("re_digamma_one_plus_iy: y must be >= 0");
  if (y == 0.0) return -kEulerGamma;
  const double y2 = y * y;
  const long N = std::max(2000L, static_cast<long>(4.0 * y) + 1);
  double s = 0.0;
  for (long n = N; n >= 1; --n) {
    const double x = static_cast<double>(n);
    s += y2 / (x * (x * x + y2));
  }
  const double Nd = static_cast<double>(N);
  const double q = Nd * (Nd * Nd + y2);
  const double f = y2 / q;
  const double fp = -y2 * (3.0 * Nd * Nd + y2) / (q * q);
  const double tail = 0.5 * std::log1p(y2 / (Nd * Nd)) - 0.5 * f - fp / 12.0;
  return s + tail - kEulerGamma;
}

// Finite regularized part of the level shift,
//   K-(Omega) = -(2 Omega / pi^2) [ Re psi(1 + i Omega/a) + gamma ],
// strictly negative for Omega, a > 0.
inline double lamb_shift(const PhysParams& p) {
  if (p.a <= 0.0)
    throw UnsupportedBranch("lamb_shift: a = 0 is handled by the flat branch of response()");
  return -(2.0 * p.omega / (M_PI * M_PI)) *
         (re_digamma_one_plus_iy(p.omega / p.a) + kEulerGamma);
}

// Closed-form response values. Computed via q = exp(-2 pi Omega / a) so the
// whole (a, Omega) in [0.1, 10]^2 range stays overflow-free.
inline BathSpectrum response(const PhysParams& p) {
  if (!(p.omega > 0.0)) throw InvalidParameter("response: omega must be positive");
  BathSpectrum bs;
  const double gm = p.omega / (2.0 * M_PI);
  if (p.flat()) {
    bs.g_pos = gm;
    bs.g_neg = 0.0;
    bs.g_zero = 0.0;
    bs.g_plus = gm;
    bs.g_minus = gm;
    bs.p1 = 1.0;
    bs.p2 = 0.0;
    bs.k_minus = 0.0;
    return bs;
  }
  const double q = std::exp(-2.0 * M_PI * p.omega / p.a);
  const double denom = -std::expm1(-2.0 * M_PI * p.omega / p.a);  // 1 - q
  bs.g_pos = gm / denom;
  bs.g_neg = gm * q / denom;
  bs.g_zero = p.a / (4.0 * M_PI * M_PI);
  bs.g_plus = gm * (1.0 + q) / denom;
  bs.g_minus = gm;
  bs.p1 = 1.0 / (1.0 + q);
  bs.p2 = q / (1.0 + q);
  bs.k_minus = lamb_shift(p);
  return bs;
}

// Single evaluation of the regulated Fourier integral
//   int_{-cutoff}^{cutoff} e^{i omega_signed s} W_eps(s) ds
// on symmetric geometrically graded panels (the integrand peaks with width
// ~eps/a at s = 0 and decays like e^{-a|s|}).
inline std::complex<double> fourier_response_integral(const PhysParams& p, double omega_signed,
                                                      double eps, double cutoff, int order) {
  const auto& g = quad::gauss_legendre(order);
  const auto edges = quad::graded_edges(std::max(eps / p.a, 1e-300), cutoff);
  std::complex<double> acc{};
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    acc += quad::integrate_panel(g, edges[k], edges[k + 1], [&](double s) {
      return std::exp(std::complex<double>(0.0, omega_signed * s)) * wightman(p, s, eps) +
             std::exp(std::complex<double>(0.0, -omega_signed * s)) * wightman(p, -s, eps);
    });
  }
  return acc;
}

// Numerical oracle for G(+/-Omega): real part of the regulated Fourier
// transform of the Wightman function. sign = +1 targets G(Omega), -1 targets
// G(-Omega). Convergence is checked by doubling the panel order; failure to
// settle within 1e-6 raises QuadratureFailure carrying the residual.
inline double fourier_response_numeric(const PhysParams& p, int sign, double eps, double cutoff,
                                       int n) {
  if (p.a <= 0.0) throw UnsupportedBranch("fourier_response_numeric: requires a > 0");
  if (sign != 1 && sign != -1)
    throw InvalidParameter("fourier_response_numeric: sign must be +1 or -1");
  if (!(eps > 0.0) || eps > 0.1 / p.a)
    throw InvalidRegulator("fourier_response_numeric: need eps in (0, 0.1/a]");
  if (cutoff < 40.0 / p.a)
    throw InvalidParameter("fourier_response_numeric: need cutoff >= 40/a");
  if (n < 2) throw InvalidParameter("fourier_response_numeric: need n >= 2");
  const double omega_signed = sign * p.omega;
  const std::complex<double> coarse = fourier_response_integral(p, omega_signed, eps, cutoff, n);
  const std::complex<double> fine = fourier_response_integral(p, omega_signed, eps, cutoff, 2 * n);
  const double residual = std::abs(fine - coarse);
  if (!(residual < 1e-6))
    throw QuadratureFailure("fourier_response_numeric: did not converge under n-doubling",
                            residual);
  return fine.real();
}

// Regularized partial sum S(eps) = sum_{n>=1} n e^{-eps n} / (n^2 + y^2).
// Grows like ln(1/eps) as eps -> 0.
inline double regularized_partial_sum(double y, double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    throw InvalidRegulator("regularized_partial_sum: need eps in (0, 1)");
  const double y2 = y * y;
  const long nmax = static_cast<long>(std::ceil(45.0 / eps));
  double s = 0.0;
  for (long n = nmax; n >= 1; --n) {
    const double x = static_cast<double>(n);
    s += x * std::exp(-eps * x) / (x * x + y2);
  }
  return s;
}

inline constexpr double kDefaultRegulators[] = {1e-2, 3.1622776601683794e-3, 1e-3,
                                                3.1622776601683794e-4, 1e-4};

// Independent oracle for lamb_shift: subtract the ln(1/eps) divergence from
// the regularized sum and Richardson-extrapolate the O(eps) remainder to
// zero. Each subtracted value is
//   v(eps) = (2 Omega / pi^2) (S(eps) + ln eps)  ->  K-(Omega) + O(eps),
// and adjacent-pair linear extrapolation removes the O(eps) term.
inline double lamb_shift_regularized_sum(const PhysParams& p, std::span<const double> eps_grid) {
  if (p.a <= 0.0)
    throw UnsupportedBranch("lamb_shift_regularized_sum: requires a > 0");
  if (eps_grid.size() < 2)
    throw InvalidParameter("lamb_shift_regularized_sum: need at least two regulators");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0 && eps_grid[i] < 1.0))
      throw InvalidRegulator("lamb_shift_regularized_sum: regulators must lie in (0, 1)");
    if (i > 0 && !(eps_grid[i] < eps_grid[i - 1]))
      throw InvalidParameter("lamb_shift_regularized_sum: regulators must be strictly decreasing");
  }
  const double y = p.omega / p.a;
  const double scale = 2.0 * p.omega / (M_PI * M_PI);
  std::vector<double> v(eps_grid.size());
  for (std::size_t i = 0; i < eps_grid.size(); ++i)
    v[i] = scale * (regularized_partial_sum(y, eps_grid[i]) + std::log(eps_grid[i]));
  std::vector<double> rich(eps_grid.size() - 1);
  for (std::size_t i = 0; i + 1 < eps_grid.size(); ++i) {
    const double e0 = eps_grid[i], e1 = eps_grid[i + 1];
    rich[i] = (e0 * v[i + 1] - e1 * v[i]) / (e0 - e1);
  }
  const double residual =
      rich.size() >= 2 ? std::abs(rich.back() - rich[rich.size() - 2]) : std::abs(rich.back() - v.back());
  if (!(residual <= 1e-5))
    throw RegularizationFailure("lamb_shift_regularized_sum: extrapolation did not settle",
                                residual);
  return rich.back();
}

inline double lamb_shift_regularized_sum(const PhysParams& p) {
  return lamb_shift_regularized_sum(p, std::span<const double>(kDefaultRegulators));
}

}  // namespace udw::spectral
