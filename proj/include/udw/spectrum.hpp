#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

#include "udw/errors.hpp"
#include "udw/params.hpp"
#include "udw/quadrature.hpp"
#include "udw/regression.hpp"
#include "udw/spectral.hpp"

// Spontaneous-emission power spectrum: the finite-window closed forms P1/P2,
// their long-time limit line shapes, a brute-force double-integral oracle
// over the square observation window [0,T]^2, and the regularized
// oscillatory integral behind the long-time limit.

namespace udw::spectrum {

using spectral::BathSpectrum;

// Scalar coefficients entering every spectrum formula.
struct SpectrumParams {
  double rate_re;       // R = Re m11 = -mu^2 (G0 + G+/4) / 2, < 0 for mu > 0
  double phase_coeff;   // I = Im m11 = -(2 Omega + mu^2 K- / 8)
  double m33;           // -mu^2 G+ / 4
  double m33_minus_r;   // mu^2 (G0 - G+/4) / 2
  double resonance;     // omega* = 2 Omega + mu^2 K- / 8 = -I
  double p1, p2;        // emission-correlator weights G(+-Omega)/G+
  double g_zero, g_plus, mu2;
};

inline SpectrumParams spectrum_params(const PhysParams& p, const BathSpectrum& bs) {
  const double mu2 = p.mu * p.mu;
  SpectrumParams sp;
  sp.rate_re = -0.5 * mu2 * (bs.g_zero + 0.25 * bs.g_plus);
  sp.resonance = 2.0 * p.omega + 0.125 * mu2 * bs.k_minus;
  sp.phase_coeff = -sp.resonance;
  sp.m33 = -0.25 * mu2 * bs.g_plus;
  sp.m33_minus_r = 0.5 * mu2 * (bs.g_zero - 0.25 * bs.g_plus);
  sp.p1 = bs.p1;
  sp.p2 = bs.p2;
  sp.g_zero = bs.g_zero;
  sp.g_plus = bs.g_plus;
  sp.mu2 = mu2;
  return sp;
}

// Emission correlator <sigma_+(tau') sigma_-(tau'')> in its two-exponential
// form, valid for all points of the observation square.
inline cplx emission_correlator_two_time(const SpectrumParams& sp, double tau_prime,
                                         double tau_second) {
  const cplx lam(sp.rate_re, sp.phase_coeff);
  return sp.p2 * std::exp(lam * (tau_second - tau_prime)) +
         sp.p1 * std::exp(lam * tau_second + (cplx(sp.m33) - lam) * tau_prime);
}

namespace detail {

inline void check_window(const SpectrumParams& sp, double T) {
  if (!(T > 0.0)) throw InvalidParameter("spectrum: window T must be positive");
  const double growth = std::max(std::abs(sp.rate_re), std::abs(sp.m33_minus_r)) * T;
  if (growth > 700.0)
    throw RangeError("spectrum: window too large, finite-T exponentials would overflow");
}

inline void check_pole(const SpectrumParams& sp, double omega) {
  if (std::abs(omega - sp.resonance) < 1e-6)
    throw PoleProximity("spectrum: grid frequency too close to the resonance", omega);
}

}  // namespace detail

// First finite-window branch, evaluated as printed: prefactor P2, rational
// kernel in Delta = omega - omega*, and the exponential bracket
// e^{(R+iDelta)T} - 2 + e^{(-R-iDelta)T} with its growing term kept.
inline cplx finite_window_p1(const SpectrumParams& sp, double T, double omega) {
  detail::check_pole(sp, omega);
  const double delta = omega - sp.resonance;
  const double gsum = sp.g_zero + 0.25 * sp.g_plus;
  const double A = 0.25 * sp.mu2 * sp.mu2 * gsum * gsum;
  const cplx num(A - delta * delta, sp.mu2 * gsum * delta);
  const double den = (A - delta * delta) * (A - delta * delta) +
                     sp.mu2 * sp.mu2 * gsum * gsum * delta * delta;
  const cplx e1 = std::exp(cplx(sp.rate_re, delta) * T);
  const cplx e2 = std::exp(cplx(-sp.rate_re, -delta) * T);
  return sp.p2 * num / den * (e1 - 2.0 + e2);
}

// Second finite-window branch, as printed; the e^{m33 T} term in the bracket
// is the product of the two decaying endpoint factors.
inline cplx finite_window_p2(const SpectrumParams& sp, double T, double omega) {
  detail::check_pole(sp, omega);
  const double delta = omega - sp.resonance;
  const double B =
      0.25 * sp.mu2 * sp.mu2 * (sp.g_plus * sp.g_plus / 16.0 - sp.g_zero * sp.g_zero);
  const cplx num(B + delta * delta, -sp.mu2 * sp.g_zero * delta);
  const double den = (B + delta * delta) * (B + delta * delta) +
                     sp.mu2 * sp.mu2 * sp.g_zero * sp.g_zero * delta * delta;
  const cplx e1 = std::exp(cplx(sp.rate_re, delta) * T);
  const cplx e2 = std::exp(cplx(sp.m33) * T);
  const cplx e3 = std::exp(cplx(sp.m33_minus_r, -delta) * T);
  return sp.p1 * num / den * (1.0 - e1 + e2 - e3);
}

struct SpectrumResult {
  std::vector<double> omega;
  std::vector<cplx> p1, p2, total;
  double peak_omega = std::numeric_limits<double>::quiet_NaN();
  double fwhm = std::numeric_limits<double>::quiet_NaN();
  double window = 0.0;
};

namespace detail {

// Three-point quadratic interpolation around the grid argmax of y; ties
// break toward smaller omega.
inline double interpolate_peak(std::span<const double> x, std::span<const double> y) {
  if (x.size() < 2) return x.empty() ? std::numeric_limits<double>::quiet_NaN() : x[0];
  std::size_t k = 0;
  for (std::size_t i = 1; i < y.size(); ++i)
    if (y[i] > y[k]) k = i;
  if (k == 0 || k + 1 == y.size()) return x[k];
  const double d1 = y[k + 1] - y[k - 1];
  const double d2 = y[k + 1] - 2.0 * y[k] + y[k - 1];
  if (d2 >= 0.0) return x[k];
  return x[k] - 0.5 * (x[k + 1] - x[k]) * d1 / d2;
}

inline double half_crossing(std::span<const double> x, std::span<const double> y, std::size_t k,
                            double half, int dir) {
  for (std::size_t i = k; dir > 0 ? i + 1 < y.size() : i > 0; i += dir) {
    const std::size_t j = i + dir;
    if ((y[i] - half) * (y[j] - half) <= 0.0 && y[i] != y[j])
      return x[i] + (x[j] - x[i]) * (half - y[i]) / (y[j] - y[i]);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

inline void attach_peak_metadata(SpectrumResult& r) {
  std::vector<double> re(r.total.size());
  for (std::size_t i = 0; i < r.total.size(); ++i) re[i] = r.total[i].real();
  r.peak_omega = interpolate_peak(r.omega, re);
  std::size_t k = 0;
  for (std::size_t i = 1; i < re.size(); ++i)
    if (re[i] > re[k]) k = i;
  const double half = 0.5 * re[k];
  const double lo = half_crossing(r.omega, re, k, half, -1);
  const double hi = half_crossing(r.omega, re, k, half, +1);
  r.fwhm = hi - lo;
}

}  // namespace detail

// Closed-form finite-window spectrum on a frequency grid. Every grid point
// must stay at least 1e-6 away from the resonance omega*.
inline SpectrumResult spectrum_finite_T(const PhysParams& p, const BathSpectrum& bs, double T,
                                        std::span<const double> omega_grid) {
  const SpectrumParams sp = spectrum_params(p, bs);
  detail::check_window(sp, T);
  SpectrumResult r;
  r.window = T;
  r.omega.assign(omega_grid.begin(), omega_grid.end());
  r.p1.reserve(omega_grid.size());
  r.p2.reserve(omega_grid.size());
  r.total.reserve(omega_grid.size());
  for (double w : omega_grid) {
    const cplx v1 = finite_window_p1(sp, T, w);
    const cplx v2 = finite_window_p2(sp, T, w);
    r.p1.push_back(v1);
    r.p2.push_back(v2);
    r.total.push_back(v1 + v2);
  }
  detail::attach_peak_metadata(r);
  return r;
}

namespace detail {

// 1-D composite GL nodes over [0, len], sized so that one panel never spans
// more than 0.5 rad of the fastest phase.
struct LineRule {
  std::vector<double> nodes, weights;
};

inline LineRule line_rule(double len, double max_phase_rate, int order, long max_evals_1d) {
  const double width = std::min(len, 0.5 / std::max(max_phase_rate, 1e-12));
  const long panels = static_cast<long>(std::ceil(len / width));
  if (panels * order > max_evals_1d)
    throw ResolutionError(
        "spectrum oracle: phase cannot be resolved within the evaluation budget");
  const auto& g = quad::gauss_legendre(order);
  LineRule r;
  r.nodes.reserve(panels * order);
  r.weights.reserve(panels * order);
  for (long k = 0; k < panels; ++k) {
    const double lo = len * static_cast<double>(k) / static_cast<double>(panels);
    const double hi = len * static_cast<double>(k + 1) / static_cast<double>(panels);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int i = 0; i < order; ++i) {
      r.nodes.push_back(mid + half * g.x[i]);
      r.weights.push_back(half * g.w[i]);
    }
  }
  return r;
}

}  // namespace detail

// Brute-force oracle for one frequency: the double integral of the
// two-exponential emission correlator times e^{i omega (tau'' - tau')} over
// the full square [0,T]^2, evaluated point by point on tensor-product
// Gauss-Legendre panels. Budget: at most 1e7 integrand evaluations.
inline cplx spectrum_numeric_oracle(const PhysParams& p, const BathSpectrum& bs, double T,
                                    double omega) {
  const SpectrumParams sp = spectrum_params(p, bs);
  detail::check_window(sp, T);
  const double rate = std::abs(omega) + std::abs(sp.phase_coeff);
  const auto rule = detail::line_rule(T, rate, 6, 3162);  // 3162^2 ~ 1e7
  cplx acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double tp = rule.nodes[i];
    cplx inner{};
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double ts = rule.nodes[j];
      inner += rule.weights[j] * emission_correlator_two_time(sp, tp, ts) *
               std::exp(cplx(0.0, omega * (ts - tp)));
    }
    acc += rule.weights[i] * inner;
  }
  return acc;
}

// Ordered-domain variant (tau'' >= tau'). Kept for the domain comparison; it
// does NOT reproduce the printed closed forms (the square does).
inline cplx spectrum_numeric_oracle_triangle(const PhysParams& p, const BathSpectrum& bs,
                                             double T, double omega) {
  const SpectrumParams sp = spectrum_params(p, bs);
  detail::check_window(sp, T);
  const double rate = std::abs(omega) + std::abs(sp.phase_coeff);
  const auto outer = detail::line_rule(T, rate, 6, 3162);
  cplx acc{};
  for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
    const double tp = outer.nodes[i];
    if (T - tp <= 0.0) continue;
    const auto inner = detail::line_rule(T - tp, rate, 6, 3162);
    cplx in{};
    for (std::size_t j = 0; j < inner.nodes.size(); ++j) {
      const double ts = tp + inner.nodes[j];
      in += inner.weights[j] * emission_correlator_two_time(sp, tp, ts) *
            std::exp(cplx(0.0, omega * (ts - tp)));
    }
    acc += outer.weights[i] * in;
  }
  return acc;
}

struct LorentzianLimit {
  std::vector<double> omega;
  std::vector<double> p1;  // normalized to unit peak at omega*
  std::vector<double> p2;  // normalized to its own on-resonance value
  double peak_omega = std::numeric_limits<double>::quiet_NaN();
  double sign_change_radius = 0.0;  // |Delta| where the p1 branch turns negative
};

// Long-time limit line shapes. The p1 branch is
//   R^2 (R^2 - Delta^2) / (R^2 + Delta^2)^2,
// even in Delta, unit peak at Delta = 0, changing sign at |Delta| = |R|.
inline LorentzianLimit lorentzian_limit(const PhysParams& p, const BathSpectrum& bs,
                                        std::span<const double> omega_grid) {
  const SpectrumParams sp = spectrum_params(p, bs);
  const double R2 = sp.rate_re * sp.rate_re;
  const double B =
      0.25 * sp.mu2 * sp.mu2 * (sp.g_plus * sp.g_plus / 16.0 - sp.g_zero * sp.g_zero);
  const double g02 = sp.mu2 * sp.mu2 * sp.g_zero * sp.g_zero;
  LorentzianLimit r;
  r.omega.assign(omega_grid.begin(), omega_grid.end());
  r.p1.reserve(omega_grid.size());
  r.p2.reserve(omega_grid.size());
  r.sign_change_radius = std::abs(sp.rate_re);
  const double p2_scale = B;  // the unnormalized p2 branch equals 1/B at Delta = 0
  for (double w : omega_grid) {
    const double d2 = (w - sp.resonance) * (w - sp.resonance);
    r.p1.push_back(R2 * (R2 - d2) / ((R2 - d2) * (R2 - d2) + 4.0 * R2 * d2));
    r.p2.push_back(p2_scale * (B + d2) / ((B + d2) * (B + d2) + g02 * d2));
  }
  r.peak_omega = detail::interpolate_peak(r.omega, r.p1);
  return r;
}

// Regularized long-time oscillatory integral int_0^inf e^{(i delta - eps)T} dT.
struct OscillatoryTail {
  cplx value;           // 1/(eps - i delta), exact at finite eps
  bool delta_singular;  // |delta| below tolerance: eps -> 0 diverges as 1/eps
  double delta_weight;  // pi when singular (the delta-function weight), else 0
  cplx pv_limit;        // principal-value part of the eps -> 0 limit: i/delta
};

// The eps -> 0 decomposition follows the Sokhotski-Plemelj split: a pi
// delta-function weight at delta = 0 plus a principal value i/delta away
// from it, so the rapidly oscillating long-time limit is 0 for delta != 0.
inline OscillatoryTail oscillatory_tail(double delta, double eps, double delta_tol = 1e-12) {
  if (!(eps > 0.0)) throw InvalidRegulator("oscillatory_tail: eps must be positive");
  OscillatoryTail r;
  r.value = 1.0 / cplx(eps, -delta);
  r.delta_singular = std::abs(delta) < delta_tol;
  r.delta_weight = r.delta_singular ? M_PI : 0.0;
  r.pv_limit = r.delta_singular ? cplx(std::numeric_limits<double>::infinity(), 0.0)
                                : cplx(0.0, 1.0 / delta);
  return r;
}

}  // namespace udw::spectrum
