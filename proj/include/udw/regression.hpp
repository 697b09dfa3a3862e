#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udw/dynamics.hpp"
#include "udw/errors.hpp"
#include "udw/linalg.hpp"
#include "udw/params.hpp"
#include "udw/spectral.hpp"

// Quantum regression theorem machinery: the diagonal evolution system for
// (<sigma_->, <sigma_+>, <Sigma>), the closed-form two-time correlators, and
// an independent superoperator oracle that evaluates the same correlators by
// propagating modified states under the GKSL generator.
//
// All correlators are defined for delay tau >= 0. The earlier time tau' may
// be +infinity, which selects the steady-state expressions analytically
// (every exp(-r tau') factor becomes exactly zero).

namespace udw::regression {

using dynamics::DensityMatrix;
using dynamics::exp_decay;
using dynamics::GkslGenerator;
using spectral::BathSpectrum;

// Diagonal QRT evolution matrix M = diag(m11, m22, m33), drift C = (0,0,c3)
// and the steady vector -M^{-1} C.
struct EvolutionSystem {
  cplx m11;                     // -mu^2/2 (G0 + G+/4) - i (2 Omega + mu^2 K-/8)
  cplx m22;                     // conj(m11)
  double m33;                   // -mu^2 G+ / 4
  double c3;                    // mu^2 G(-Omega) / 4
  std::array<double, 3> steady; // (0, 0, G(-Omega)/G+)
};

inline EvolutionSystem evolution_system(const PhysParams& p, const BathSpectrum& bs) {
  const double mu2 = p.mu * p.mu;
  const double re = -0.5 * mu2 * (bs.g_zero + 0.25 * bs.g_plus);
  const double im = 2.0 * p.omega + 0.125 * mu2 * bs.k_minus;
  EvolutionSystem es;
  es.m11 = cplx(re, -im);
  es.m22 = cplx(re, im);
  es.m33 = -0.25 * mu2 * bs.g_plus;
  es.c3 = 0.25 * mu2 * bs.g_neg;
  es.steady = {0.0, 0.0, bs.p2};
  return es;
}

// Operators whose correlators the module knows how to form. The fluctuation
// variants are shifted by their steady-state means and need the spectrum.
enum class SystemOperator {
  Raise,            // sigma_+ = |+><-|
  Lower,            // sigma_- = |-><+|
  Number,           // Sigma = sigma_+ sigma_-
  AntiNumber,       // Delta = sigma_- sigma_+
  FluctNumber,      // Sigma - G(-Omega)/G+
  FluctAntiNumber,  // Delta - G(Omega)/G+
  PauliX,
  PauliY,
  PauliZ,
};

inline Mat2 operator_matrix(SystemOperator op, const BathSpectrum& bs) {
  using namespace dynamics;
  switch (op) {
    case SystemOperator::Raise: return ladder_raise();
    case SystemOperator::Lower: return ladder_lower();
    case SystemOperator::Number: return Mat2{{cplx(1), cplx(0), cplx(0), cplx(0)}};
    case SystemOperator::AntiNumber: return Mat2{{cplx(0), cplx(0), cplx(0), cplx(1)}};
    case SystemOperator::FluctNumber:
      return Mat2{{cplx(1.0 - bs.p2), cplx(0), cplx(0), cplx(-bs.p2)}};
    case SystemOperator::FluctAntiNumber:
      return Mat2{{cplx(-bs.p1), cplx(0), cplx(0), cplx(1.0 - bs.p1)}};
    case SystemOperator::PauliX: return pauli_x();
    case SystemOperator::PauliY: return pauli_y();
    case SystemOperator::PauliZ: return pauli_z();
  }
  throw InvalidParameter("operator_matrix: unknown operator");
}

enum class CorrelatorKind {
  Absorption,        // <sigma_-(tau') sigma_+(tau'+tau)>
  Emission,          // <sigma_+(tau') sigma_-(tau'+tau)>
  NumberNumber,      // <Sigma(tau') Sigma(tau'+tau)>
  NumberAntinumber,  // <Sigma(tau') Delta(tau'+tau)>
  Hbt,               // <sigma_+(tau') Sigma(tau'+tau) sigma_-(tau')>
  HbtSwapped,        // <sigma_+(tau') Delta(tau'+tau) sigma_-(tau')>
};

inline const char* kind_name(CorrelatorKind k) {
  switch (k) {
    case CorrelatorKind::Absorption: return "absorption";
    case CorrelatorKind::Emission: return "emission";
    case CorrelatorKind::NumberNumber: return "number-number";
    case CorrelatorKind::NumberAntinumber: return "number-antinumber";
    case CorrelatorKind::Hbt: return "hbt";
    case CorrelatorKind::HbtSwapped: return "hbt-swapped";
  }
  return "unknown";
}

struct CorrelatorSeries {
  CorrelatorKind kind;
  PhysParams params;
  double tau_prime;
  std::vector<double> taus;
  std::vector<cplx> values;
};

namespace detail {
inline void check_delays(double tau_prime, double tau) {
  if (!(tau >= 0.0)) throw InvalidParameter("correlator: tau must be >= 0");
  if (!(tau_prime >= 0.0)) throw InvalidParameter("correlator: tau_prime must be >= 0");
}
}  // namespace detail

// <sigma_-(tau') sigma_+(tau'+tau)> = P1 (1 - e^{-r tau'}) e^{m22 tau}.
inline cplx corr_absorption(const PhysParams& p, const BathSpectrum& bs, double tau_prime,
                            double tau) {
  detail::check_delays(tau_prime, tau);
  const auto es = evolution_system(p, bs);
  const double r = -es.m33;
  return bs.p1 * (1.0 - exp_decay(r, tau_prime)) * std::exp(es.m22 * tau);
}

// <sigma_+(tau') sigma_-(tau'+tau)> = [P2 + P1 e^{-r tau'}] e^{m11 tau}.
inline cplx corr_emission(const PhysParams& p, const BathSpectrum& bs, double tau_prime,
                          double tau) {
  detail::check_delays(tau_prime, tau);
  const auto es = evolution_system(p, bs);
  const double r = -es.m33;
  return (bs.p2 + bs.p1 * exp_decay(r, tau_prime)) * std::exp(es.m11 * tau);
}

// <Sigma(tau') Sigma(tau'+tau)>: memory of excitation.
inline double corr_number(const PhysParams& p, const BathSpectrum& bs, double tau_prime,
                          double tau) {
  detail::check_delays(tau_prime, tau);
  const double r = 0.25 * p.mu * p.mu * bs.g_plus;
  return bs.p1 * bs.p2 * (exp_decay(r, tau) + exp_decay(r, tau_prime)) +
         bs.p1 * bs.p1 * exp_decay(r, tau) * exp_decay(r, tau_prime) + bs.p2 * bs.p2;
}

// <Sigma(tau') Delta(tau'+tau)>; together with corr_number it satisfies the
// sum rule <Sigma Sigma> + <Sigma Delta> = <Sigma>(tau') identically.
inline double corr_number_antinumber(const PhysParams& p, const BathSpectrum& bs,
                                     double tau_prime, double tau) {
  detail::check_delays(tau_prime, tau);
  const double r = 0.25 * p.mu * p.mu * bs.g_plus;
  return bs.p1 * (bs.p1 * exp_decay(r, tau_prime) + bs.p2) * (1.0 - exp_decay(r, tau));
}

// <sigma_+(tau') Sigma(tau'+tau) sigma_-(tau')>: intensity-intensity (HBT)
// correlator. Zero at tau = 0 (antibunching), asymptote P2^2.
inline double corr_hbt(const PhysParams& p, const BathSpectrum& bs, double tau_prime,
                       double tau) {
  detail::check_delays(tau_prime, tau);
  const double r = 0.25 * p.mu * p.mu * bs.g_plus;
  return bs.p2 * (1.0 - exp_decay(r, tau)) * (bs.p2 + bs.p1 * exp_decay(r, tau_prime));
}

// <sigma_+(tau') Delta(tau'+tau) sigma_-(tau')>, the partner of corr_hbt in
// the sum rule corr_hbt + corr_hbt_swapped = <Sigma>(tau').
inline double corr_hbt_swapped(const PhysParams& p, const BathSpectrum& bs, double tau_prime,
                               double tau) {
  detail::check_delays(tau_prime, tau);
  const double r = 0.25 * p.mu * p.mu * bs.g_plus;
  return (bs.p2 + bs.p1 * exp_decay(r, tau_prime)) * (bs.p1 + bs.p2 * exp_decay(r, tau));
}

// Steady-state HBT correlator (tau' -> infinity) as a function of delay.
inline double hbt_pss(const PhysParams& p, const BathSpectrum& bs, double tau) {
  return corr_hbt(p, bs, std::numeric_limits<double>::infinity(), tau);
}

// Infinite-delay limit of the steady-state HBT correlator: P2^2.
inline double hbt_infinite_delay(const BathSpectrum& bs) { return bs.p2 * bs.p2; }

inline double closed_form_real(CorrelatorKind k, const PhysParams& p, const BathSpectrum& bs,
                               double tau_prime, double tau, cplx* out = nullptr) {
  cplx v;
  switch (k) {
    case CorrelatorKind::Absorption: v = corr_absorption(p, bs, tau_prime, tau); break;
    case CorrelatorKind::Emission: v = corr_emission(p, bs, tau_prime, tau); break;
    case CorrelatorKind::NumberNumber: v = corr_number(p, bs, tau_prime, tau); break;
    case CorrelatorKind::NumberAntinumber:
      v = corr_number_antinumber(p, bs, tau_prime, tau);
      break;
    case CorrelatorKind::Hbt: v = corr_hbt(p, bs, tau_prime, tau); break;
    case CorrelatorKind::HbtSwapped: v = corr_hbt_swapped(p, bs, tau_prime, tau); break;
  }
  if (out) *out = v;
  return v.real();
}

inline CorrelatorSeries correlator_series(const PhysParams& p, const BathSpectrum& bs,
                                          CorrelatorKind kind, double tau_prime,
                                          std::span<const double> taus) {
  CorrelatorSeries s{kind, p, tau_prime, {taus.begin(), taus.end()}, {}};
  s.values.reserve(taus.size());
  for (double tau : taus) {
    cplx v;
    closed_form_real(kind, p, bs, tau_prime, tau, &v);
    s.values.push_back(v);
  }
  return s;
}

// Superoperator two-time oracle.
//   <A(t') B(t'+tau)>        = tr[ B . E_tau( rho(t') A ) ]
//   <A(t') B(t'+tau) C(t')>  = tr[ B . E_tau( C rho(t') A ) ]
// where E_tau is the GKSL flow and rho(t') is reached by propagation from
// rho0. This is the independent check for every closed form above.
inline cplx qrt_oracle(const GkslGenerator& gen, const DensityMatrix& rho0, SystemOperator left,
                       SystemOperator mid, std::optional<SystemOperator> right, double tau_prime,
                       double tau, double h) {
  if (!std::isfinite(tau_prime) || !std::isfinite(tau))
    throw InvalidParameter("qrt_oracle: times must be finite (use the closed forms for tau' -> inf)");
  detail::check_delays(tau_prime, tau);
  const Mat2 a = operator_matrix(left, gen.spectrum);
  const Mat2 b = operator_matrix(mid, gen.spectrum);
  const Vec4 rho_tp = dynamics::propagate_linear(gen, rho0.vec(), tau_prime, h);
  Mat2 x = mat_of(rho_tp) * a;
  if (right) x = operator_matrix(*right, gen.spectrum) * x;
  const Vec4 evolved = dynamics::propagate_linear(gen, vec_of(x), tau, h);
  return trace(b * mat_of(evolved));
}

// Batched variant: one propagation pass per (tau', operator insertion),
// sampled at an ascending delay grid.
inline std::vector<cplx> qrt_oracle_series(const GkslGenerator& gen, const DensityMatrix& rho0,
                                           SystemOperator left, SystemOperator mid,
                                           std::optional<SystemOperator> right, double tau_prime,
                                           std::span<const double> taus, double h) {
  detail::check_delays(tau_prime, 0.0);
  const Mat2 a = operator_matrix(left, gen.spectrum);
  const Mat2 b = operator_matrix(mid, gen.spectrum);
  const Vec4 rho_tp = dynamics::propagate_linear(gen, rho0.vec(), tau_prime, h);
  Mat2 x = mat_of(rho_tp) * a;
  if (right) x = operator_matrix(*right, gen.spectrum) * x;
  const auto states = dynamics::propagate_linear_checkpoints(gen, vec_of(x), taus, h);
  std::vector<cplx> out;
  out.reserve(states.size());
  for (const auto& v : states) out.push_back(trace(b * mat_of(v)));
  return out;
}

}  // namespace udw::regression
