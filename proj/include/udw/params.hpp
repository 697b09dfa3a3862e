#pragma once

#include <cmath>

#include "udw/errors.hpp"

namespace udw {

// The physical triple (a, Omega, mu). Everything in the library works in
// natural units (hbar = c = 1); a, omega and all derived rates share one
// inverse-time unit, mu is dimensionless.
struct PhysParams {
  double a;      // proper uniform acceleration, >= 0
  double omega;  // effective gap parameter, > 0
  double mu;     // system-bath coupling, >= 0

  PhysParams(double a_, double omega_, double mu_) : a(a_), omega(omega_), mu(mu_) {
    if (!std::isfinite(omega) || omega <= 0.0)
      throw InvalidParameter("omega must be positive and finite");
    if (!std::isfinite(a) || a < 0.0)
      throw InvalidParameter("a must be non-negative and finite");
    if (!std::isfinite(mu) || mu < 0.0)
      throw InvalidParameter("mu must be non-negative and finite");
  }

  // a = 0 selects the flat-trajectory limit branch of the response functions.
  bool flat() const { return a == 0.0; }
};

}  // namespace udw
