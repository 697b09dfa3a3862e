#pragma once

#include <stdexcept>
#include <string>

namespace udw {

// Base type for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct InvalidRegulator : Error {
  using Error::Error;
};

// Requested evaluation lies on a branch the formula does not cover
// (e.g. the flat a = 0 limit of an accelerated-trajectory expression).
struct UnsupportedBranch : Error {
  using Error::Error;
};

struct QuadratureFailure : Error {
  double residual;
  QuadratureFailure(const std::string& msg, double res)
      : Error(msg + " (residual " + std::to_string(res) + ")"), residual(res) {}
};

struct RegularizationFailure : Error {
  double residual;
  RegularizationFailure(const std::string& msg, double res)
      : Error(msg + " (residual " + std::to_string(res) + ")"), residual(res) {}
};

struct IntegrationFailure : Error {
  double time;
  double drift;
  IntegrationFailure(const std::string& msg, double t, double d)
      : Error(msg + " (t = " + std::to_string(t) + ", drift = " + std::to_string(d) + ")"),
        time(t),
        drift(d) {}
};

struct PoleProximity : Error {
  double omega;
  PoleProximity(const std::string& msg, double w)
      : Error(msg + " (omega = " + std::to_string(w) + ")"), omega(w) {}
};

struct ResolutionError : Error {
  using Error::Error;
};

// An evaluation that would leave the representable floating-point range.
struct RangeError : Error {
  using Error::Error;
};

struct NoUniqueSteadyState : Error {
  using Error::Error;
};

struct ConstructionError : Error {
  using Error::Error;
};

}  // namespace udw
