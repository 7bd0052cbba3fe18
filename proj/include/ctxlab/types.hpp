#ifndef CTXLAB_TYPES_HPP
#define CTXLAB_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace ctxlab {

using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Default numerical tolerances. Double precision on d <= 16 matrices leaves
// several orders of magnitude headroom over all of these.
struct Tolerances {
  double herm = 1e-10;   // max |M - M^dag| entry
  double trace = 1e-10;  // |Tr - 1|
  double psd = 1e-9;     // eigenvalue floor
  double pure = 1e-9;    // |Tr(rho^2) - 1|
  double ang = 1e-8;     // Bloch round-trip
  double num = 1e-9;     // generic numeric identity checks
  double proj = 1e-10;   // |P^2 - P|
  double res = 1e-10;    // PVM resolution of identity
  double rank = 1e-8;    // relative SVD cutoff sigma_k / sigma_max
  double frame = 1e-8;   // dual frame duality residual
  double model = 1e-8;   // model reconstruction residual (HS norm)
  double cert = 1e-7;    // dependence certificate residual
  double lp = 1e-7;      // LP feasibility tolerance
  double sn_conv = 1e-6; // SN grid-halving phase convergence (rad)
  double res_guard = 1e-3; // resonance guard margin (rad)
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotPure : Error { using Error::Error; };
struct WrongDimension : Error { using Error::Error; };
struct InvalidState : Error { using Error::Error; };
struct BadOutcomeCount : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };
struct DependentSet : Error { using Error::Error; };
struct FrameMismatch : Error { using Error::Error; };
struct SolverFailure : Error { using Error::Error; };
struct DuplicateTheta : Error { using Error::Error; };
struct NonPositiveVariance : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace ctxlab

#endif
