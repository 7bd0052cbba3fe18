#ifndef CTXLAB_SN_HPP
#define CTXLAB_SN_HPP

#include "ctxlab/states.hpp"
#include "ctxlab/types.hpp"

#include <vector>

namespace ctxlab {

/// One-dimensional Schrodinger-Newton spin channel configuration, SI units.
/// Force profiles are piecewise-constant samples aligned with the uniform
/// time grid: forces[k] acts on [t_k, t_{k+1}).
struct SNConfig {
  double mass = 0.0;           // kg
  double hbar = 1.054571817e-34;  // J s
  double g_newton = 6.67430e-11;  // m^3 kg^-1 s^-2
  double reg_radius = 0.0;     // m, short-distance regularization of I_rho
  double a0 = 0.0;             // m^2, initial packet variance
  std::vector<double> force_up;    // N
  std::vector<double> force_down;  // N
  std::vector<double> time_grid;   // s, uniform, strictly increasing

  void validate() const;  // throws ConfigError
  double dt() const { return time_grid[1] - time_grid[0]; }
};

/// Branch phases and Gaussian moments on the configured grid.
struct SNPhaseResult {
  std::vector<double> time;
  std::vector<double> phi_up, phi_down;      // rad
  std::vector<double> z_up, z_down;          // <z>, m
  std::vector<double> p_up, p_down;          // <p>, kg m/s
  std::vector<double> a_up, a_down;          // variance, m^2
  std::vector<double> b_up, b_down;          // covariance, kg m^2/s
  std::vector<double> f_up, f_down;          // J s
};

/// Evolves both branch packets through the first-order self-gravity
/// potential and accumulates the branch phases. alpha2 = |alpha|^2 is the
/// weight of the up branch. Throws NonPositiveVariance on integration
/// blow-up and GridTooCoarse when halving dt moves a final phase by more
/// than tol.sn_conv.
SNPhaseResult sn_moment_evolution(const SNConfig& cfg, double alpha2,
                                  const Tolerances& tol = default_tolerances());

/// Spin channel: alpha2 = cos^2(theta), phi advances by the relative branch
/// phase phi_up(T) - phi_down(T). Pole states keep theta (phi is gauge).
BlochState sn_channel(const BlochState& s, const SNConfig& cfg,
                      const Tolerances& tol = default_tolerances());

}  // namespace ctxlab

#endif
