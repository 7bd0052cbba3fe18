#ifndef CTXLAB_NONLINEAR_HPP
#define CTXLAB_NONLINEAR_HPP

#include "ctxlab/states.hpp"
#include "ctxlab/types.hpp"

#include <vector>

namespace ctxlab {

/// Cloning map rho -> rho (x) rho.
DensityMatrix deutsch_clone(const DensityMatrix& rho);

/// Nonlinear qubit Hamiltonian hbar(a) = sum_m c_m a^m with a = sin^2(theta).
/// The induced precession rate is omega(theta) = hbar'(a), which is constant
/// (linear dynamics) exactly when all coefficients beyond degree one vanish.
struct WeinbergHamiltonian {
  std::vector<double> coeffs;  // c_0 ... c_m

  explicit WeinbergHamiltonian(std::vector<double> c);

  double value(double a) const;       // hbar(a)
  double derivative(double a) const;  // hbar'(a)
  bool is_nonlinear() const;          // some c_m != 0 for m >= 2
};

/// omega(theta) = hbar'(sin^2 theta); finite everywhere including the poles.
double weinberg_omega(const WeinbergHamiltonian& h, double theta);

/// (theta, phi) -> (theta, phi - omega(theta) t); pole states are fixed.
BlochState weinberg_evolve(const BlochState& s, const WeinbergHamiltonian& h,
                           double t);

/// Bijective purity-preserving map onto the XZ great circle: both angles are
/// quantized to `precision_bits`-bit fractions, bit-interleaved into one
/// fraction u, and the output is the real-spinor state
/// (cos(pi u), sin(pi u)). Injective on the quantization grid.
BlochState counterexample_map(const BlochState& s, int precision_bits = 16);

}  // namespace ctxlab

#endif
