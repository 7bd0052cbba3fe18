#include "ctxlab/nonlinear.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ctxlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

DensityMatrix deutsch_clone(const DensityMatrix& rho) {
  return tensor(rho, rho);
}

WeinbergHamiltonian::WeinbergHamiltonian(std::vector<double> c)
    : coeffs(std::move(c)) {
  if (coeffs.empty()) {
    throw InvalidState("WeinbergHamiltonian: need at least one coefficient");
  }
  for (double v : coeffs) {
    if (!std::isfinite(v)) {
      throw InvalidState("WeinbergHamiltonian: non-finite coefficient");
    }
  }
}

double WeinbergHamiltonian::value(double a) const {
  double acc = 0.0;
  for (std::size_t m = coeffs.size(); m-- > 0;) acc = acc * a + coeffs[m];
  return acc;
}

double WeinbergHamiltonian::derivative(double a) const {
  double acc = 0.0;
  for (std::size_t m = coeffs.size(); m-- > 1;) {
    acc = acc * a + static_cast<double>(m) * coeffs[m];
  }
  return acc;
}

bool WeinbergHamiltonian::is_nonlinear() const {
  for (std::size_t m = 2; m < coeffs.size(); ++m) {
    if (coeffs[m] != 0.0) return true;
  }
  return false;
}

double weinberg_omega(const WeinbergHamiltonian& h, double theta) {
  const double sin_t = std::sin(theta);
  return h.derivative(sin_t * sin_t);
}

BlochState weinberg_evolve(const BlochState& s, const WeinbergHamiltonian& h,
                           double t) {
  if (t < 0.0) throw InvalidState("weinberg_evolve: t must be >= 0");
  if (s.theta == 0.0 || s.theta == kPi / 2.0) return s;
  const double omega = weinberg_omega(h, s.theta);
  return BlochState(s.theta, s.phi - omega * t);
}

BlochState counterexample_map(const BlochState& s, int precision_bits) {
  if (precision_bits < 8 || precision_bits > 32) {
    throw InvalidState("counterexample_map: precision_bits must be in [8, 32]");
  }
  const int p = precision_bits;
  const std::uint64_t grid = std::uint64_t{1} << p;
  auto quantize = [&](double frac) -> std::uint64_t {
    const auto q = static_cast<std::uint64_t>(std::llround(frac * static_cast<double>(grid)));
    return q >= grid ? grid - 1 : q;
  };
  const std::uint64_t it = quantize(s.theta / (kPi / 2.0));
  const std::uint64_t ip = quantize(s.phi / (2.0 * kPi));
  // Interleave: theta bits at even positions (from the top), phi bits odd.
  std::uint64_t u_bits = 0;
  for (int k = 0; k < p; ++k) {
    u_bits |= ((it >> (p - 1 - k)) & 1u) << (2 * p - 1 - 2 * k);
    u_bits |= ((ip >> (p - 1 - k)) & 1u) << (2 * p - 2 - 2 * k);
  }
  const double u =
      static_cast<double>(u_bits) / std::pow(2.0, 2 * p);
  // Real spinor (cos(pi u), sin(pi u)): pi u in [0, pi) sweeps the full XZ
  // great circle once.
  const double spinor_angle = kPi * u;
  if (spinor_angle <= kPi / 2.0) return BlochState(spinor_angle, 0.0);
  return BlochState(kPi - spinor_angle, kPi);
}

}  // namespace ctxlab
