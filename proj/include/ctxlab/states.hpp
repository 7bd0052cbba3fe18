#ifndef CTXLAB_STATES_HPP
#define CTXLAB_STATES_HPP

#include "ctxlab/types.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ctxlab {

/// Pure qubit state |psi> = (cos(theta), sin(theta) e^{i phi}).
/// theta in [0, pi/2], phi in [0, 2 pi). At the poles (theta = 0 or pi/2)
/// phi is gauge and reconstruction normalizes it to 0.
struct BlochState {
  double theta = 0.0;
  double phi = 0.0;

  BlochState() = default;
  BlochState(double theta_, double phi_);
};

/// Positive semidefinite, unit-trace complex matrix. Validates on
/// construction; immutable afterwards.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m,
                         const Tolerances& tol = default_tolerances());

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  double purity() const;  // Tr(rho^2), real by Hermiticity

 private:
  ComplexMatrix m_;
};

/// Projection-valued measure: orthogonal projectors summing to identity.
class PVM {
 public:
  explicit PVM(std::vector<ComplexMatrix> projectors,
               const Tolerances& tol = default_tolerances());

  const std::vector<ComplexMatrix>& projectors() const { return projs_; }
  Eigen::Index dim() const { return projs_.front().rows(); }
  std::size_t n_outcomes() const { return projs_.size(); }

 private:
  std::vector<ComplexMatrix> projs_;
};

/// Ordered, labeled collection of equal-dimension density matrices.
class StateSet {
 public:
  StateSet(std::vector<DensityMatrix> states, std::vector<std::string> labels);

  const std::vector<DensityMatrix>& states() const { return states_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return states_.size(); }
  Eigen::Index dim() const { return states_.front().dim(); }

 private:
  std::vector<DensityMatrix> states_;
  std::vector<std::string> labels_;
};

DensityMatrix bloch_to_density(const BlochState& s);

/// Inverse of bloch_to_density for pure 2x2 states.
/// Throws WrongDimension / NotPure.
BlochState density_to_bloch(const DensityMatrix& rho,
                            const Tolerances& tol = default_tolerances());

/// Kronecker product of two states.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

enum class Subsystem { A, B };

/// Trace out one factor of a bipartite state with dims (dim_a, dim_b).
DensityMatrix partial_trace(const DensityMatrix& rho, Eigen::Index dim_a,
                            Eigen::Index dim_b, Subsystem keep);

/// Hilbert-Schmidt isometry from d x d Hermitian matrices to R^{d^2}:
/// diagonal entries as-is, sqrt(2) * (Re, Im) of the upper triangle.
/// dot(v(A), v(B)) = Tr(A B). Throws NotHermitian.
RealVector vectorize_hermitian(const ComplexMatrix& m,
                               const Tolerances& tol = default_tolerances());

/// Haar-random unitary of dimension d (QR of a complex Ginibre matrix with
/// the phase convention fix on R's diagonal).
ComplexMatrix random_unitary(Eigen::Index d, std::mt19937_64& rng);

/// PVM built from column groups of a Haar-random unitary; deterministic in
/// the generator state. Throws BadOutcomeCount unless 1 <= n <= d.
PVM random_pvm(Eigen::Index d, int n_outcomes, std::mt19937_64& rng,
               const Tolerances& tol = default_tolerances());

inline PVM random_pvm(Eigen::Index d, int n_outcomes, std::uint64_t seed,
                      const Tolerances& tol = default_tolerances()) {
  std::mt19937_64 rng(seed);
  return random_pvm(d, n_outcomes, rng, tol);
}

/// Haar-random pure state of dimension d as a density matrix.
DensityMatrix random_pure_state(Eigen::Index d, std::mt19937_64& rng);

}  // namespace ctxlab

#endif
