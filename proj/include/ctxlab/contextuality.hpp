#ifndef CTXLAB_CONTEXTUALITY_HPP
#define CTXLAB_CONTEXTUALITY_HPP

#include "ctxlab/states.hpp"
#include "ctxlab/types.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ctxlab {

enum class Verdict { NONCONTEXTUAL_INDEPENDENT, CONTEXTUAL_DEPENDENT };

std::string to_string(Verdict v);

struct ContextualityVerdict {
  int rank = 0;
  std::vector<double> singular_values;  // descending
  Verdict verdict = Verdict::NONCONTEXTUAL_INDEPENDENT;
  // Unit vector alpha with || sum_i alpha_i rho_i ||_HS <= eps_cert,
  // present when dependent.
  std::optional<RealVector> certificate;
  std::vector<std::string> warnings;
};

/// Operators F_j with Tr(rho_i F_j) = delta_ij, each in the real span of
/// the rho_i. Exists exactly when the set is linearly independent.
struct DualFrame {
  std::vector<ComplexMatrix> operators;
};

/// Hidden-variable model: states sigma_lambda with response weights
/// p(i, lambda) >= 0 that sum to 1 per row and reconstruct each rho_i as
/// sum_lambda p(i, lambda) sigma_lambda.
struct NoncontextualModel {
  std::vector<DensityMatrix> sigma;
  RealMatrix weights;  // |I| x |Lambda|
};

/// Linear-independence verdict on the vectorized states. Mixed inputs are
/// accepted with a warning; the contextuality reading of a dependent
/// verdict is only valid for pure sets.
ContextualityVerdict rank_test(const StateSet& set,
                               const Tolerances& tol = default_tolerances());

/// Gram-inverse dual frame. Throws DependentSet when the Gram matrix is
/// singular at the rank tolerance.
DualFrame dual_frame(const StateSet& set,
                     const Tolerances& tol = default_tolerances());

/// The model with sigma_lambda = rho_lambda and p(i, lambda) =
/// Tr(rho_i F_lambda) = delta_{i lambda}.
NoncontextualModel model_from_frame(const StateSet& set, const DualFrame& frame,
                                    const Tolerances& tol = default_tolerances());

struct ModelVerification {
  double max_deviation = 0.0;
  bool pass = false;
};

/// Max over states, PVMs, and outcomes of
/// |Tr(rho_i Pi_k) - sum_lambda p(i,lambda) Tr(sigma_lambda Pi_k)|.
ModelVerification verify_model(const StateSet& set,
                               const NoncontextualModel& model,
                               const std::vector<PVM>& pvms, double tol);

struct LpInfeasible {};  // conclusive only relative to the supplied ansatz

using LpResult = std::variant<NoncontextualModel, LpInfeasible>;

/// Linear feasibility encoding of the hidden-variable condition over a
/// finite ansatz {sigma_lambda}: p >= 0, rows sum to 1, the mixture
/// reconstructs each rho_i, and p respects the null space of the
/// vectorized state set (existence of Hermitian G_lambda with
/// p(i, lambda) = Tr(rho_i G_lambda)).
LpResult lp_oracle(const StateSet& set,
                   const std::vector<DensityMatrix>& ansatz,
                   const Tolerances& tol = default_tolerances());

/// Input states plus the computational-basis projectors plus the maximally
/// mixed state, deduplicated against exact repeats.
std::vector<DensityMatrix> default_ansatz(const StateSet& set);

}  // namespace ctxlab

#endif
