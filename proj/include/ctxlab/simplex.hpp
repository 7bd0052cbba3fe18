#ifndef CTXLAB_SIMPLEX_HPP
#define CTXLAB_SIMPLEX_HPP

#include "ctxlab/types.hpp"

#include <optional>

namespace ctxlab {

/// Phase-1 simplex feasibility: find x >= 0 with A x = b.
/// Returns the feasible point, or nullopt when the phase-1 optimum stays
/// above `feas_tol`. Bland's rule; throws SolverFailure on iteration
/// blow-up.
std::optional<RealVector> solve_equality_feasibility(const RealMatrix& a,
                                                     const RealVector& b,
                                                     double feas_tol);

}  // namespace ctxlab

#endif
