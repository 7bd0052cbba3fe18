#include "ctxlab/simplex.hpp"

#include <vector>

namespace ctxlab {

namespace {
constexpr double kPivotEps = 1e-9;
}

std::optional<RealVector> solve_equality_feasibility(const RealMatrix& a,
                                                     const RealVector& b,
                                                     double feas_tol) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (b.size() != m) throw SolverFailure("simplex: shape mismatch");

  // Tableau: [A | I | b] with rows flipped so b >= 0; artificials are basic.
  RealMatrix t(m, n + m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double sign = (b(i) < 0.0) ? -1.0 : 1.0;
    t.row(i).head(n) = sign * a.row(i);
    t.row(i).segment(n, m).setZero();
    t(i, n + i) = 1.0;
    t(i, n + m) = sign * b(i);
  }
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced cost row for min sum(artificials): z_j - c_j = sum of rows for
  // structural columns, 0 for artificials; objective = sum of b.
  RealVector cost = RealVector::Zero(n + m);
  cost.head(n) = t.leftCols(n).colwise().sum();
  double objective = t.col(n + m).sum();

  const long max_iter = 200L * static_cast<long>(n + m + 16);
  for (long iter = 0;; ++iter) {
    if (iter > max_iter) throw SolverFailure("simplex: iteration limit");

    // Bland's rule: smallest-index column with positive reduced cost.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (cost(j) > kPivotEps) { enter = j; break; }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double best_ratio = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) > kPivotEps) {
        const double ratio = t(i, n + m) / t(i, enter);
        if (leave < 0 || ratio < best_ratio - 1e-15 ||
            (ratio < best_ratio + 1e-15 && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) {
      // Unbounded phase-1 cannot happen for a bounded artificial objective.
      throw SolverFailure("simplex: unbounded phase-1");
    }

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i != leave && std::abs(t(i, enter)) > 0.0) {
        t.row(i) -= t(i, enter) * t.row(leave);
      }
    }
    objective -= cost(enter) * t(leave, n + m);
    cost -= cost(enter) * t.row(leave).head(n + m).transpose();
    cost(enter) = 0.0;
    basis[leave] = enter;
  }

  // Recompute the residual objective directly from basic artificials.
  double infeas = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] >= n) infeas += std::abs(t(i, n + m));
  }
  (void)objective;
  if (infeas > feas_tol) return std::nullopt;

  RealVector x = RealVector::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < n) x(basis[i]) = t(i, n + m);
  }
  return x;
}

}  // namespace ctxlab
