#include "ctxlab/contextuality.hpp"

#include "ctxlab/simplex.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace ctxlab {

std::string to_string(Verdict v) {
  return v == Verdict::NONCONTEXTUAL_INDEPENDENT ? "NONCONTEXTUAL_INDEPENDENT"
                                                 : "CONTEXTUAL_DEPENDENT";
}

namespace {

/// States stacked as columns of a d^2 x |I| real matrix.
RealMatrix stack_vectorized(const StateSet& set, const Tolerances& tol) {
  const Eigen::Index d = set.dim();
  RealMatrix s(d * d, static_cast<Eigen::Index>(set.size()));
  for (std::size_t i = 0; i < set.size(); ++i) {
    s.col(static_cast<Eigen::Index>(i)) =
        vectorize_hermitian(set.states()[i].matrix(), tol);
  }
  return s;
}

/// Right-singular vectors spanning the numerical null space of the
/// column-stacked state matrix; each gives sum_i beta_i rho_i = 0.
std::vector<RealVector> null_space_basis(const StateSet& set,
                                         const Tolerances& tol) {
  RealMatrix s = stack_vectorized(set, tol);
  Eigen::JacobiSVD<RealMatrix> svd(s, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.rank * sv(0);
  std::vector<RealVector> basis;
  // Columns of V beyond the listed singular values carry sigma = 0.
  for (Eigen::Index k = 0; k < svd.matrixV().cols(); ++k) {
    if (k >= sv.size() || sv(k) <= cutoff) {
      basis.push_back(svd.matrixV().col(k));
    }
  }
  return basis;
}

}  // namespace

ContextualityVerdict rank_test(const StateSet& set, const Tolerances& tol) {
  ContextualityVerdict out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.states()[i].purity() < 1.0 - tol.pure) {
      out.warnings.push_back(
          "state '" + set.labels()[i] +
          "' is not pure; a dependent verdict certifies linear dependence, "
          "not contextuality");
    }
  }
  RealMatrix s = stack_vectorized(set, tol);
  Eigen::JacobiSVD<RealMatrix> svd(s, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.rank * sv(0);
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    out.singular_values.push_back(sv(k));
    if (sv(k) > cutoff) ++rank;
  }
  out.rank = rank;
  if (rank < static_cast<int>(set.size())) {
    out.verdict = Verdict::CONTEXTUAL_DEPENDENT;
    // Last column of full V: the direction with the smallest (possibly
    // implicit zero) singular value.
    RealVector alpha = svd.matrixV().col(svd.matrixV().cols() - 1);
    alpha.normalize();
    out.certificate = alpha;
  } else {
    out.verdict = Verdict::NONCONTEXTUAL_INDEPENDENT;
  }
  return out;
}

DualFrame dual_frame(const StateSet& set, const Tolerances& tol) {
  const std::size_t n = set.size();
  RealMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (set.states()[i].matrix() * set.states()[j].matrix())
              .trace()
              .real();
    }
  }
  Eigen::JacobiSVD<RealMatrix> svd(gram,
                                   Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // Gram singular values are squares of the state-stack ones, so the
  // dependence cutoff is the square of the rank_test cutoff.
  if (sv(sv.size() - 1) <= tol.rank * tol.rank * sv(0)) {
    throw DependentSet("dual_frame: Gram matrix is singular, set is dependent");
  }
  RealMatrix inv = svd.solve(RealMatrix::Identity(n, n));
  DualFrame frame;
  frame.operators.reserve(n);
  const Eigen::Index d = set.dim();
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix f = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 0; k < n; ++k) {
      f += inv(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) *
           set.states()[k].matrix();
    }
    frame.operators.push_back(std::move(f));
  }
  return frame;
}

NoncontextualModel model_from_frame(const StateSet& set, const DualFrame& frame,
                                    const Tolerances& tol) {
  const std::size_t n = set.size();
  if (frame.operators.size() != n ||
      frame.operators.front().rows() != set.dim()) {
    throw FrameMismatch("model_from_frame: frame does not match the set");
  }
  NoncontextualModel model;
  model.sigma = set.states();
  model.weights.resize(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const double p =
          (set.states()[i].matrix() * frame.operators[l]).trace().real();
      if (p < -tol.lp) {
        throw FrameMismatch("model_from_frame: negative response weight");
      }
      model.weights(static_cast<Eigen::Index>(i),
                    static_cast<Eigen::Index>(l)) = p;
    }
  }
  return model;
}

ModelVerification verify_model(const StateSet& set,
                               const NoncontextualModel& model,
                               const std::vector<PVM>& pvms, double tol) {
  const Eigen::Index d = set.dim();
  if (model.sigma.empty() || model.sigma.front().dim() != d) {
    throw DimensionMismatch("verify_model: model dimension mismatch");
  }
  if (model.weights.rows() != static_cast<Eigen::Index>(set.size()) ||
      model.weights.cols() != static_cast<Eigen::Index>(model.sigma.size())) {
    throw DimensionMismatch("verify_model: weight shape mismatch");
  }
  double max_dev = 0.0;
  for (const auto& pvm : pvms) {
    if (pvm.dim() != d) {
      throw DimensionMismatch("verify_model: PVM dimension mismatch");
    }
    for (const auto& proj : pvm.projectors()) {
      // Tr(sigma_lambda Pi_k) once per outcome.
      RealVector sigma_probs(model.sigma.size());
      for (std::size_t l = 0; l < model.sigma.size(); ++l) {
        sigma_probs(static_cast<Eigen::Index>(l)) =
            (model.sigma[l].matrix() * proj).trace().real();
      }
      for (std::size_t i = 0; i < set.size(); ++i) {
        const double direct =
            (set.states()[i].matrix() * proj).trace().real();
        const double via_model =
            model.weights.row(static_cast<Eigen::Index>(i)).dot(sigma_probs);
        max_dev = std::max(max_dev, std::abs(direct - via_model));
      }
    }
  }
  return {max_dev, max_dev <= tol};
}

std::vector<DensityMatrix> default_ansatz(const StateSet& set) {
  std::vector<DensityMatrix> ansatz = set.states();
  const Eigen::Index d = set.dim();
  for (Eigen::Index k = 0; k < d; ++k) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    p(k, k) = 1.0;
    ansatz.emplace_back(std::move(p));
  }
  ansatz.emplace_back(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
  // Drop exact duplicates (e.g. basis states already in the input set).
  std::vector<DensityMatrix> unique;
  for (const auto& s : ansatz) {
    bool dup = false;
    for (const auto& u : unique) {
      if ((s.matrix() - u.matrix()).cwiseAbs().maxCoeff() < 1e-14) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(s);
  }
  return unique;
}

LpResult lp_oracle(const StateSet& set,
                   const std::vector<DensityMatrix>& ansatz,
                   const Tolerances& tol) {
  const Eigen::Index d = set.dim();
  if (ansatz.empty()) throw EmptySet("lp_oracle: empty ansatz");
  for (const auto& s : ansatz) {
    if (s.dim() != d) {
      throw DimensionMismatch("lp_oracle: ansatz dimension mismatch");
    }
  }
  const Eigen::Index n = static_cast<Eigen::Index>(set.size());
  const Eigen::Index nl = static_cast<Eigen::Index>(ansatz.size());
  const Eigen::Index d2 = d * d;

  RealMatrix sigma_vec(d2, nl);
  for (Eigen::Index l = 0; l < nl; ++l) {
    sigma_vec.col(l) = vectorize_hermitian(ansatz[l].matrix(), tol);
  }
  const auto null_basis = null_space_basis(set, tol);

  // Variables p(i, l), flattened row-major: index i * nl + l.
  const Eigen::Index n_vars = n * nl;
  const Eigen::Index n_rows =
      n + n * d2 + static_cast<Eigen::Index>(null_basis.size()) * nl;
  RealMatrix a = RealMatrix::Zero(n_rows, n_vars);
  RealVector b = RealVector::Zero(n_rows);
  Eigen::Index row = 0;

  // Row sums: sum_l p(i, l) = 1.
  for (Eigen::Index i = 0; i < n; ++i, ++row) {
    for (Eigen::Index l = 0; l < nl; ++l) a(row, i * nl + l) = 1.0;
    b(row) = 1.0;
  }
  // Reconstruction: sum_l p(i, l) v(sigma_l) = v(rho_i), componentwise.
  for (Eigen::Index i = 0; i < n; ++i) {
    RealVector rho_vec =
        vectorize_hermitian(set.states()[static_cast<std::size_t>(i)].matrix(),
                            tol);
    for (Eigen::Index c = 0; c < d2; ++c, ++row) {
      for (Eigen::Index l = 0; l < nl; ++l) {
        a(row, i * nl + l) = sigma_vec(c, l);
      }
      b(row) = rho_vec(c);
    }
  }
  // Null-space compatibility: sum_i beta_i p(i, l) = 0 for each null vector
  // beta of the state set and each lambda.
  for (const auto& beta : null_basis) {
    for (Eigen::Index l = 0; l < nl; ++l, ++row) {
      for (Eigen::Index i = 0; i < n; ++i) a(row, i * nl + l) = beta(i);
    }
  }

  auto x = solve_equality_feasibility(a, b, tol.lp);
  if (!x) return LpInfeasible{};

  NoncontextualModel model;
  model.sigma = ansatz;
  model.weights.resize(n, nl);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index l = 0; l < nl; ++l) {
      model.weights(i, l) = (*x)(i * nl + l);
    }
  }
  return model;
}

}  // namespace ctxlab
