#include "ctxlab/states.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

namespace ctxlab {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap_2pi(double x) {
  double y = std::fmod(x, 2.0 * kPi);
  if (y < 0.0) y += 2.0 * kPi;
  return y;
}
}  // namespace

BlochState::BlochState(double theta_, double phi_)
    : theta(theta_), phi(wrap_2pi(phi_)) {
  if (!(theta >= 0.0 && theta <= kPi / 2.0 + 1e-12)) {
    throw InvalidState("BlochState: theta must lie in [0, pi/2]");
  }
  if (theta > kPi / 2.0) theta = kPi / 2.0;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, const Tolerances& tol)
    : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw InvalidState("DensityMatrix: matrix must be square and nonempty");
  }
  const double herm_dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol.herm) {
    throw NotHermitian("DensityMatrix: not Hermitian, max deviation " +
                       std::to_string(herm_dev));
  }
  m_ = 0.5 * (m_ + m_.adjoint().eval());  // symmetrize the rounding residue
  const double tr_dev = std::abs(m_.trace().real() - 1.0) +
                        std::abs(m_.trace().imag());
  if (tr_dev > tol.trace) {
    throw InvalidState("DensityMatrix: trace deviates from 1 by " +
                       std::to_string(tr_dev));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_,
                                                  Eigen::EigenvaluesOnly);
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -tol.psd) {
    throw InvalidState("DensityMatrix: negative eigenvalue " +
                       std::to_string(min_ev));
  }
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

PVM::PVM(std::vector<ComplexMatrix> projectors, const Tolerances& tol)
    : projs_(std::move(projectors)) {
  if (projs_.empty()) throw InvalidState("PVM: no projectors");
  const Eigen::Index d = projs_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& p : projs_) {
    if (p.rows() != d || p.cols() != d) {
      throw DimensionMismatch("PVM: projector dimension mismatch");
    }
    if ((p * p - p).cwiseAbs().maxCoeff() > tol.proj) {
      throw InvalidState("PVM: element is not a projector");
    }
    sum += p;
  }
  if ((sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol.res) {
    throw InvalidState("PVM: projectors do not resolve the identity");
  }
}

StateSet::StateSet(std::vector<DensityMatrix> states,
                   std::vector<std::string> labels)
    : states_(std::move(states)), labels_(std::move(labels)) {
  if (states_.empty()) throw EmptySet("StateSet: empty");
  if (labels_.size() != states_.size()) {
    throw InvalidState("StateSet: label count mismatch");
  }
  const Eigen::Index d = states_.front().dim();
  for (const auto& s : states_) {
    if (s.dim() != d) throw DimensionMismatch("StateSet: mixed dimensions");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw InvalidState("StateSet: duplicate labels");
  }
}

DensityMatrix bloch_to_density(const BlochState& s) {
  Eigen::Vector2cd psi;
  psi << std::cos(s.theta),
      std::sin(s.theta) * std::exp(std::complex<double>(0.0, s.phi));
  return DensityMatrix(psi * psi.adjoint());
}

BlochState density_to_bloch(const DensityMatrix& rho, const Tolerances& tol) {
  if (rho.dim() != 2) {
    throw WrongDimension("density_to_bloch: expected a 2x2 state");
  }
  if (rho.purity() < 1.0 - tol.pure) {
    throw NotPure("density_to_bloch: Tr(rho^2) = " +
                  std::to_string(rho.purity()));
  }
  const auto& m = rho.matrix();
  const double c2 = std::clamp(m(0, 0).real(), 0.0, 1.0);
  const double theta = std::atan2(std::sqrt(1.0 - c2), std::sqrt(c2));
  // rho_{10} = sin(theta) cos(theta) e^{i phi}; phi is gauge at the poles.
  if (std::abs(m(1, 0)) < 1e-14) {
    return BlochState(theta < kPi / 4.0 ? 0.0 : kPi / 2.0, 0.0);
  }
  const double phi = wrap_2pi(std::arg(m(1, 0)));
  return BlochState(theta, phi);
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const Eigen::Index da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Eigen::Index dim_a,
                            Eigen::Index dim_b, Subsystem keep) {
  if (dim_a * dim_b != rho.dim()) {
    throw DimensionMismatch("partial_trace: dims do not factor the state");
  }
  const auto& m = rho.matrix();
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (Eigen::Index i = 0; i < dim_a; ++i)
      for (Eigen::Index j = 0; j < dim_a; ++j)
        for (Eigen::Index k = 0; k < dim_b; ++k)
          out(i, j) += m(i * dim_b + k, j * dim_b + k);
    return DensityMatrix(std::move(out));
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (Eigen::Index i = 0; i < dim_b; ++i)
    for (Eigen::Index j = 0; j < dim_b; ++j)
      for (Eigen::Index k = 0; k < dim_a; ++k)
        out(i, j) += m(k * dim_b + i, k * dim_b + j);
  return DensityMatrix(std::move(out));
}

RealVector vectorize_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw NotHermitian("vectorize_hermitian: matrix not square");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol.herm) {
    throw NotHermitian("vectorize_hermitian: matrix not Hermitian");
  }
  const Eigen::Index d = m.rows();
  RealVector v(d * d);
  Eigen::Index k = 0;
  const double root2 = std::sqrt(2.0);
  for (Eigen::Index i = 0; i < d; ++i) v(k++) = m(i, i).real();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      v(k++) = root2 * m(i, j).real();
      v(k++) = root2 * m(i, j).imag();
    }
  }
  return v;
}

ComplexMatrix random_unitary(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases so the distribution is Haar.
  for (Eigen::Index j = 0; j < d; ++j) {
    std::complex<double> rd = r(j, j);
    q.col(j) *= (std::abs(rd) > 0.0) ? rd / std::abs(rd)
                                     : std::complex<double>(1.0, 0.0);
  }
  return q;
}

PVM random_pvm(Eigen::Index d, int n_outcomes, std::mt19937_64& rng,
               const Tolerances& tol) {
  if (n_outcomes < 1 || n_outcomes > d) {
    throw BadOutcomeCount("random_pvm: need 1 <= n_outcomes <= d");
  }
  ComplexMatrix u = random_unitary(d, rng);
  std::vector<ComplexMatrix> projs;
  projs.reserve(n_outcomes);
  // Spread d columns over n_outcomes groups as evenly as possible.
  Eigen::Index col = 0;
  for (int g = 0; g < n_outcomes; ++g) {
    Eigen::Index take = d / n_outcomes + (g < d % n_outcomes ? 1 : 0);
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (Eigen::Index c = 0; c < take; ++c, ++col) {
      p += u.col(col) * u.col(col).adjoint();
    }
    projs.push_back(std::move(p));
  }
  return PVM(std::move(projs), tol);
}

DensityMatrix random_pure_state(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd psi(d);
  for (Eigen::Index i = 0; i < d; ++i)
    psi(i) = std::complex<double>(gauss(rng), gauss(rng));
  psi.normalize();
  return DensityMatrix(psi * psi.adjoint());
}

}  // namespace ctxlab
