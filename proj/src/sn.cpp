#include "ctxlab/sn.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace ctxlab {

namespace {

constexpr int kQuadNodes = 48;

/// Gauss-Hermite nodes/weights (weight e^{-x^2}) via the Golub-Welsch
/// Jacobi-matrix eigendecomposition.
struct HermiteRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

const HermiteRule& hermite_rule() {
  static const HermiteRule rule = [] {
    const int n = kQuadNodes;
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
      const double off = std::sqrt(i / 2.0);
      jacobi(i, i - 1) = off;
      jacobi(i - 1, i) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    HermiteRule r;
    r.nodes = es.eigenvalues();
    r.weights.resize(n);
    const double total = std::sqrt(std::numbers::pi);
    for (int i = 0; i < n; ++i) {
      const double v0 = es.eigenvectors()(0, i);
      r.weights(i) = total * v0 * v0;
    }
    return r;
  }();
  return rule;
}

/// Self-gravity kernel of a zeroth-order (free) Gaussian of variance a_free:
/// value, first and second z-derivatives of
///   U(z) = -G m^2 E_{z' ~ N(0, a_free)} [ ((z - z')^2 + R^2)^{-1/2} ].
struct KernelEval {
  double u = 0.0;
  double du = 0.0;
  double d2u = 0.0;
};

KernelEval kernel_at(double z, double a_free, double g_m2, double r2) {
  const auto& rule = hermite_rule();
  const double scale = std::sqrt(2.0 * a_free);
  const double norm = 1.0 / std::sqrt(std::numbers::pi);
  KernelEval out;
  for (int i = 0; i < kQuadNodes; ++i) {
    const double d = z - scale * rule.nodes(i);
    const double s = d * d + r2;
    const double inv = 1.0 / std::sqrt(s);
    const double w = norm * rule.weights(i);
    out.u += w * inv;
    out.du += w * (-d * inv / s);
    out.d2u += w * ((3.0 * d * d / s - 1.0) * inv / s);
  }
  out.u *= -g_m2;
  out.du *= -g_m2;
  out.d2u *= -g_m2;
  return out;
}

/// Classical displacement difference Delta u(t) = u_up(t) - u_down(t) for
/// piecewise-constant forces; analytic inside each segment.
class TrajectorySplit {
 public:
  TrajectorySplit(const SNConfig& cfg) : cfg_(cfg) {
    const std::size_t n = cfg.time_grid.size();
    du_.resize(n, 0.0);
    dv_.resize(n, 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double dt = cfg.time_grid[k + 1] - cfg.time_grid[k];
      const double da = (cfg.force_up[k] - cfg.force_down[k]) / cfg.mass;
      du_[k + 1] = du_[k] + dv_[k] * dt + 0.5 * da * dt * dt;
      dv_[k + 1] = dv_[k] + da * dt;
    }
  }

  /// Delta u within segment k at offset tau from t_k.
  double at(std::size_t k, double tau) const {
    const double da = (cfg_.force_up[k] - cfg_.force_down[k]) / cfg_.mass;
    return du_[k] + dv_[k] * tau + 0.5 * da * tau * tau;
  }

 private:
  const SNConfig& cfg_;
  std::vector<double> du_, dv_;
};

struct BranchState {
  double z = 0.0;
  double p = 0.0;
  double a = 0.0;
  double b = 0.0;
};

BranchState operator+(const BranchState& x, const BranchState& y) {
  return {x.z + y.z, x.p + y.p, x.a + y.a, x.b + y.b};
}
BranchState operator*(double c, const BranchState& x) {
  return {c * x.z, c * x.p, c * x.a, c * x.b};
}

/// Potential seen by one branch, expanded to second order around z_center.
KernelEval branch_potential(double z_center, double shift, double alpha2,
                            double own_weight_is_up, double a_free,
                            double g_m2, double r2) {
  // up branch:   alpha2 * U(z) + (1 - alpha2) * U(z + du)
  // down branch: alpha2 * U(z - du) + (1 - alpha2) * U(z)
  const double w_own = own_weight_is_up > 0.5 ? alpha2 : 1.0 - alpha2;
  const double w_other = 1.0 - w_own;
  KernelEval own = kernel_at(z_center, a_free, g_m2, r2);
  KernelEval other = kernel_at(z_center + shift, a_free, g_m2, r2);
  KernelEval out;
  out.u = w_own * own.u + w_other * other.u;
  out.du = w_own * own.du + w_other * other.du;
  out.d2u = w_own * own.d2u + w_other * other.d2u;
  return out;
}

struct IntegrationOut {
  SNPhaseResult result;
  double final_phi_up = 0.0;
  double final_phi_down = 0.0;
};

/// RK4 over the moment ODEs with trapezoid accumulation of the phase
/// integrals. `refine` = 1 integrates on the configured grid, 2 on the
/// half-step grid (recording only the configured points).
IntegrationOut integrate(const SNConfig& cfg, double alpha2, int refine) {
  const double m = cfg.mass;
  const double hbar = cfg.hbar;
  const double g_m2 = cfg.g_newton * m * m;
  const double r2 = cfg.reg_radius * cfg.reg_radius;
  const TrajectorySplit split(cfg);

  const double a_spread = hbar * hbar / (4.0 * m * m * cfg.a0);
  auto a_free = [&](double t) { return cfg.a0 + a_spread * t * t; };

  BranchState up{0.0, 0.0, cfg.a0, 0.0};
  BranchState down = up;
  double f_up = 0.0, f_down = 0.0;      // running phase integrals
  double width_int = 0.0;               // integral of dt / A, per branch
  double width_int_down = 0.0;

  IntegrationOut out;
  auto& res = out.result;
  const std::size_t n = cfg.time_grid.size();

  // Integrand of the f quadrature at the current state.
  auto f_integrand = [&](const BranchState& s, double t_abs, std::size_t seg,
                         double tau, bool is_up) {
    const double du_cl = split.at(seg, tau);
    const double shift = is_up ? du_cl : -du_cl;
    KernelEval pot = branch_potential(0.0, shift, alpha2, is_up ? 1.0 : 0.0,
                                      a_free(t_abs), g_m2, r2);
    return pot.u + 0.5 * pot.du * s.z;
  };

  auto derivatives = [&](const BranchState& s, double t_abs, std::size_t seg,
                         double tau, bool is_up) {
    const double du_cl = split.at(seg, tau);
    const double shift = is_up ? du_cl : -du_cl;
    KernelEval pot = branch_potential(s.z, shift, alpha2, is_up ? 1.0 : 0.0,
                                      a_free(t_abs), g_m2, r2);
    if (s.a <= 0.0) {
      throw NonPositiveVariance("sn_moment_evolution: variance collapsed");
    }
    BranchState d;
    d.z = s.p / m;
    d.p = -pot.du;
    d.a = s.b / m;
    d.b = (s.b * s.b + hbar * hbar) / (2.0 * m * s.a) - 2.0 * s.a * pot.d2u;
    return d;
  };

  auto record = [&](double t) {
    res.time.push_back(t);
    res.z_up.push_back(up.z);
    res.z_down.push_back(down.z);
    res.p_up.push_back(up.p);
    res.p_down.push_back(down.p);
    res.a_up.push_back(up.a);
    res.a_down.push_back(down.a);
    res.b_up.push_back(up.b);
    res.b_down.push_back(down.b);
    const double fu = -0.5 * up.z * up.p -
                      hbar * hbar / (4.0 * m) * width_int - f_up;
    const double fd = -0.5 * down.z * down.p -
                      hbar * hbar / (4.0 * m) * width_int_down - f_down;
    res.f_up.push_back(fu);
    res.f_down.push_back(fd);
    // Branch phase at the packet center: ( <p><z> + f ) / hbar.
    res.phi_up.push_back((up.p * up.z + fu) / hbar);
    res.phi_down.push_back((down.p * down.z + fd) / hbar);
  };

  record(cfg.time_grid.front());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double seg_dt = (cfg.time_grid[k + 1] - cfg.time_grid[k]) / refine;
    for (int sub = 0; sub < refine; ++sub) {
      const double tau0 = sub * seg_dt;
      const double t0 = cfg.time_grid[k] + tau0;
      // Trapezoid samples at the step ends.
      const double g0u = f_integrand(up, t0, k, tau0, true);
      const double g0d = f_integrand(down, t0, k, tau0, false);
      const double w0u = 1.0 / up.a;
      const double w0d = 1.0 / down.a;

      auto step = [&](BranchState& s, bool is_up) {
        BranchState k1 = derivatives(s, t0, k, tau0, is_up);
        BranchState k2 = derivatives(s + 0.5 * seg_dt * k1, t0 + 0.5 * seg_dt,
                                     k, tau0 + 0.5 * seg_dt, is_up);
        BranchState k3 = derivatives(s + 0.5 * seg_dt * k2, t0 + 0.5 * seg_dt,
                                     k, tau0 + 0.5 * seg_dt, is_up);
        BranchState k4 = derivatives(s + seg_dt * k3, t0 + seg_dt, k,
                                     tau0 + seg_dt, is_up);
        s = s + (seg_dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (s.a <= 0.0) {
          throw NonPositiveVariance("sn_moment_evolution: variance collapsed");
        }
      };
      step(up, true);
      step(down, false);

      const double tau1 = tau0 + seg_dt;
      const double t1 = t0 + seg_dt;
      f_up += 0.5 * seg_dt * (g0u + f_integrand(up, t1, k, tau1, true));
      f_down += 0.5 * seg_dt * (g0d + f_integrand(down, t1, k, tau1, false));
      width_int += 0.5 * seg_dt * (w0u + 1.0 / up.a);
      width_int_down += 0.5 * seg_dt * (w0d + 1.0 / down.a);
    }
    record(cfg.time_grid[k + 1]);
  }
  out.final_phi_up = res.phi_up.back();
  out.final_phi_down = res.phi_down.back();
  return out;
}

}  // namespace

void SNConfig::validate() const {
  if (!(mass > 0.0) || !(hbar > 0.0) || !(reg_radius > 0.0) || !(a0 > 0.0)) {
    throw ConfigError("SNConfig: mass, hbar, reg_radius, a0 must be > 0");
  }
  if (g_newton < 0.0) throw ConfigError("SNConfig: g_newton must be >= 0");
  if (time_grid.size() < 2) {
    throw ConfigError("SNConfig: time grid needs at least two points");
  }
  const double step = time_grid[1] - time_grid[0];
  if (!(step > 0.0)) throw ConfigError("SNConfig: time grid must increase");
  for (std::size_t k = 0; k + 1 < time_grid.size(); ++k) {
    const double dk = time_grid[k + 1] - time_grid[k];
    if (!(dk > 0.0) || std::abs(dk - step) > 1e-12 * step) {
      throw ConfigError("SNConfig: time grid must be uniform and increasing");
    }
  }
  if (force_up.size() < time_grid.size() - 1 ||
      force_down.size() < time_grid.size() - 1) {
    throw ConfigError("SNConfig: force profiles must cover every grid segment");
  }
}

SNPhaseResult sn_moment_evolution(const SNConfig& cfg, double alpha2,
                                  const Tolerances& tol) {
  cfg.validate();
  if (alpha2 < 0.0 || alpha2 > 1.0) {
    throw ConfigError("sn_moment_evolution: alpha2 must lie in [0, 1]");
  }
  IntegrationOut coarse = integrate(cfg, alpha2, 1);
  IntegrationOut fine = integrate(cfg, alpha2, 2);
  const double drift =
      std::max(std::abs(coarse.final_phi_up - fine.final_phi_up),
               std::abs(coarse.final_phi_down - fine.final_phi_down));
  if (drift > tol.sn_conv) {
    throw GridTooCoarse("sn_moment_evolution: halving dt moves phases by " +
                        std::to_string(drift) + " rad");
  }
  return coarse.result;
}

BlochState sn_channel(const BlochState& s, const SNConfig& cfg,
                      const Tolerances& tol) {
  const double c = std::cos(s.theta);
  const double alpha2 = c * c;
  SNPhaseResult r = sn_moment_evolution(cfg, alpha2, tol);
  const double dphi = r.phi_up.back() - r.phi_down.back();
  if (s.theta == 0.0 || s.theta == std::numbers::pi / 2.0) {
    return s;  // phi is gauge at the poles
  }
  return BlochState(s.theta, s.phi + dphi);
}

}  // namespace ctxlab
