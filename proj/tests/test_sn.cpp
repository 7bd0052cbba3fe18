#include "ctxlab/contextuality.hpp"
#include "ctxlab/scenario.hpp"
#include "ctxlab/sn.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ctxlab;

namespace {
constexpr double kPi = std::numbers::pi;

/// Desk-scale configuration: 1e-17 kg packet split by ~1e-6 m over 1 s.
SNConfig default_config(double g_newton = 6.67430e-11, double dt = 1e-3) {
  SNConfig cfg;
  cfg.mass = 1e-17;
  cfg.reg_radius = 1e-7;
  cfg.a0 = 1e-14;
  cfg.g_newton = g_newton;
  const double duration = 1.0;
  const auto n = static_cast<std::size_t>(std::llround(duration / dt));
  // Push for the first half, pull back for the second; the split peaks at
  // the final time with Delta u = f0 T^2 / (2 m).
  const double f0 = 2.0 * cfg.mass * 1e-6 / (duration * duration);
  for (std::size_t k = 0; k <= n; ++k) {
    cfg.time_grid.push_back(static_cast<double>(k) * dt);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double f = (k < n / 2) ? f0 : -f0;
    cfg.force_up.push_back(f);
    cfg.force_down.push_back(-f);
  }
  return cfg;
}

double relative_phase(const SNConfig& cfg, double alpha2) {
  SNPhaseResult r = sn_moment_evolution(cfg, alpha2);
  return r.phi_up.back() - r.phi_down.back();
}
}  // namespace

TEST_CASE("sn config validation") {
  SNConfig cfg = default_config();
  cfg.validate();

  SNConfig bad = cfg;
  bad.mass = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = cfg;
  bad.time_grid[3] = bad.time_grid[2];  // non-uniform
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = cfg;
  bad.force_up.resize(3);
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("variances stay positive and packets follow the split") {
  SNConfig cfg = default_config();
  SNPhaseResult r = sn_moment_evolution(cfg, 0.25);
  for (std::size_t k = 0; k < r.time.size(); ++k) {
    CHECK(r.a_up[k] > 0.0);
    CHECK(r.a_down[k] > 0.0);
  }
  CHECK(r.time.size() == cfg.time_grid.size());
}

TEST_CASE("no self-gravity removes all delta dependence") {
  SNConfig cfg = default_config(0.0);
  const double d1 = relative_phase(cfg, 0.3);
  const double d2 = relative_phase(cfg, 0.7);
  CHECK(std::abs(d1 - d2) < 1e-12);
}

TEST_CASE("label-exchange symmetry is exact") {
  SNConfig cfg = default_config();
  SNPhaseResult a = sn_moment_evolution(cfg, 0.25);

  SNConfig swapped = cfg;
  std::swap(swapped.force_up, swapped.force_down);
  SNPhaseResult b = sn_moment_evolution(swapped, 0.75);

  for (std::size_t k = 0; k < a.time.size(); ++k) {
    CHECK(a.phi_up[k] == b.phi_down[k]);
    CHECK(a.phi_down[k] == b.phi_up[k]);
    CHECK(a.z_up[k] == b.z_down[k]);
    CHECK(a.a_up[k] == b.a_down[k]);
  }
}

TEST_CASE("self-gravity makes the relative phase depend on delta") {
  SNConfig cfg = default_config();
  const double at_quarter = relative_phase(cfg, 0.25);
  const double at_three_quarters = relative_phase(cfg, 0.75);
  CHECK(std::abs(at_quarter - at_three_quarters) > 1e-5);
}

TEST_CASE("grid convergence guard") {
  SNConfig cfg = default_config();
  CHECK_NOTHROW(sn_moment_evolution(cfg, 0.5));

  // One giant step cannot resolve the pulse shape.
  SNConfig coarse = cfg;
  coarse.time_grid = {0.0, 0.5, 1.0};
  coarse.force_up = {cfg.force_up.front(), cfg.force_up.back()};
  coarse.force_down = {cfg.force_down.front(), cfg.force_down.back()};
  Tolerances strict;
  strict.sn_conv = 1e-16;
  CHECK_THROWS_AS(sn_moment_evolution(coarse, 0.5, strict), GridTooCoarse);
}

TEST_CASE("sn_channel geometry") {
  SNConfig cfg = default_config();

  SUBCASE("poles keep theta") {
    BlochState out = sn_channel(BlochState(0.0, 0.0), cfg);
    CHECK(out.theta == 0.0);
  }

  SUBCASE("no gravity shifts all meridian states rigidly") {
    SNConfig flat = default_config(0.0);
    const double shift1 =
        sn_channel(BlochState(kPi / 6.0, 0.0), flat).phi;
    const double shift2 =
        sn_channel(BlochState(kPi / 3.0, 0.0), flat).phi;
    CHECK(std::abs(shift1 - shift2) < 1e-12);
  }

  SUBCASE("meridian set becomes independent under self-gravity") {
    const std::vector<double> thetas = {0.0, kPi / 6.0, kPi / 3.0,
                                        kPi / 2.0};
    CHECK(rank_test(build_meridian_set(thetas, 0.0)).rank == 3);
    std::vector<DensityMatrix> image;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      image.push_back(
          bloch_to_density(sn_channel(BlochState(thetas[i], 0.0), cfg)));
      labels.push_back("sn" + std::to_string(i));
    }
    auto v = rank_test(StateSet(image, labels));
    CHECK(v.rank == 4);
  }
}
