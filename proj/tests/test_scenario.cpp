#include "ctxlab/json_io.hpp"
#include "ctxlab/scenario.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ctxlab;

namespace {
constexpr double kPi = std::numbers::pi;

ScenarioConfig antipodes_deutsch() {
  ScenarioConfig cfg;
  cfg.name = "deutsch-antipodes";
  cfg.map_kind = MapKind::DEUTSCH;
  cfg.initial_bloch = {BlochState(0.0, 0.0), BlochState(kPi / 2.0, 0.0),
                       BlochState(kPi / 4.0, 0.0), BlochState(kPi / 4.0, kPi)};
  cfg.labels = {"0", "1", "+", "-"};
  cfg.pvm_samples = 10;
  cfg.seed = 11;
  return cfg;
}
}  // namespace

TEST_CASE("build_meridian_set") {
  auto pair = build_meridian_set({0.0, kPi / 2.0}, 0.0);
  CHECK(rank_test(pair).verdict == Verdict::NONCONTEXTUAL_INDEPENDENT);

  auto planar = build_meridian_set({0.0, kPi / 6.0, kPi / 3.0, kPi / 2.0},
                                   0.0);
  auto v = rank_test(planar);
  CHECK(v.rank == 3);
  CHECK(v.verdict == Verdict::CONTEXTUAL_DEPENDENT);

  auto triple = build_meridian_set({0.0, kPi / 4.0, kPi / 2.0}, 1.3);
  CHECK(rank_test(triple).verdict == Verdict::NONCONTEXTUAL_INDEPENDENT);

  CHECK_THROWS_AS(build_meridian_set({0.3, 0.3}, 0.0), DuplicateTheta);
  CHECK_THROWS_AS(build_meridian_set({}, 0.0), EmptySet);
}

TEST_CASE("resonance_guard") {
  WeinbergHamiltonian h({0.0, 0.0, 1.0});  // hbar(a) = a^2

  // t = 0: every difference wraps to zero.
  CHECK_FALSE(resonance_guard(h, {kPi / 6.0, kPi / 3.0}, 0.0));

  // omega difference = 2 (sin^2(pi/3) - sin^2(pi/6)) = 1; t = 1 is clear.
  CHECK(resonance_guard(h, {kPi / 6.0, kPi / 3.0}, 1.0));

  // Constructed resonance at t = 2 pi / (omega_1 - omega_2).
  const double dw = weinberg_omega(h, kPi / 3.0) - weinberg_omega(h, kPi / 6.0);
  CHECK(dw == doctest::Approx(1.0));
  CHECK_FALSE(resonance_guard(h, {kPi / 6.0, kPi / 3.0}, 2.0 * kPi / dw));
}

TEST_CASE("deutsch scenario shows the transition") {
  ScenarioReport r = run_scenario(antipodes_deutsch());
  REQUIRE(r.checkpoints.size() == 2);
  CHECK(r.checkpoints[0].verdict.rank == 3);
  CHECK(r.checkpoints[0].verdict.verdict == Verdict::CONTEXTUAL_DEPENDENT);
  CHECK(r.checkpoints[0].verdict.certificate.has_value());
  CHECK(r.checkpoints[1].verdict.rank == 4);
  CHECK(r.checkpoints[1].verdict.verdict ==
        Verdict::NONCONTEXTUAL_INDEPENDENT);
  CHECK(r.transition);
  // Independent checkpoint carries a verified model.
  REQUIRE(r.checkpoints[1].model_max_deviation.has_value());
  CHECK(*r.checkpoints[1].model_max_deviation <= 1e-8);
}

TEST_CASE("identity scenario never transitions") {
  ScenarioConfig cfg = antipodes_deutsch();
  cfg.name = "identity";
  cfg.map_kind = MapKind::IDENTITY;
  ScenarioReport r = run_scenario(cfg);
  CHECK(r.checkpoints[0].verdict.rank == r.checkpoints[1].verdict.rank);
  CHECK_FALSE(r.transition);
}

TEST_CASE("weinberg scenario on the meridian set") {
  ScenarioConfig cfg;
  cfg.name = "weinberg-meridian";
  cfg.map_kind = MapKind::WEINBERG;
  cfg.weinberg = WeinbergHamiltonian({0.0, 0.0, 1.0});
  cfg.initial_bloch = {BlochState(0.0, 0.0), BlochState(kPi / 6.0, 0.0),
                       BlochState(kPi / 3.0, 0.0), BlochState(kPi / 2.0, 0.0)};
  cfg.time_schedule = {0.0, 1.0};
  cfg.pvm_samples = 5;
  cfg.seed = 3;
  ScenarioReport r = run_scenario(cfg);
  REQUIRE(r.checkpoints.size() == 2);
  CHECK(r.checkpoints[0].verdict.rank == 3);
  CHECK(r.checkpoints[1].verdict.rank == 4);
  CHECK(r.checkpoints[1].resonance_guard_ok);
  CHECK(r.transition);

  // Cross-check: the t = 0 certificate no longer annihilates the evolved set.
  REQUIRE(r.checkpoints[0].verdict.certificate.has_value());
  const auto& alpha = *r.checkpoints[0].verdict.certificate;
  ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
  for (std::size_t i = 0; i < cfg.initial_bloch.size(); ++i) {
    sum += alpha(static_cast<Eigen::Index>(i)) *
           bloch_to_density(
               weinberg_evolve(cfg.initial_bloch[i], *cfg.weinberg, 1.0))
               .matrix();
  }
  CHECK(sum.cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("counterexample scenario keeps large sets contextual") {
  ScenarioConfig cfg = antipodes_deutsch();
  cfg.name = "counterexample";
  cfg.map_kind = MapKind::COUNTEREXAMPLE;
  ScenarioReport r = run_scenario(cfg);
  CHECK(r.checkpoints[0].verdict.verdict == Verdict::CONTEXTUAL_DEPENDENT);
  CHECK(r.checkpoints[1].verdict.verdict == Verdict::CONTEXTUAL_DEPENDENT);
  CHECK_FALSE(r.transition);
}

TEST_CASE("scenario reports are deterministic") {
  ScenarioConfig cfg = antipodes_deutsch();
  Json a = scenario_report_to_json(run_scenario(cfg), Json::object());
  Json b = scenario_report_to_json(run_scenario(cfg), Json::object());
  CHECK(a.dump() == b.dump());
}

TEST_CASE("config validation errors") {
  ScenarioConfig cfg;
  cfg.name = "bad";
  cfg.map_kind = MapKind::WEINBERG;
  cfg.initial_bloch = {BlochState(0.3, 0.0)};
  CHECK_THROWS_AS(run_scenario(cfg), ConfigError);  // no schedule

  cfg.time_schedule = {0.0, 1.0};
  CHECK_THROWS_AS(run_scenario(cfg), ConfigError);  // no hamiltonian

  ScenarioConfig sn_bad;
  sn_bad.name = "sn-qutrit";
  sn_bad.map_kind = MapKind::SN;
  sn_bad.initial_states = {
      DensityMatrix(ComplexMatrix::Identity(3, 3) / 3.0)};
  sn_bad.time_schedule = {1.0};
  CHECK_THROWS_AS(run_scenario(sn_bad), ConfigError);
}

TEST_CASE("state set JSON round trip") {
  Json j = Json::array();
  j.push_back({{"bloch", {{"theta", 0.0}, {"phi", 0.0}}}, {"label", "zero"}});
  j.push_back({{"matrix", Json::array({Json::array({Json::array({0.5, 0.0}),
                                                    Json::array({0.5, 0.0})}),
                                       Json::array({Json::array({0.5, 0.0}),
                                                    Json::array({0.5, 0.0})})})},
               {"label", "plus"}});
  StateSet set = parse_state_set(j);
  REQUIRE(set.size() == 2);
  CHECK(set.labels()[0] == "zero");
  CHECK(std::abs(set.states()[1].matrix()(0, 1).real() - 0.5) < 1e-15);

  CHECK_THROWS_AS(parse_state_set(Json::array()), ConfigError);
  CHECK_THROWS_AS(parse_state_set(Json::object()), ConfigError);
}

TEST_CASE("verdict serialization carries the contract fields") {
  auto set = build_meridian_set({0.0, kPi / 6.0, kPi / 3.0, kPi / 2.0}, 0.0);
  Json j = verdict_to_json(rank_test(set));
  CHECK(j.at("rank") == 3);
  CHECK(j.at("verdict") == "CONTEXTUAL_DEPENDENT");
  CHECK(j.at("certificate").is_array());
  CHECK(j.at("singular_values").size() == 4);
  CHECK(j.at("warnings").is_array());
}
