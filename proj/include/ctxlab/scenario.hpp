#ifndef CTXLAB_SCENARIO_HPP
#define CTXLAB_SCENARIO_HPP

#include "ctxlab/contextuality.hpp"
#include "ctxlab/nonlinear.hpp"
#include "ctxlab/sn.hpp"
#include "ctxlab/states.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctxlab {

enum class MapKind { IDENTITY, DEUTSCH, WEINBERG, SN, COUNTEREXAMPLE };

std::string to_string(MapKind k);
MapKind map_kind_from_string(const std::string& s);

struct ScenarioConfig {
  std::string name;
  MapKind map_kind = MapKind::IDENTITY;
  std::vector<BlochState> initial_bloch;   // used when nonempty
  std::vector<DensityMatrix> initial_states;
  std::vector<std::string> labels;
  std::optional<WeinbergHamiltonian> weinberg;
  std::optional<SNConfig> sn;
  int precision_bits = 16;
  std::vector<double> time_schedule;  // WEINBERG / SN checkpoints
  int pvm_samples = 20;
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError
  StateSet build_initial_set() const;
};

struct Checkpoint {
  std::string tag;           // time as text, or "pre" / "post"
  double time = 0.0;
  ContextualityVerdict verdict;
  std::optional<double> model_max_deviation;  // when a model was built
  std::optional<std::string> model_skip_reason;
  std::vector<BlochState> bloch;  // per state, 2x2 pure sets only
  std::vector<std::string> labels;
  bool resonance_guard_ok = true;  // annotation for WEINBERG checkpoints
};

struct ScenarioReport {
  std::string name;
  MapKind map_kind = MapKind::IDENTITY;
  std::vector<Checkpoint> checkpoints;
  bool transition = false;  // CONTEXTUAL then later NONCONTEXTUAL
  std::uint64_t seed = 0;
  std::string tool_version;
};

ScenarioReport run_scenario(const ScenarioConfig& cfg,
                            const Tolerances& tol = default_tolerances());

/// Pure states at (theta_i, phi) on one meridian. Throws DuplicateTheta.
StateSet build_meridian_set(const std::vector<double>& thetas, double phi);

/// True iff every pair of non-pole thetas has (omega_i - omega_j) t staying
/// clear of 2 pi Z by at least tol.res_guard.
bool resonance_guard(const WeinbergHamiltonian& h,
                     const std::vector<double>& thetas, double t,
                     const Tolerances& tol = default_tolerances());

const char* tool_version();

}  // namespace ctxlab

#endif
