#include "ctxlab/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ctxlab {

namespace {
constexpr double kPi = std::numbers::pi;

std::string format_time(double t) {
  std::ostringstream os;
  os << t;
  return os.str();
}
}  // namespace

const char* tool_version() { return "0.1.0"; }

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::IDENTITY: return "IDENTITY";
    case MapKind::DEUTSCH: return "DEUTSCH";
    case MapKind::WEINBERG: return "WEINBERG";
    case MapKind::SN: return "SN";
    case MapKind::COUNTEREXAMPLE: return "COUNTEREXAMPLE";
  }
  return "IDENTITY";
}

MapKind map_kind_from_string(const std::string& s) {
  if (s == "IDENTITY") return MapKind::IDENTITY;
  if (s == "DEUTSCH") return MapKind::DEUTSCH;
  if (s == "WEINBERG") return MapKind::WEINBERG;
  if (s == "SN") return MapKind::SN;
  if (s == "COUNTEREXAMPLE") return MapKind::COUNTEREXAMPLE;
  throw ConfigError("unknown map_kind '" + s + "'");
}

void ScenarioConfig::validate() const {
  if (initial_bloch.empty() && initial_states.empty()) {
    throw ConfigError("scenario: no initial states");
  }
  if (pvm_samples < 1) throw ConfigError("scenario: pvm_samples must be >= 1");
  const bool evolving =
      map_kind == MapKind::WEINBERG || map_kind == MapKind::SN;
  if (evolving) {
    if (time_schedule.empty()) {
      throw ConfigError("scenario: time schedule required for evolving maps");
    }
    if (!std::is_sorted(time_schedule.begin(), time_schedule.end())) {
      throw ConfigError("scenario: time schedule must be non-decreasing");
    }
  }
  if (map_kind == MapKind::WEINBERG && !weinberg) {
    throw ConfigError("scenario: WEINBERG map needs a hamiltonian");
  }
  if (map_kind == MapKind::SN) {
    if (!sn) throw ConfigError("scenario: SN map needs an sn config");
    sn->validate();
    if (!initial_states.empty() && initial_states.front().dim() != 2) {
      throw ConfigError("scenario: SN map requires qubit states");
    }
  }
  const bool bloch_map = map_kind == MapKind::WEINBERG ||
                         map_kind == MapKind::SN ||
                         map_kind == MapKind::COUNTEREXAMPLE;
  if (bloch_map && initial_bloch.empty()) {
    for (const auto& s : initial_states) {
      if (s.dim() != 2) {
        throw ConfigError("scenario: this map requires qubit states");
      }
    }
  }
}

StateSet ScenarioConfig::build_initial_set() const {
  std::vector<DensityMatrix> states;
  if (!initial_bloch.empty()) {
    for (const auto& b : initial_bloch) states.push_back(bloch_to_density(b));
  } else {
    states = initial_states;
  }
  std::vector<std::string> out_labels = labels;
  if (out_labels.size() != states.size()) {
    out_labels.clear();
    for (std::size_t i = 0; i < states.size(); ++i) {
      out_labels.push_back("s" + std::to_string(i));
    }
  }
  return StateSet(std::move(states), std::move(out_labels));
}

namespace {

/// Verdict plus (when independent and pure) the dual-frame model check.
Checkpoint make_checkpoint(const StateSet& set, const std::string& tag,
                           double time, int pvm_samples, std::mt19937_64& rng,
                           const Tolerances& tol) {
  Checkpoint cp;
  cp.tag = tag;
  cp.time = time;
  cp.labels = set.labels();
  cp.verdict = rank_test(set, tol);
  if (set.dim() == 2) {
    for (const auto& s : set.states()) {
      if (s.purity() >= 1.0 - tol.pure) {
        cp.bloch.push_back(density_to_bloch(s, tol));
      } else {
        cp.bloch.clear();
        break;
      }
    }
  }
  if (cp.verdict.verdict == Verdict::NONCONTEXTUAL_INDEPENDENT) {
    if (!cp.verdict.warnings.empty()) {
      cp.model_skip_reason = "set has purity warnings";
    } else {
      DualFrame frame = dual_frame(set, tol);
      NoncontextualModel model = model_from_frame(set, frame, tol);
      std::vector<PVM> pvms;
      const Eigen::Index d = set.dim();
      for (int k = 0; k < pvm_samples; ++k) {
        pvms.push_back(random_pvm(d, static_cast<int>(d), rng, tol));
      }
      cp.model_max_deviation = verify_model(set, model, pvms, tol.model)
                                   .max_deviation;
    }
  }
  return cp;
}

StateSet map_set(const StateSet& set, const ScenarioConfig& cfg, double t,
                 const Tolerances& tol) {
  std::vector<DensityMatrix> mapped;
  switch (cfg.map_kind) {
    case MapKind::IDENTITY:
      return set;
    case MapKind::DEUTSCH:
      for (const auto& s : set.states()) mapped.push_back(deutsch_clone(s));
      break;
    case MapKind::WEINBERG:
      for (const auto& s : set.states()) {
        mapped.push_back(bloch_to_density(
            weinberg_evolve(density_to_bloch(s, tol), *cfg.weinberg, t)));
      }
      break;
    case MapKind::SN: {
      SNConfig truncated = *cfg.sn;
      if (t < truncated.time_grid.back()) {
        // Checkpoint inside the grid: cut the evolution at the nearest
        // grid point <= t.
        std::size_t keep = 1;
        while (keep < truncated.time_grid.size() &&
               truncated.time_grid[keep] <= t + 1e-12) {
          ++keep;
        }
        if (keep < 2) {
          throw ConfigError("scenario: SN checkpoint before the first step");
        }
        truncated.time_grid.resize(keep);
      }
      for (const auto& s : set.states()) {
        mapped.push_back(bloch_to_density(
            sn_channel(density_to_bloch(s, tol), truncated, tol)));
      }
      break;
    }
    case MapKind::COUNTEREXAMPLE:
      for (const auto& s : set.states()) {
        mapped.push_back(bloch_to_density(
            counterexample_map(density_to_bloch(s, tol), cfg.precision_bits)));
      }
      break;
  }
  return StateSet(std::move(mapped), set.labels());
}

}  // namespace

ScenarioReport run_scenario(const ScenarioConfig& cfg, const Tolerances& tol) {
  cfg.validate();
  ScenarioReport report;
  report.name = cfg.name;
  report.map_kind = cfg.map_kind;
  report.seed = cfg.seed;
  report.tool_version = tool_version();

  std::mt19937_64 rng(cfg.seed);
  StateSet initial = cfg.build_initial_set();

  const bool evolving =
      cfg.map_kind == MapKind::WEINBERG || cfg.map_kind == MapKind::SN;
  if (!evolving) {
    report.checkpoints.push_back(
        make_checkpoint(initial, "pre", 0.0, cfg.pvm_samples, rng, tol));
    if (cfg.map_kind != MapKind::IDENTITY) {
      StateSet image = map_set(initial, cfg, 0.0, tol);
      report.checkpoints.push_back(
          make_checkpoint(image, "post", 0.0, cfg.pvm_samples, rng, tol));
    } else {
      report.checkpoints.push_back(
          make_checkpoint(initial, "post", 0.0, cfg.pvm_samples, rng, tol));
    }
  } else {
    for (double t : cfg.time_schedule) {
      StateSet at_t = (t == 0.0) ? initial : map_set(initial, cfg, t, tol);
      Checkpoint cp = make_checkpoint(at_t, format_time(t), t,
                                      cfg.pvm_samples, rng, tol);
      if (cfg.map_kind == MapKind::WEINBERG && !cp.bloch.empty()) {
        std::vector<double> thetas;
        for (const auto& b : cp.bloch) thetas.push_back(b.theta);
        cp.resonance_guard_ok =
            resonance_guard(*cfg.weinberg, thetas, t, tol);
      }
      report.checkpoints.push_back(std::move(cp));
    }
  }

  bool seen_dependent = false;
  for (const auto& cp : report.checkpoints) {
    if (cp.verdict.verdict == Verdict::CONTEXTUAL_DEPENDENT) {
      seen_dependent = true;
    } else if (seen_dependent) {
      report.transition = true;
    }
  }
  return report;
}

StateSet build_meridian_set(const std::vector<double>& thetas, double phi) {
  if (thetas.empty()) throw EmptySet("build_meridian_set: no thetas");
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (std::size_t j = i + 1; j < thetas.size(); ++j) {
      if (std::abs(thetas[i] - thetas[j]) < 1e-12) {
        throw DuplicateTheta("build_meridian_set: duplicate theta");
      }
    }
  }
  std::vector<DensityMatrix> states;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    states.push_back(bloch_to_density(BlochState(thetas[i], phi)));
    labels.push_back("theta_" + std::to_string(i));
  }
  return StateSet(std::move(states), std::move(labels));
}

bool resonance_guard(const WeinbergHamiltonian& h,
                     const std::vector<double>& thetas, double t,
                     const Tolerances& tol) {
  std::vector<double> omegas;
  for (double th : thetas) {
    if (th > 1e-12 && th < kPi / 2.0 - 1e-12) {
      omegas.push_back(weinberg_omega(h, th));
    }
  }
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    for (std::size_t j = i + 1; j < omegas.size(); ++j) {
      double wrapped = std::fmod(std::abs(omegas[i] - omegas[j]) * t,
                                 2.0 * kPi);
      wrapped = std::min(wrapped, 2.0 * kPi - wrapped);
      if (wrapped < tol.res_guard) return false;
    }
  }
  return true;
}

}  // namespace ctxlab
