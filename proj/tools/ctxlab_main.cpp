#include "ctxlab/json_io.hpp"
#include "ctxlab/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

// Exit codes: 0 success (check-set: independent), 1 dependent set,
// 2 config/parse error, 3 numerical error.
constexpr int kExitOk = 0;
constexpr int kExitDependent = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ctxlab::ConfigError("cannot write '" + path + "'");
  out << content;
}

struct ToleranceFlags {
  ctxlab::Tolerances tol;

  void attach(CLI::App* cmd) {
    cmd->add_option("--eps-rank", tol.rank, "relative SVD rank cutoff");
    cmd->add_option("--eps-pure", tol.pure, "purity tolerance");
    cmd->add_option("--eps-model", tol.model, "model residual tolerance");
    cmd->add_option("--eps-lp", tol.lp, "LP feasibility tolerance");
    cmd->add_option("--eps-cert", tol.cert, "certificate residual tolerance");
    cmd->add_option("--eps-sn-conv", tol.sn_conv,
                    "SN grid-convergence tolerance (rad)");
  }
};

int cmd_run(const std::string& config_path, const std::string& report_path,
            const std::string& traj_path, std::uint64_t* seed_override,
            const ctxlab::Tolerances& tol) {
  ctxlab::Json raw;
  ctxlab::ScenarioConfig cfg;
  try {
    std::ifstream in(config_path);
    if (!in) throw ctxlab::ConfigError("cannot open '" + config_path + "'");
    try {
      in >> raw;
    } catch (const nlohmann::json::exception& e) {
      throw ctxlab::ConfigError("invalid JSON: " + std::string(e.what()));
    }
    cfg = ctxlab::parse_scenario_config(raw);
    if (seed_override) cfg.seed = *seed_override;
  } catch (const ctxlab::Error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    ctxlab::ScenarioReport report = ctxlab::run_scenario(cfg, tol);
    ctxlab::Json echo = raw;
    if (seed_override) echo["seed"] = *seed_override;
    write_file(report_path,
               ctxlab::scenario_report_to_json(report, echo).dump(2) + "\n");
    if (!traj_path.empty()) {
      write_file(traj_path, ctxlab::report_trajectory_csv(report));
    }
    return kExitOk;
  } catch (const ctxlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ctxlab::Error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

int cmd_check_set(const std::string& states_path,
                  const ctxlab::Tolerances& tol) {
  try {
    ctxlab::StateSet set = ctxlab::load_state_set(states_path);
    ctxlab::ContextualityVerdict v = ctxlab::rank_test(set, tol);
    std::cout << ctxlab::verdict_to_json(v).dump(2) << '\n';
    return v.verdict == ctxlab::Verdict::NONCONTEXTUAL_INDEPENDENT
               ? kExitOk
               : kExitDependent;
  } catch (const ctxlab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int cmd_sn_phase(const std::string& config_path, double alpha2,
                 const std::string& out_path, const ctxlab::Tolerances& tol) {
  ctxlab::SNConfig cfg;
  try {
    std::ifstream in(config_path);
    if (!in) throw ctxlab::ConfigError("cannot open '" + config_path + "'");
    ctxlab::Json raw;
    try {
      in >> raw;
    } catch (const nlohmann::json::exception& e) {
      throw ctxlab::ConfigError("invalid JSON: " + std::string(e.what()));
    }
    cfg = ctxlab::parse_sn_config(raw);
    if (alpha2 < 0.0 || alpha2 > 1.0) {
      throw ctxlab::ConfigError("alpha2 must lie in [0, 1]");
    }
  } catch (const ctxlab::Error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    ctxlab::SNPhaseResult r = ctxlab::sn_moment_evolution(cfg, alpha2, tol);
    write_file(out_path, ctxlab::sn_result_csv(r));
    return kExitOk;
  } catch (const ctxlab::Error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contextuality laboratory for nonlinear quantum dynamics"};
  app.require_subcommand(1);

  std::string config_path, report_path, traj_path, states_path, out_path;
  double alpha2 = 0.5;
  std::uint64_t seed = 0;
  bool seed_set = false;

  auto* run = app.add_subcommand("run", "run a scenario and write a report");
  run->add_option("config", config_path, "scenario config JSON")->required();
  run->add_option("-o,--report", report_path, "report JSON output path")
      ->required();
  run->add_option("--trajectory", traj_path, "Bloch trajectory CSV path");
  run->add_option("--seed", seed, "override the config seed")
      ->each([&](const std::string&) { seed_set = true; });
  ToleranceFlags run_tol;
  run_tol.attach(run);

  auto* check = app.add_subcommand("check-set",
                                   "contextuality verdict for a states file");
  check->add_option("states", states_path, "states JSON file")->required();
  ToleranceFlags check_tol;
  check_tol.attach(check);

  auto* sn = app.add_subcommand("sn-phase",
                                "integrate the SN channel phase time series");
  sn->add_option("config", config_path, "SN config JSON")->required();
  sn->add_option("--alpha2", alpha2, "up-branch weight |alpha|^2")->required();
  sn->add_option("-o,--out", out_path, "CSV output path")->required();
  ToleranceFlags sn_tol;
  sn_tol.attach(sn);

  auto* version = app.add_subcommand("version", "print the tool version");

  CLI11_PARSE(app, argc, argv);

  if (version->parsed()) {
    std::cout << "ctxlab " << ctxlab::tool_version()
#ifdef CTXLAB_GIT_HASH
              << " (" << CTXLAB_GIT_HASH << ")"
#endif
              << '\n';
    return kExitOk;
  }
  if (run->parsed()) {
    return cmd_run(config_path, report_path, traj_path,
                   seed_set ? &seed : nullptr, run_tol.tol);
  }
  if (check->parsed()) return cmd_check_set(states_path, check_tol.tol);
  if (sn->parsed()) return cmd_sn_phase(config_path, alpha2, out_path,
                                        sn_tol.tol);
  return kExitConfig;
}
