#include "ctxlab/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ctxlab {

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

ComplexMatrix parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError("matrix: expected a nonempty array of rows");
  }
  const auto rows = j.size();
  const auto cols = j.front().size();
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw ConfigError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = j[r][c];
      if (!e.is_array() || e.size() != 2) {
        throw ConfigError("matrix: entries must be [re, im] pairs");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          std::complex<double>(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

std::vector<double> parse_double_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + ": expected array");
  std::vector<double> out;
  for (const auto& e : j) out.push_back(e.get<double>());
  return out;
}

template <typename T>
T require(const Json& j, const char* key) {
  if (!j.contains(key)) {
    throw ConfigError("missing field '" + std::string(key) + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("field '" + std::string(key) + "' has the wrong type");
  }
}

}  // namespace

StateSet parse_state_set(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError("states: expected a nonempty JSON array");
  }
  std::vector<DensityMatrix> states;
  std::vector<std::string> labels;
  std::size_t idx = 0;
  for (const auto& entry : j) {
    std::string label = entry.contains("label")
                            ? entry.at("label").get<std::string>()
                            : "s" + std::to_string(idx);
    if (entry.contains("bloch")) {
      const auto& b = entry.at("bloch");
      states.push_back(bloch_to_density(
          BlochState(require<double>(b, "theta"), require<double>(b, "phi"))));
    } else if (entry.contains("matrix")) {
      states.emplace_back(parse_matrix(entry.at("matrix")));
    } else {
      throw ConfigError("state entry needs 'bloch' or 'matrix'");
    }
    labels.push_back(std::move(label));
    ++idx;
  }
  return StateSet(std::move(states), std::move(labels));
}

StateSet load_state_set(const std::string& path) {
  return parse_state_set(load_json(path));
}

Json verdict_to_json(const ContextualityVerdict& v) {
  Json j;
  j["rank"] = v.rank;
  j["singular_values"] = v.singular_values;
  j["verdict"] = to_string(v.verdict);
  if (v.certificate) {
    std::vector<double> cert(v.certificate->begin(), v.certificate->end());
    j["certificate"] = cert;
  } else {
    j["certificate"] = nullptr;
  }
  j["warnings"] = v.warnings;
  return j;
}

Json model_to_json(const NoncontextualModel& m) {
  Json j;
  Json sigma = Json::array();
  for (const auto& s : m.sigma) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < s.dim(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < s.dim(); ++c) {
        row.push_back({s.matrix()(r, c).real(), s.matrix()(r, c).imag()});
      }
      rows.push_back(row);
    }
    sigma.push_back(rows);
  }
  j["sigma"] = sigma;
  Json weights = Json::array();
  for (Eigen::Index i = 0; i < m.weights.rows(); ++i) {
    std::vector<double> row(m.weights.cols());
    for (Eigen::Index l = 0; l < m.weights.cols(); ++l) {
      row[static_cast<std::size_t>(l)] = m.weights(i, l);
    }
    weights.push_back(row);
  }
  j["weights"] = weights;
  return j;
}

SNConfig parse_sn_config(const Json& j) {
  SNConfig cfg;
  cfg.mass = require<double>(j, "mass");
  if (j.contains("hbar")) cfg.hbar = j.at("hbar").get<double>();
  if (j.contains("g_newton")) cfg.g_newton = j.at("g_newton").get<double>();
  cfg.reg_radius = require<double>(j, "reg_radius");
  cfg.a0 = require<double>(j, "a0");
  cfg.force_up = parse_double_list(j.at("force_up"), "force_up");
  cfg.force_down = parse_double_list(j.at("force_down"), "force_down");
  cfg.time_grid = parse_double_list(j.at("time_grid"), "time_grid");
  cfg.validate();
  return cfg;
}

Json sn_config_to_json(const SNConfig& cfg) {
  Json j;
  j["mass"] = cfg.mass;
  j["hbar"] = cfg.hbar;
  j["g_newton"] = cfg.g_newton;
  j["reg_radius"] = cfg.reg_radius;
  j["a0"] = cfg.a0;
  j["force_up"] = cfg.force_up;
  j["force_down"] = cfg.force_down;
  j["time_grid"] = cfg.time_grid;
  return j;
}

ScenarioConfig parse_scenario_config(const Json& j) {
  ScenarioConfig cfg;
  cfg.name = require<std::string>(j, "name");
  cfg.map_kind = map_kind_from_string(require<std::string>(j, "map_kind"));
  if (j.contains("initial_bloch")) {
    for (const auto& b : j.at("initial_bloch")) {
      cfg.initial_bloch.emplace_back(require<double>(b, "theta"),
                                     require<double>(b, "phi"));
    }
  } else if (j.contains("initial_states")) {
    StateSet set = parse_state_set(j.at("initial_states"));
    cfg.initial_states = set.states();
    cfg.labels = set.labels();
  } else {
    throw ConfigError("scenario needs 'initial_bloch' or 'initial_states'");
  }
  if (j.contains("labels")) {
    cfg.labels = j.at("labels").get<std::vector<std::string>>();
  }
  if (j.contains("weinberg")) {
    cfg.weinberg = WeinbergHamiltonian(
        parse_double_list(j.at("weinberg").at("coeffs"), "coeffs"));
  }
  if (j.contains("sn")) cfg.sn = parse_sn_config(j.at("sn"));
  if (j.contains("precision_bits")) {
    cfg.precision_bits = j.at("precision_bits").get<int>();
  }
  if (j.contains("time_schedule")) {
    cfg.time_schedule =
        parse_double_list(j.at("time_schedule"), "time_schedule");
  }
  if (j.contains("pvm_samples")) {
    cfg.pvm_samples = j.at("pvm_samples").get<int>();
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
  return parse_scenario_config(load_json(path));
}

Json scenario_report_to_json(const ScenarioReport& r, const Json& config_echo) {
  Json j;
  j["name"] = r.name;
  j["map_kind"] = to_string(r.map_kind);
  j["tool_version"] = r.tool_version;
  j["seed"] = r.seed;
  j["transition"] = r.transition;
  Json cps = Json::array();
  for (const auto& cp : r.checkpoints) {
    Json c;
    c["tag"] = cp.tag;
    c["time"] = cp.time;
    c["verdict"] = verdict_to_json(cp.verdict);
    if (cp.model_max_deviation) {
      c["model_max_deviation"] = *cp.model_max_deviation;
    } else {
      c["model_max_deviation"] = nullptr;
    }
    if (cp.model_skip_reason) {
      c["model_skip_reason"] = *cp.model_skip_reason;
    }
    if (!cp.bloch.empty()) {
      Json bl = Json::array();
      for (std::size_t i = 0; i < cp.bloch.size(); ++i) {
        Json b;
        b["label"] = cp.labels[i];
        b["theta"] = cp.bloch[i].theta;
        b["phi"] = cp.bloch[i].phi;
        bl.push_back(b);
      }
      c["bloch"] = bl;
    }
    c["resonance_guard_ok"] = cp.resonance_guard_ok;
    cps.push_back(c);
  }
  j["checkpoints"] = cps;
  j["config"] = config_echo;
  return j;
}

std::string report_trajectory_csv(const ScenarioReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "# (x,y,z) = (sin 2theta cos phi, -sin 2theta sin phi, cos 2theta)\n";
  os << "t,label,x,y,z\n";
  for (const auto& cp : r.checkpoints) {
    for (std::size_t i = 0; i < cp.bloch.size(); ++i) {
      const double th = cp.bloch[i].theta, ph = cp.bloch[i].phi;
      os << cp.time << ',' << cp.labels[i] << ','
         << std::sin(2 * th) * std::cos(ph) << ','
         << -std::sin(2 * th) * std::sin(ph) << ',' << std::cos(2 * th)
         << '\n';
    }
  }
  return os.str();
}

std::string sn_result_csv(const SNPhaseResult& r) {
  std::ostringstream os;
  os.precision(17);
  os << "t,phi_up,phi_down,z_up,z_down,A_up,A_down,B_up,B_down,f_up,f_down\n";
  for (std::size_t k = 0; k < r.time.size(); ++k) {
    os << r.time[k] << ',' << r.phi_up[k] << ',' << r.phi_down[k] << ','
       << r.z_up[k] << ',' << r.z_down[k] << ',' << r.a_up[k] << ','
       << r.a_down[k] << ',' << r.b_up[k] << ',' << r.b_down[k] << ','
       << r.f_up[k] << ',' << r.f_down[k] << '\n';
  }
  return os.str();
}

}  // namespace ctxlab
