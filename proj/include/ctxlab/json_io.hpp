#ifndef CTXLAB_JSON_IO_HPP
#define CTXLAB_JSON_IO_HPP

#include "ctxlab/contextuality.hpp"
#include "ctxlab/scenario.hpp"
#include "ctxlab/sn.hpp"
#include "ctxlab/states.hpp"

#include <json.hpp>

#include <string>

namespace ctxlab {

using Json = nlohmann::ordered_json;

/// States file: JSON array of {"bloch": {"theta", "phi"}, "label"} or
/// {"matrix": [[[re, im], ...], ...], "label"} entries. Radians, row-major.
StateSet parse_state_set(const Json& j);
StateSet load_state_set(const std::string& path);

Json verdict_to_json(const ContextualityVerdict& v);
Json model_to_json(const NoncontextualModel& m);

SNConfig parse_sn_config(const Json& j);
Json sn_config_to_json(const SNConfig& cfg);

ScenarioConfig parse_scenario_config(const Json& j);
ScenarioConfig load_scenario_config(const std::string& path);
Json scenario_report_to_json(const ScenarioReport& r, const Json& config_echo);

/// Bloch trajectory CSV: `t,label,x,y,z` with
/// (x, y, z) = (sin 2 theta cos phi, -sin 2 theta sin phi, cos 2 theta).
std::string report_trajectory_csv(const ScenarioReport& r);

/// SN time-series CSV with one row per grid time.
std::string sn_result_csv(const SNPhaseResult& r);

}  // namespace ctxlab

#endif
