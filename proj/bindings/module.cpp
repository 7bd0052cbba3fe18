#include "ctxlab/contextuality.hpp"
#include "ctxlab/json_io.hpp"
#include "ctxlab/nonlinear.hpp"
#include "ctxlab/scenario.hpp"
#include "ctxlab/sn.hpp"
#include "ctxlab/states.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

namespace py = pybind11;
using namespace ctxlab;

namespace {

StateSet make_state_set(const std::vector<ComplexMatrix>& matrices,
                        std::vector<std::string> labels) {
  std::vector<DensityMatrix> states;
  for (const auto& m : matrices) states.emplace_back(m);
  if (labels.empty()) {
    for (std::size_t i = 0; i < states.size(); ++i) {
      labels.push_back("s" + std::to_string(i));
    }
  }
  return StateSet(std::move(states), std::move(labels));
}

}  // namespace

PYBIND11_MODULE(_ctxlab, m) {
  m.doc() = "contextuality laboratory for nonlinear quantum dynamics";

  py::register_exception<Error>(m, "CtxlabError");

  py::class_<BlochState>(m, "BlochState")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
      .def_readonly("theta", &BlochState::theta)
      .def_readonly("phi", &BlochState::phi)
      .def("__repr__", [](const BlochState& s) {
        return "BlochState(theta=" + std::to_string(s.theta) +
               ", phi=" + std::to_string(s.phi) + ")";
      });

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<ComplexMatrix>(), py::arg("matrix"))
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def("purity", &DensityMatrix::purity);

  py::class_<PVM>(m, "PVM")
      .def(py::init<std::vector<ComplexMatrix>>(), py::arg("projectors"))
      .def_property_readonly("projectors", &PVM::projectors);

  py::class_<StateSet>(m, "StateSet")
      .def(py::init(&make_state_set), py::arg("matrices"),
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("labels", &StateSet::labels)
      .def_property_readonly("states", &StateSet::states)
      .def("__len__", &StateSet::size);

  py::class_<ContextualityVerdict>(m, "ContextualityVerdict")
      .def_readonly("rank", &ContextualityVerdict::rank)
      .def_readonly("singular_values", &ContextualityVerdict::singular_values)
      .def_readonly("warnings", &ContextualityVerdict::warnings)
      .def_property_readonly("verdict",
                             [](const ContextualityVerdict& v) {
                               return to_string(v.verdict);
                             })
      .def_property_readonly("certificate",
                             [](const ContextualityVerdict& v) -> py::object {
                               if (!v.certificate) return py::none();
                               return py::cast(*v.certificate);
                             })
      .def_property_readonly("dependent", [](const ContextualityVerdict& v) {
        return v.verdict == Verdict::CONTEXTUAL_DEPENDENT;
      });

  py::class_<DualFrame>(m, "DualFrame")
      .def_readonly("operators", &DualFrame::operators);

  py::class_<NoncontextualModel>(m, "NoncontextualModel")
      .def_readonly("sigma", &NoncontextualModel::sigma)
      .def_readonly("weights", &NoncontextualModel::weights);

  py::class_<ModelVerification>(m, "ModelVerification")
      .def_readonly("max_deviation", &ModelVerification::max_deviation)
      .def_readonly("passed", &ModelVerification::pass);

  m.def("bloch_to_density", &bloch_to_density, py::arg("state"));
  m.def(
      "density_to_bloch",
      [](const DensityMatrix& rho) { return density_to_bloch(rho); },
      py::arg("rho"));
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def(
      "partial_trace",
      [](const DensityMatrix& rho, Eigen::Index da, Eigen::Index db,
         const std::string& keep) {
        return partial_trace(rho, da, db,
                             keep == "A" ? Subsystem::A : Subsystem::B);
      },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"),
      py::arg("keep") = "A");
  m.def(
      "vectorize_hermitian",
      [](const ComplexMatrix& mat) { return vectorize_hermitian(mat); },
      py::arg("matrix"));
  m.def(
      "random_pvm",
      [](Eigen::Index d, int n, std::uint64_t seed) {
        return random_pvm(d, n, seed);
      },
      py::arg("dim"), py::arg("n_outcomes"), py::arg("seed"));

  m.def(
      "rank_test", [](const StateSet& set) { return rank_test(set); },
      py::arg("states"));
  m.def(
      "dual_frame", [](const StateSet& set) { return dual_frame(set); },
      py::arg("states"));
  m.def(
      "model_from_frame",
      [](const StateSet& set, const DualFrame& frame) {
        return model_from_frame(set, frame);
      },
      py::arg("states"), py::arg("frame"));
  m.def("verify_model", &verify_model, py::arg("states"), py::arg("model"),
        py::arg("pvms"), py::arg("tol"));
  m.def(
      "lp_oracle",
      [](const StateSet& set,
         const std::vector<ComplexMatrix>& ansatz) -> py::object {
        std::vector<DensityMatrix> states;
        for (const auto& s : ansatz) states.emplace_back(s);
        auto res = lp_oracle(set, states);
        if (std::holds_alternative<LpInfeasible>(res)) return py::none();
        return py::cast(std::get<NoncontextualModel>(res));
      },
      py::arg("states"), py::arg("ansatz"),
      "Returns a NoncontextualModel, or None when infeasible w.r.t. the "
      "ansatz.");
  m.def(
      "default_ansatz",
      [](const StateSet& set) {
        std::vector<ComplexMatrix> out;
        for (const auto& s : default_ansatz(set)) out.push_back(s.matrix());
        return out;
      },
      py::arg("states"));

  m.def("deutsch_clone", &deutsch_clone, py::arg("rho"));

  py::class_<WeinbergHamiltonian>(m, "WeinbergHamiltonian")
      .def(py::init<std::vector<double>>(), py::arg("coeffs"))
      .def_readonly("coeffs", &WeinbergHamiltonian::coeffs)
      .def("is_nonlinear", &WeinbergHamiltonian::is_nonlinear);
  m.def("weinberg_omega", &weinberg_omega, py::arg("hamiltonian"),
        py::arg("theta"));
  m.def("weinberg_evolve", &weinberg_evolve, py::arg("state"),
        py::arg("hamiltonian"), py::arg("t"));

  py::class_<SNConfig>(m, "SNConfig")
      .def(py::init<>())
      .def_readwrite("mass", &SNConfig::mass)
      .def_readwrite("hbar", &SNConfig::hbar)
      .def_readwrite("g_newton", &SNConfig::g_newton)
      .def_readwrite("reg_radius", &SNConfig::reg_radius)
      .def_readwrite("a0", &SNConfig::a0)
      .def_readwrite("force_up", &SNConfig::force_up)
      .def_readwrite("force_down", &SNConfig::force_down)
      .def_readwrite("time_grid", &SNConfig::time_grid)
      .def("validate", &SNConfig::validate);

  py::class_<SNPhaseResult>(m, "SNPhaseResult")
      .def_readonly("time", &SNPhaseResult::time)
      .def_readonly("phi_up", &SNPhaseResult::phi_up)
      .def_readonly("phi_down", &SNPhaseResult::phi_down)
      .def_readonly("z_up", &SNPhaseResult::z_up)
      .def_readonly("z_down", &SNPhaseResult::z_down)
      .def_readonly("p_up", &SNPhaseResult::p_up)
      .def_readonly("p_down", &SNPhaseResult::p_down)
      .def_readonly("a_up", &SNPhaseResult::a_up)
      .def_readonly("a_down", &SNPhaseResult::a_down)
      .def_readonly("b_up", &SNPhaseResult::b_up)
      .def_readonly("b_down", &SNPhaseResult::b_down)
      .def_readonly("f_up", &SNPhaseResult::f_up)
      .def_readonly("f_down", &SNPhaseResult::f_down);

  m.def(
      "sn_moment_evolution",
      [](const SNConfig& cfg, double alpha2) {
        return sn_moment_evolution(cfg, alpha2);
      },
      py::arg("config"), py::arg("alpha2"));
  m.def(
      "sn_channel",
      [](const BlochState& s, const SNConfig& cfg) {
        return sn_channel(s, cfg);
      },
      py::arg("state"), py::arg("config"));

  m.def("counterexample_map", &counterexample_map, py::arg("state"),
        py::arg("precision_bits") = 16);

  m.def("build_meridian_set", &build_meridian_set, py::arg("thetas"),
        py::arg("phi"));
  m.def(
      "resonance_guard",
      [](const WeinbergHamiltonian& h, const std::vector<double>& thetas,
         double t) { return resonance_guard(h, thetas, t); },
      py::arg("hamiltonian"), py::arg("thetas"), py::arg("t"));

  m.def(
      "run_scenario_json",
      [](const std::string& config_json) {
        Json raw = Json::parse(config_json);
        ScenarioConfig cfg = parse_scenario_config(raw);
        return scenario_report_to_json(run_scenario(cfg), raw).dump(2);
      },
      py::arg("config_json"),
      "Run a scenario from a JSON config string; returns the report JSON.");

  m.attr("__version__") = tool_version();
}
