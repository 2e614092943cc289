#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "neurosa/bench.hpp"
#include "neurosa/graphgen.hpp"
#include "neurosa/gset.hpp"
#include "neurosa/oracle.hpp"
#include "neurosa/record.hpp"

namespace py = pybind11;
using namespace neurosa;

namespace {

IsingProblem make_problem(
    std::size_t dim, Domain domain,
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>& entries,
    const std::vector<double>& bias) {
  std::vector<MatrixEntry> es;
  es.reserve(entries.size());
  for (const auto& [i, j, w] : entries) es.push_back({i, j, w});
  return IsingProblem(dim, domain, es, bias);
}

WeightedGraph make_graph(
    std::uint32_t n,
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::int32_t>>&
        edges,
    const std::string& name) {
  std::vector<WeightedEdge> es;
  es.reserve(edges.size());
  for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
  return WeightedGraph::make(n, std::move(es), name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spiking ON-OFF Ising machine with Fowler-Nordheim annealing";

  py::enum_<Domain>(m, "Domain")
      .value("Spin", Domain::Spin)
      .value("Binary", Domain::Binary);

  py::enum_<ArbiterMode>(m, "ArbiterMode")
      .value("SelectThenTest", ArbiterMode::SelectThenTest)
      .value("TestThenSelect", ArbiterMode::TestThenSelect);

  py::enum_<ScheduleKind>(m, "ScheduleKind")
      .value("FnLog", ScheduleKind::FnLog)
      .value("InverseTime", ScheduleKind::InverseTime)
      .value("ExpDecay", ScheduleKind::ExpDecay)
      .value("Constant", ScheduleKind::Constant)
      .value("ColdRestart", ScheduleKind::ColdRestart);

  py::enum_<NoiseDist>(m, "NoiseDist")
      .value("Exponential", NoiseDist::Exponential)
      .value("Gaussian", NoiseDist::Gaussian)
      .value("Uniform", NoiseDist::Uniform);

  py::enum_<SpikeDirection>(m, "SpikeDirection")
      .value("On", SpikeDirection::On)
      .value("Off", SpikeDirection::Off);

  py::class_<QuantFormat>(m, "QuantFormat")
      .def_static("from_total_bits", &QuantFormat::from_total_bits)
      .def_readwrite("exponent_bits", &QuantFormat::exponent_bits)
      .def_readwrite("mantissa_bits", &QuantFormat::mantissa_bits)
      .def("min_normal", &QuantFormat::min_normal);
  m.def("quantize", &quantize);

  py::class_<AnnealSchedule>(m, "AnnealSchedule")
      .def(py::init<>())
      .def_readwrite("kind", &AnnealSchedule::kind)
      .def_readwrite("t0", &AnnealSchedule::t0)
      .def_readwrite("c", &AnnealSchedule::c)
      .def_readwrite("dt", &AnnealSchedule::dt)
      .def_readwrite("restart_at", &AnnealSchedule::restart_at)
      .def_readwrite("cold_t", &AnnealSchedule::cold_t)
      .def("temperature", &AnnealSchedule::temperature);
  m.def("fn_integrate", &fn_integrate, py::arg("schedule"), py::arg("n_steps"),
        py::arg("t_start") = -1.0);

  py::class_<NoiseConfig>(m, "NoiseConfig")
      .def(py::init<>())
      .def_readwrite("dist", &NoiseConfig::dist)
      .def_readwrite("b", &NoiseConfig::b)
      .def_readwrite("eps", &NoiseConfig::eps)
      .def_readwrite("target_mean", &NoiseConfig::target_mean)
      .def_readwrite("eta", &NoiseConfig::eta)
      .def_readwrite("quant", &NoiseConfig::quant);

  py::class_<IsingProblem>(m, "IsingProblem")
      .def(py::init(&make_problem), py::arg("dim"), py::arg("domain"),
           py::arg("entries"),
           py::arg("bias") = std::vector<double>{})
      .def_property_readonly("dim", &IsingProblem::dim)
      .def_property_readonly("domain", &IsingProblem::domain)
      .def("energy", &IsingProblem::energy)
      .def("delta_energy", &IsingProblem::delta_energy)
      .def("local_field", &IsingProblem::local_field);
  m.def("fold_bias", [](const IsingProblem& p) {
    auto folded = fold_bias(p);
    return std::make_pair(std::move(folded.problem), folded.offset);
  });

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
           py::arg("name") = "")
      .def_readonly("n", &WeightedGraph::n)
      .def_readonly("name", &WeightedGraph::name)
      .def_property_readonly("edges",
                             [](const WeightedGraph& g) {
                               std::vector<std::tuple<std::uint32_t,
                                                      std::uint32_t,
                                                      std::int32_t>>
                                   out;
                               for (const auto& e : g.edges) {
                                 out.emplace_back(e.u, e.v, e.w);
                               }
                               return out;
                             })
      .def("total_weight", &WeightedGraph::total_weight);

  m.def("parse_gset", &parse_gset_string, py::arg("text"), py::arg("name") = "");
  m.def("load_gset_file", &load_gset_file);
  m.def("write_gset", &write_gset_string);
  m.def("gen_random_graph", &gen_random_graph, py::arg("n"), py::arg("p"),
        py::arg("seed"), py::arg("signed_weights") = false,
        py::arg("name") = "");
  m.def("gen_toroidal_grid", &gen_toroidal_grid, py::arg("rows"),
        py::arg("cols"), py::arg("seed"), py::arg("signed_weights") = true,
        py::arg("name") = "");

  m.def("maxcut_encode", &maxcut_encode);
  m.def("maxcut_decode", [](const WeightedGraph& g, const StateVector& s) {
    const auto sol = maxcut_decode(g, s);
    return sol.cut_value;
  });
  m.def("mis_encode", &mis_encode, py::arg("graph"), py::arg("beta") = 0.75);
  m.def("mis_objective", &mis_objective);
  m.def(
      "mis_decode",
      [](const WeightedGraph& g, const StateVector& x, bool repair) {
        const auto sol = mis_decode(g, x, repair);
        return py::make_tuple(sol.size, sol.feasible, sol.members);
      },
      py::arg("graph"), py::arg("state"), py::arg("repair") = false);

  py::class_<SpikeEvent>(m, "SpikeEvent")
      .def_readonly("iteration", &SpikeEvent::iteration)
      .def_readonly("neuron", &SpikeEvent::neuron)
      .def_readonly("direction", &SpikeEvent::direction)
      .def_readonly("delta_h", &SpikeEvent::delta_h);

  py::class_<TraceSample>(m, "TraceSample")
      .def_readonly("iteration", &TraceSample::iteration)
      .def_readonly("best_energy", &TraceSample::best_energy)
      .def_readonly("current_energy", &TraceSample::current_energy)
      .def_readonly("threshold", &TraceSample::threshold);

  py::class_<GainEvent>(m, "GainEvent")
      .def_readonly("iteration", &GainEvent::iteration)
      .def_readonly("best_energy", &GainEvent::best_energy);

  py::class_<RunTrace>(m, "RunTrace")
      .def_readonly("dim", &RunTrace::dim)
      .def_readonly("iterations", &RunTrace::iterations)
      .def_readonly("initial_energy", &RunTrace::initial_energy)
      .def_readonly("final_energy", &RunTrace::final_energy)
      .def_readonly("best_energy", &RunTrace::best_energy)
      .def_readonly("best_iteration", &RunTrace::best_iteration)
      .def_readonly("best_state", &RunTrace::best_state)
      .def_readonly("final_state", &RunTrace::final_state)
      .def_readonly("spike_count", &RunTrace::spike_count)
      .def_readonly("spikes", &RunTrace::spikes)
      .def_readonly("samples", &RunTrace::samples)
      .def_readonly("improvements", &RunTrace::improvements)
      .def("__eq__",
           [](const RunTrace& a, const RunTrace& b) { return a == b; });

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("max_iter", &SolverConfig::max_iter)
      .def_readwrite("seed", &SolverConfig::seed)
      .def_readwrite("arbiter", &SolverConfig::arbiter)
      .def_readwrite("hardware_faithful", &SolverConfig::hardware_faithful)
      .def_readwrite("a", &SolverConfig::a)
      .def_readwrite("schedule", &SolverConfig::schedule)
      .def_readwrite("noise", &SolverConfig::noise)
      .def_readwrite("trace_every", &SolverConfig::trace_every)
      .def_readwrite("record_spikes", &SolverConfig::record_spikes);

  m.def(
      "run",
      [](const IsingProblem& p, const SolverConfig& c,
         const std::optional<StateVector>& initial) {
        return run(p, c, initial ? &*initial : nullptr);
      },
      py::arg("problem"), py::arg("config"),
      py::arg("initial") = std::optional<StateVector>{},
      py::call_guard<py::gil_scoped_release>());
  m.def("run_parallel", &run_parallel, py::arg("problem"), py::arg("config"),
        py::arg("replicas"), py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("reference_sa", &reference_sa, py::arg("problem"), py::arg("schedule"),
        py::arg("noise"), py::arg("seed"), py::arg("max_iter"),
        py::arg("record_spikes") = true, py::arg("trace_every") = 0,
        py::call_guard<py::gil_scoped_release>());

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("best_state", &OracleResult::best_state)
      .def_readonly("best_value", &OracleResult::best_value)
      .def_readonly("optima_count", &OracleResult::optima_count);
  m.def("brute_force", &brute_force,
        py::call_guard<py::gil_scoped_release>());
  m.def("max_independent_set_size", &max_independent_set_size);

  m.def("derive_seed", &derive_seed);
  m.def("state_to_bitstring", &state_to_bitstring);

  py::class_<PcaTrajectory>(m, "PcaTrajectory")
      .def_readonly("degenerate", &PcaTrajectory::degenerate)
      .def_readonly("windows", &PcaTrajectory::windows)
      .def_readonly("eigenvalues", &PcaTrajectory::eigenvalues)
      .def_readonly("total_variance", &PcaTrajectory::total_variance)
      .def_readonly("coords", &PcaTrajectory::coords)
      .def_readonly("loadings", &PcaTrajectory::loadings)
      .def("captured_fraction", &PcaTrajectory::captured_fraction);
  m.def("analyze_trace", &analyze_trace, py::arg("trace"), py::arg("window"),
        py::arg("overlap"), py::arg("components") = 3);

#ifdef NEUROSA_VERSION
  m.attr("__version__") = NEUROSA_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
