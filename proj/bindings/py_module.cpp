// Python bindings for the AoI policy toolkit. Mirrors the C++ API closely;
// vectors map to lists and the report/config structs become simple classes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aoi/analysis.hpp"
#include "aoi/channel.hpp"
#include "aoi/errors.hpp"
#include "aoi/experiments.hpp"
#include "aoi/rng.hpp"
#include "aoi/simulator.hpp"
#include "aoi/solvers.hpp"
#include "aoi/topology.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Age-of-information transmission policies for spatial random access";
  m.attr("__version__") = aoi::kVersion;
  m.attr("HALF_E") = aoi::kHalfE;

  py::register_exception<aoi::ConvergenceError>(m, "ConvergenceError",
                                                PyExc_RuntimeError);
  py::register_exception<aoi::IoError>(m, "IoError", PyExc_OSError);

  py::class_<aoi::Topology>(m, "Topology")
      .def(py::init<std::vector<double>, double, double>(), py::arg("distances"),
           py::arg("beta") = 2.0, py::arg("theta") = 1.0)
      .def("__len__", &aoi::Topology::size)
      .def_property_readonly("distances", &aoi::Topology::distances)
      .def_property_readonly("beta", &aoi::Topology::beta)
      .def_property_readonly("theta", &aoi::Topology::theta)
      .def("interference_ratio", &aoi::Topology::interference_ratio,
           py::arg("i"), py::arg("j"));

  m.def("sample_uniform_disk", &aoi::sample_uniform_disk, py::arg("n"),
        py::arg("seed"), py::arg("beta") = 2.0, py::arg("theta") = 1.0,
        py::arg("stream") = 0);
  m.def("symmetric_topology", &aoi::symmetric_topology, py::arg("n"),
        py::arg("radius"), py::arg("beta") = 2.0, py::arg("theta") = 1.0);
  m.def("topology_from_json", &aoi::topology_from_json, py::arg("text"));
  m.def("topology_to_json", &aoi::topology_to_json, py::arg("topology"));
  m.def("load_topology", &aoi::load_topology, py::arg("path"));
  m.def("save_topology", &aoi::save_topology, py::arg("topology"),
        py::arg("path"));

  py::class_<aoi::Policy>(m, "Policy")
      .def(py::init([](std::vector<double> probs, std::string label) {
             return aoi::Policy{std::move(probs), std::move(label)};
           }),
           py::arg("probs"), py::arg("label") = std::string{})
      .def_readwrite("probs", &aoi::Policy::probs)
      .def_readwrite("label", &aoi::Policy::label);

  m.def("success_probability", &aoi::success_probability, py::arg("topology"),
        py::arg("policy"), py::arg("i"));
  m.def("success_probabilities", &aoi::success_probabilities,
        py::arg("topology"), py::arg("policy"));
  m.def(
      "expected_aoi",
      [](const aoi::Topology& topology, const aoi::Policy& policy) {
        return aoi::expected_aoi(topology, policy).values;
      },
      py::arg("topology"), py::arg("policy"));

  py::class_<aoi::SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("tol_fixed_point", &aoi::SolverConfig::tol_fixed_point)
      .def_readwrite("tol_outer", &aoi::SolverConfig::tol_outer)
      .def_readwrite("max_sweeps", &aoi::SolverConfig::max_sweeps)
      .def_readwrite("damping", &aoi::SolverConfig::damping)
      .def_readwrite("mm_step", &aoi::SolverConfig::mm_step);

  py::class_<aoi::SolverReport>(m, "SolverReport")
      .def_readonly("policy", &aoi::SolverReport::policy)
      .def_property_readonly(
          "aoi", [](const aoi::SolverReport& r) { return r.aoi.values; })
      .def_readonly("multipliers", &aoi::SolverReport::multipliers)
      .def_readonly("residual", &aoi::SolverReport::residual)
      .def_readonly("sweeps", &aoi::SolverReport::sweeps)
      .def_readonly("converged", &aoi::SolverReport::converged)
      .def_readonly("trace", &aoi::SolverReport::trace)
      .def("to_json", &aoi::report_to_json);

  m.def("pareto_point", &aoi::pareto_point, py::arg("topology"),
        py::arg("weights"), py::arg("config") = aoi::SolverConfig{});
  m.def("pareto_residual_function", &aoi::pareto_residual_function,
        py::arg("topology"), py::arg("weights"), py::arg("i"), py::arg("p_i"));
  m.def("pareto_coordinate", &aoi::pareto_coordinate, py::arg("topology"),
        py::arg("weights"), py::arg("i"));
  m.def("solve_ews", &aoi::solve_ews, py::arg("topology"), py::arg("alpha"),
        py::arg("config") = aoi::SolverConfig{});
  m.def("solve_mm", &aoi::solve_mm, py::arg("topology"),
        py::arg("config") = aoi::SolverConfig{});
  m.def("solve_pf", &aoi::solve_pf, py::arg("topology"),
        py::arg("config") = aoi::SolverConfig{});
  m.def("solve_ta", &aoi::solve_ta, py::arg("n"), py::arg("own_radius"));
  m.def("ta_policy", &aoi::ta_policy, py::arg("topology"));
  m.def("baseline_aloha", &aoi::baseline_aloha, py::arg("n"),
        py::arg("p_common") = -1.0);

  py::class_<aoi::SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("horizon", &aoi::SimConfig::horizon)
      .def_readwrite("replications", &aoi::SimConfig::replications)
      .def_readwrite("seed", &aoi::SimConfig::seed)
      .def_readwrite("record_paths", &aoi::SimConfig::record_paths);

  py::class_<aoi::SimResult>(m, "SimResult")
      .def_readonly("tau_hat", &aoi::SimResult::tau_hat)
      .def_readonly("aoi_hat", &aoi::SimResult::aoi_hat)
      .def_readonly("ci_tau", &aoi::SimResult::ci_tau)
      .def_readonly("ci_aoi", &aoi::SimResult::ci_aoi)
      .def_readonly("paths", &aoi::SimResult::paths);

  m.def("simulate", &aoi::run, py::arg("topology"), py::arg("policy"),
        py::arg("config") = aoi::SimConfig{},
        py::call_guard<py::gil_scoped_release>());

  py::class_<aoi::BoundReport>(m, "BoundReport")
      .def_readonly("lower", &aoi::BoundReport::lower)
      .def_readonly("mid", &aoi::BoundReport::mid)
      .def_readonly("finite_n_upper", &aoi::BoundReport::finite_n_upper)
      .def_readonly("upper", &aoi::BoundReport::upper)
      .def_readonly("lower_ok", &aoi::BoundReport::lower_ok)
      .def_readonly("order_ok", &aoi::BoundReport::order_ok)
      .def_readonly("upper_ok", &aoi::BoundReport::upper_ok)
      .def_readonly("satisfied", &aoi::BoundReport::satisfied);

  m.def("finite_n_upper_bound", &aoi::finite_n_upper_bound, py::arg("n"));
  m.def("check_bounds", &aoi::check_bounds, py::arg("topology"),
        py::arg("config") = aoi::SolverConfig{},
        py::call_guard<py::gil_scoped_release>());

  py::class_<aoi::ConvexityReport>(m, "ConvexityReport")
      .def_readonly("trials", &aoi::ConvexityReport::trials)
      .def_readonly("violations", &aoi::ConvexityReport::violations)
      .def("passed", &aoi::ConvexityReport::passed);

  m.def("convexity_probe", &aoi::convexity_probe, py::arg("topology"),
        py::arg("trials"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<aoi::BoundaryPoint>(m, "BoundaryPoint")
      .def_readonly("weights", &aoi::BoundaryPoint::weights)
      .def_readonly("policy", &aoi::BoundaryPoint::policy)
      .def_property_readonly(
          "aoi", [](const aoi::BoundaryPoint& p) { return p.aoi.values; })
      .def_readonly("converged", &aoi::BoundaryPoint::converged);

  m.def("trace_pareto_boundary", &aoi::trace_pareto_boundary,
        py::arg("topology"), py::arg("weight_grid"),
        py::arg("config") = aoi::SolverConfig{});

  py::class_<aoi::ZpfMoments>(m, "ZpfMoments")
      .def_readonly("mu", &aoi::ZpfMoments::mu)
      .def_readonly("sigma_sq", &aoi::ZpfMoments::sigma_sq);

  m.def("zpf_statistics", &aoi::zpf_statistics, py::arg("r"));

  py::class_<aoi::ZpfSample>(m, "ZpfSample")
      .def_readonly("r_probe", &aoi::ZpfSample::r_probe)
      .def_readonly("n", &aoi::ZpfSample::n)
      .def_readonly("z_values", &aoi::ZpfSample::z_values)
      .def_readonly("clamped", &aoi::ZpfSample::clamped)
      .def_readonly("failures", &aoi::ZpfSample::failures)
      .def("mean", &aoi::ZpfSample::mean)
      .def("variance", &aoi::ZpfSample::variance);

  m.def("sample_zpf", &aoi::sample_zpf, py::arg("n"), py::arg("r_probe"),
        py::arg("samples"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<aoi::TaConvergenceRow>(m, "TaConvergenceRow")
      .def_readonly("n", &aoi::TaConvergenceRow::n)
      .def_readonly("samples", &aoi::TaConvergenceRow::samples)
      .def_readonly("median_abs_dev", &aoi::TaConvergenceRow::median_abs_dev)
      .def_readonly("p95_abs_dev", &aoi::TaConvergenceRow::p95_abs_dev)
      .def_readonly("mean_z", &aoi::TaConvergenceRow::mean_z)
      .def_readonly("var_z", &aoi::TaConvergenceRow::var_z)
      .def_readonly("clamped", &aoi::TaConvergenceRow::clamped)
      .def_readonly("failures", &aoi::TaConvergenceRow::failures);

  py::class_<aoi::TaConvergenceReport>(m, "TaConvergenceReport")
      .def_readonly("probe_radius", &aoi::TaConvergenceReport::probe_radius)
      .def_readonly("rows", &aoi::TaConvergenceReport::rows)
      .def_readonly("slope", &aoi::TaConvergenceReport::slope);

  m.def("ta_convergence_experiment", &aoi::ta_convergence_experiment,
        py::arg("sizes"), py::arg("samples"), py::arg("seed"),
        py::arg("probe_radius") = 1.0,
        py::call_guard<py::gil_scoped_release>());

  py::class_<aoi::ExperimentSpec>(m, "ExperimentSpec")
      .def(py::init<>())
      .def_readwrite("command", &aoi::ExperimentSpec::command)
      .def_readwrite("policy_kind", &aoi::ExperimentSpec::policy_kind)
      .def_readwrite("output_dir", &aoi::ExperimentSpec::output_dir)
      .def_readwrite("seed", &aoi::ExperimentSpec::seed)
      .def_readwrite("threads", &aoi::ExperimentSpec::threads)
      .def_readwrite("sizes", &aoi::ExperimentSpec::sizes)
      .def_readwrite("samples", &aoi::ExperimentSpec::samples)
      .def_readwrite("buckets", &aoi::ExperimentSpec::buckets)
      .def_readwrite("aloha_p", &aoi::ExperimentSpec::aloha_p)
      .def_readwrite("weights", &aoi::ExperimentSpec::weights);

  m.def("spec_from_json", &aoi::spec_from_json, py::arg("text"));
  m.def("spec_to_json", &aoi::spec_to_json, py::arg("spec"));
  m.def("run_experiment", &aoi::run_experiment, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());
}
