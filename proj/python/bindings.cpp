#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "pvc/bench.hpp"
#include "pvc/errors.hpp"
#include "pvc/exact.hpp"
#include "pvc/generators.hpp"
#include "pvc/greedy.hpp"
#include "pvc/instance.hpp"
#include "pvc/pvclp.hpp"
#include "pvc/rounding.hpp"

namespace py = pybind11;

namespace {

pvc::Instance make_instance(const std::vector<pvc::Cost>& costs,
                            const std::vector<std::tuple<int, int, pvc::Weight>>& edges,
                            const std::vector<std::pair<std::vector<int>, pvc::Weight>>& groups,
                            bool strict_partition) {
  std::vector<pvc::Edge> es;
  for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
  std::vector<pvc::Group> gs;
  for (const auto& [members, target] : groups) gs.push_back({members, target});
  return pvc::Instance(costs, std::move(es), std::move(gs),
                       pvc::ValidationOptions{.strict_partition = strict_partition});
}

pvc::SolveMode parse_mode(const std::string& mode) {
  if (mode == "direct") return pvc::SolveMode::kDirect;
  if (mode == "delta") return pvc::SolveMode::kDeltaSearch;
  throw py::value_error("mode must be 'direct' or 'delta'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Partition vertex cover solvers";

  py::register_exception<pvc::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<pvc::InvariantError>(m, "InvariantError", PyExc_ValueError);
  py::register_exception<pvc::SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<pvc::InfeasibleAfterRestartsError>(m, "InfeasibleAfterRestartsError",
                                                            PyExc_RuntimeError);

  py::class_<pvc::Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("costs"), py::arg("edges"), py::arg("groups"),
           py::arg("strict_partition") = false)
      .def_property_readonly("num_vertices", &pvc::Instance::num_vertices)
      .def_property_readonly("num_edges", &pvc::Instance::num_edges)
      .def_property_readonly("num_groups", &pvc::Instance::num_groups)
      .def_property_readonly("costs", &pvc::Instance::costs)
      .def_property_readonly("edges",
                             [](const pvc::Instance& inst) {
                               std::vector<std::tuple<int, int, pvc::Weight>> out;
                               for (const auto& e : inst.edges()) out.emplace_back(e.u, e.v, e.weight);
                               return out;
                             })
      .def_property_readonly("groups",
                             [](const pvc::Instance& inst) {
                               std::vector<std::pair<std::vector<int>, pvc::Weight>> out;
                               for (const auto& g : inst.groups()) out.emplace_back(g.edges, g.target);
                               return out;
                             })
      .def("serialize", &pvc::serialize_instance)
      .def("__eq__", [](const pvc::Instance& a, const pvc::Instance& b) { return a == b; })
      .def("__repr__", [](const pvc::Instance& inst) {
        return "<Instance n=" + std::to_string(inst.num_vertices()) +
               " m=" + std::to_string(inst.num_edges()) +
               " r=" + std::to_string(inst.num_groups()) + ">";
      });

  m.def("parse_instance",
        [](const std::string& text, bool strict) {
          return pvc::parse_instance(text, pvc::ValidationOptions{.strict_partition = strict});
        },
        py::arg("text"), py::arg("strict_partition") = false);
  m.def("serialize_instance", &pvc::serialize_instance);
  m.def("coverage", py::overload_cast<const pvc::Instance&, const pvc::VertexSet&>(&pvc::coverage));
  m.def("is_feasible",
        py::overload_cast<const pvc::Instance&, const pvc::VertexSet&>(&pvc::is_feasible));

  m.def("generate_star", &pvc::generate_star, py::arg("degree"));
  m.def("generate_random",
        [](int n, int m_edges, int r, std::uint64_t seed, pvc::Cost cost_min, pvc::Cost cost_max,
           pvc::Weight weight_min, pvc::Weight weight_max, double overlap, bool round_robin) {
          pvc::RandomInstanceConfig cfg;
          cfg.num_vertices = n;
          cfg.num_edges = m_edges;
          cfg.num_groups = r;
          cfg.cost_min = cost_min;
          cfg.cost_max = cost_max;
          cfg.weight_min = weight_min;
          cfg.weight_max = weight_max;
          cfg.overlap_probability = overlap;
          cfg.assignment = round_robin ? pvc::GroupAssignment::kRoundRobin
                                       : pvc::GroupAssignment::kRandom;
          return pvc::generate_random(cfg, seed);
        },
        py::arg("n"), py::arg("m"), py::arg("r"), py::arg("seed"), py::arg("cost_min") = 1,
        py::arg("cost_max") = 10, py::arg("weight_min") = 1, py::arg("weight_max") = 1,
        py::arg("overlap") = 0.0, py::arg("round_robin") = false);
  m.def("reduce_set_cover",
        [](int universe_size, std::vector<std::vector<int>> sets, std::vector<pvc::Cost> costs) {
          pvc::SetCoverInstance sc{universe_size, std::move(sets), std::move(costs)};
          for (auto& s : sc.sets) std::sort(s.begin(), s.end());
          return pvc::reduce_set_cover(sc);
        },
        py::arg("universe_size"), py::arg("sets"), py::arg("costs"));

  py::class_<pvc::FractionalSolution>(m, "FractionalSolution")
      .def_readonly("x", &pvc::FractionalSolution::x)
      .def_readonly("objective", &pvc::FractionalSolution::objective)
      .def_readonly("lp_solves", &pvc::FractionalSolution::lp_solves)
      .def_readonly("cuts", &pvc::FractionalSolution::cuts)
      .def_readonly("stalled", &pvc::FractionalSolution::stalled)
      .def_readonly("delta", &pvc::FractionalSolution::delta)
      .def_readonly("objective_trace", &pvc::FractionalSolution::objective_trace);

  m.def("solve_pvclp",
        [](const pvc::Instance& inst, const std::string& mode) {
          pvc::PvcLpOptions options;
          options.mode = parse_mode(mode);
          return pvc::solve_pvclp(inst, options);
        },
        py::arg("instance"), py::arg("mode") = "direct");
  m.def("solve_lp1", [](const pvc::Instance& inst) {
    const auto sol = pvc::solve_lp1(inst);
    return py::make_tuple(sol.objective, sol.x, sol.y);
  });
  m.def("separate_is_clean", [](const pvc::Instance& inst, const std::vector<double>& x) {
    return pvc::separate(inst, x).status == pvc::SeparationStatus::kClean;
  });

  py::class_<pvc::VertexSelection>(m, "VertexSelection")
      .def_readonly("chosen", &pvc::VertexSelection::chosen)
      .def_readonly("cost", &pvc::VertexSelection::cost)
      .def_readonly("covered", &pvc::VertexSelection::covered)
      .def_readonly("feasible", &pvc::VertexSelection::feasible);

  py::class_<pvc::SolveReport>(m, "SolveReport")
      .def_readonly("lp_value", &pvc::SolveReport::lp_value)
      .def_readonly("rounds", &pvc::SolveReport::rounds)
      .def_readonly("restarts", &pvc::SolveReport::restarts)
      .def_readonly("cost", &pvc::SolveReport::cost)
      .def_readonly("pruned_cost", &pvc::SolveReport::pruned_cost)
      .def_readonly("ratio", &pvc::SolveReport::ratio)
      .def_readonly("seed", &pvc::SolveReport::seed)
      .def("to_text", &pvc::SolveReport::to_text, py::arg("with_timing") = false);

  py::class_<pvc::RoundedSolution>(m, "RoundedSolution")
      .def_readonly("selection", &pvc::RoundedSolution::selection)
      .def_readonly("pruned", &pvc::RoundedSolution::pruned)
      .def_readonly("report", &pvc::RoundedSolution::report);

  m.def("solve_rounded",
        [](const pvc::Instance& inst, const pvc::FractionalSolution& fs, std::uint64_t seed,
           int rounds_constant, int max_restarts, bool prune) {
          pvc::RoundingConfig cfg;
          cfg.seed = seed;
          cfg.rounds_constant = rounds_constant;
          cfg.max_restarts = max_restarts;
          cfg.prune = prune;
          return pvc::solve_rounded(inst, fs, cfg);
        },
        py::arg("instance"), py::arg("fractional"), py::arg("seed") = 0,
        py::arg("rounds_constant") = 4, py::arg("max_restarts") = 8, py::arg("prune") = false);
  m.def("expected_round_cost", &pvc::expected_round_cost);
  m.def("min_beta_sum", &pvc::min_beta_sum);
  m.def("estimate_round_coverage",
        [](const pvc::Instance& inst, const std::vector<double>& x, int trials,
           std::uint64_t seed) {
          const auto est = pvc::estimate_round_coverage(inst, x, trials, pvc::Rng(seed));
          return py::make_tuple(est.frequency, est.radius);
        },
        py::arg("instance"), py::arg("x"), py::arg("trials"), py::arg("seed") = 0);

  py::class_<pvc::ExactResult>(m, "ExactResult")
      .def_readonly("optimum", &pvc::ExactResult::optimum)
      .def_readonly("chosen", &pvc::ExactResult::chosen)
      .def_readonly("nodes", &pvc::ExactResult::nodes);
  m.def("exact_solve", &pvc::exact_solve, py::arg("instance"), py::arg("vertex_limit") = 24);
  m.def("greedy_solve", &pvc::greedy_solve);

  m.def("gap_row", [](int degree) {
    const auto row = pvc::gap_row(degree);
    return py::make_tuple(row.lp1, row.pvclp, row.exact);
  });

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
