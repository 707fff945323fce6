#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphonlab/cli.hpp"
#include "graphonlab/forcing.hpp"
#include "graphonlab/io.hpp"
#include "graphonlab/quadrature.hpp"
#include "graphonlab/sampling.hpp"
#include "graphonlab/vertexspace.hpp"

namespace py = pybind11;
using namespace graphonlab;

namespace {

EvalOptions make_options(const std::string& method, std::uint64_t budget, std::uint64_t seed, int grid, int threads) {
  EvalOptions opts;
  if (method == "mc") opts.method = Method::MonteCarlo;
  else if (method == "quad") opts.method = Method::Quadrature;
  else if (method == "exact-step") opts.method = Method::ExactStep;
  else opts.method = Method::Auto;
  opts.budget = budget;
  opts.seed = seed;
  opts.grid_log2 = grid;
  opts.threads = threads;
  return opts;
}

constexpr const char* kOptsDoc = "method one of auto|mc|quad|exact-step";

}  // namespace

PYBIND11_MODULE(_graphonlab, m) {
  m.doc() = "graph limit toolkit: graphon kernels, subgraph densities, constraint checks";

  // translators run newest-first, so the base class goes first
  py::register_exception<error>(m, "Error", PyExc_ValueError);
  py::register_exception<unsupported_error>(m, "UnsupportedError", PyExc_ValueError);
  py::register_exception<zero_mass_error>(m, "ZeroMassError", PyExc_ValueError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("value", &Estimate::value)
      .def_property_readonly("stderr", [](const Estimate& e) { return e.stderr_; })
      .def_readonly("budget", &Estimate::budget)
      .def_property_readonly("method", [](const Estimate& e) { return method_name(e.method); })
      .def("__repr__", [](const Estimate& e) {
        return "Estimate(" + format_double(e.value) + " +- " + format_double(e.stderr_) + ", " +
               method_name(e.method) + ")";
      });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("order"), py::arg("edges"))
      .def_static("empty", &Graph::empty)
      .def_static("complete", &Graph::complete)
      .def_static("path", &Graph::path)
      .def_static("cycle", &Graph::cycle)
      .def_static("single_edge", &Graph::single_edge)
      .def_static("triangle", &Graph::triangle)
      .def_static("cherry", &Graph::cherry)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<RootedGraph>(m, "RootedGraph")
      .def(py::init<Graph, std::vector<int>>(), py::arg("graph"), py::arg("roots"))
      .def_property_readonly("graph", &RootedGraph::graph)
      .def_property_readonly("roots", &RootedGraph::roots)
      .def("root_graph", &RootedGraph::root_graph);

  py::class_<PartitionSpec>(m, "PartitionSpec")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("sizes"), py::arg("degrees"))
      .def_readonly("sizes", &PartitionSpec::sizes)
      .def_readonly("degrees", &PartitionSpec::degrees)
      .def("part_of", &PartitionSpec::part_of);

  py::class_<DecoratedGraph>(m, "DecoratedGraph")
      .def(py::init<Graph, std::vector<int>>(), py::arg("graph"), py::arg("parts"))
      .def(py::init<Graph, std::vector<int>, std::vector<int>>(), py::arg("graph"), py::arg("roots"),
           py::arg("parts"))
      .def_property_readonly("graph", &DecoratedGraph::graph)
      .def_property_readonly("roots", &DecoratedGraph::roots)
      .def_property_readonly("parts", &DecoratedGraph::parts);

  m.def("automorphism_count", py::overload_cast<const Graph&>(&automorphism_count));
  m.def("rooted_automorphism_count", py::overload_cast<const RootedGraph&>(&automorphism_count));
  m.def("are_isomorphic", py::overload_cast<const Graph&, const Graph&>(&are_isomorphic));
  m.def("rooted_isomorphic", py::overload_cast<const RootedGraph&, const RootedGraph&>(&are_isomorphic));
  m.def("rooted_compatible", &rooted_compatible);
  m.def("induced_density_finite", [](const Graph& h, const Graph& g) {
    Rational r = induced_density_finite(h, g);
    return py::make_tuple(r.num, r.den);
  });

  py::class_<SectionFunction>(m, "SectionFunction")
      .def("__call__", [](const SectionFunction& f, double x) { return f(x); })
      .def_property_readonly("provenance", &SectionFunction::provenance);

  py::class_<MeasurePreservingMap>(m, "MeasurePreservingMap")
      .def("__call__", [](const MeasurePreservingMap& f, double x) { return f(x); })
      .def_static("identity", &MeasurePreservingMap::identity)
      .def_static("reflection", &MeasurePreservingMap::reflection)
      .def_static("block_rearrangement", &MeasurePreservingMap::block_rearrangement);

  py::class_<Graphon>(m, "Graphon")
      .def("__call__", [](const Graphon& w, double x, double y) { return w(x, y); })
      .def("describe", &Graphon::describe)
      .def("section", &Graphon::section)
      .def_property_readonly("partition", [](const Graphon& w) -> std::optional<PartitionSpec> {
        if (w.partition() == nullptr) return std::nullopt;
        return *w.partition();
      });

  m.def("constant_graphon", &constant_graphon);
  m.def("step_graphon", &step_graphon);
  m.def("half_graphon", &half_graphon);
  m.def("rademacher_graphon", &rademacher_graphon);
  m.def("norine_graphon", &norine_graphon);
  m.def("grid_graphon", &grid_graphon);
  m.def("apply_measure_preserving", &apply_measure_preserving);
  m.def("perturb_block", &perturb_block);
  m.def("load_graphon", &load_graphon);
  m.def("dyadic_index", &dyadic_index);

  m.def(
      "degree", [](const Graphon& w, double x, int grid) { return graphon_degree(w, x, grid); }, py::arg("graphon"),
      py::arg("x"), py::arg("grid") = 12);

  m.def(
      "graphon_density",
      [](const Graph& h, const Graphon& w, const std::string& method, std::uint64_t budget, std::uint64_t seed,
         int grid, int threads) { return graphon_density(h, w, make_options(method, budget, seed, grid, threads)); },
      py::arg("h"), py::arg("w"), py::arg("method") = "auto", py::arg("budget") = 1'000'000, py::arg("seed") = 0,
      py::arg("grid") = 10, py::arg("threads") = 1, kOptsDoc);

  m.def(
      "decorated_density",
      [](const DecoratedGraph& h, const Graphon& w, const std::string& method, std::uint64_t budget,
         std::uint64_t seed, int grid,
         int threads) { return decorated_density(h, w, make_options(method, budget, seed, grid, threads)); },
      py::arg("h"), py::arg("w"), py::arg("method") = "auto", py::arg("budget") = 1'000'000, py::arg("seed") = 0,
      py::arg("grid") = 10, py::arg("threads") = 1);

  m.def(
      "rooted_density",
      [](const RootedGraph& h, const Graphon& w, const std::vector<double>& roots, const std::string& method,
         std::uint64_t budget, std::uint64_t seed, int grid, int threads) {
        return rooted_density(h, w, roots, make_options(method, budget, seed, grid, threads));
      },
      py::arg("h"), py::arg("w"), py::arg("roots"), py::arg("method") = "auto", py::arg("budget") = 100'000,
      py::arg("seed") = 0, py::arg("grid") = 10, py::arg("threads") = 1);

  m.def(
      "root_measure_sample",
      [](const RootedGraph& h, const Graphon& w, std::uint64_t seed) {
        RngStream rng(seed);
        return root_measure_sample(h, w, rng);
      },
      py::arg("h"), py::arg("w"), py::arg("seed") = 0);

  m.def(
      "sample_w_random_graph",
      [](const Graphon& w, int order, std::uint64_t seed, int threads) {
        return sample_w_random_graph(w, order, seed, threads);
      },
      py::arg("w"), py::arg("order"), py::arg("seed") = 0, py::arg("threads") = 1);

  m.def(
      "empirical_density",
      [](const Graph& h, const Graph& g, const std::string& mode, std::uint64_t budget, std::uint64_t seed) {
        return empirical_density(h, g, mode == "exact" ? DensityMode::Exact : DensityMode::Sampled, budget, seed);
      },
      py::arg("h"), py::arg("g"), py::arg("mode") = "exact", py::arg("budget") = 100'000, py::arg("seed") = 0);

  m.def(
      "convergence_experiment",
      [](const Graphon& w, const Graph& h, const std::vector<int>& orders, std::uint64_t seed) {
        auto rows = convergence_experiment(w, h, orders, seed);
        py::list out;
        for (const auto& r : rows) out.append(py::make_tuple(r.order, r.estimate, r.stderr_, r.deviation));
        return out;
      },
      py::arg("w"), py::arg("h"), py::arg("orders"), py::arg("seed") = 0);

  m.def("witness_g", &witness_g);
  m.def("witness_g_i_delta", &witness_g_i_delta, py::arg("i"), py::arg("delta"));
  m.def("wr_witness_root_point", &wr_witness_root_point, py::arg("i"), py::arg("delta"));
  m.def("l1_distance", &l1_distance, py::arg("f"), py::arg("g"), py::arg("grid") = 12);
  m.def("check_separation", &check_separation, py::arg("i"), py::arg("delta"), py::arg("i_prime"),
        py::arg("delta_prime"), py::arg("grid") = 12);
  m.def("dw_distance", &dw_distance, py::arg("w"), py::arg("f"), py::arg("g"), py::arg("grid") = 9);

  m.def(
      "packing_diagnostic",
      [](double eps, int count, int grid) {
        PackingDiagnostic d = packing_diagnostic(eps, count, grid);
        py::list witnesses;
        for (const auto& wit : d.witnesses) witnesses.append(py::make_tuple(wit.index, wit.delta, wit.dist_to_g));
        py::dict out;
        out["eps"] = d.eps;
        out["certified"] = d.certified;
        out["max_dist_to_g"] = d.max_dist_to_g;
        out["min_pairwise"] = d.min_pairwise;
        out["witnesses"] = witnesses;
        return out;
      },
      py::arg("eps"), py::arg("count"), py::arg("grid") = 12);

  py::class_<Constraint>(m, "Constraint").def_readonly("name", &Constraint::name);

  m.def("wr_partition_spec", &wr_partition_spec);
  m.def("partition_constraints", &partition_constraints);
  m.def("pseudorandom_constraints", &pseudorandom_constraints, py::arg("l"), py::arg("lp"), py::arg("p"),
        py::arg("spec"));
  m.def("zero_constraints_wr", &zero_constraints_wr);

  m.def(
      "check_constraint",
      [](const Constraint& c, const Graphon& w, double tol, std::uint64_t budget, std::uint64_t seed, int grid,
         int threads) {
        CheckResult r = check_constraint(c, w, tol, make_options("auto", budget, seed, grid, threads));
        py::dict out;
        out["verdict"] = verdict_name(r.verdict);
        out["residual"] = r.residual;
        out["stderr"] = r.stderr_;
        out["lhs"] = r.lhs.value;
        out["rhs"] = r.rhs.value;
        return out;
      },
      py::arg("constraint"), py::arg("w"), py::arg("tol") = 1e-3, py::arg("budget") = 200'000, py::arg("seed") = 0,
      py::arg("grid") = 10, py::arg("threads") = 1);

  m.def(
      "verify_wr_identities",
      [](const Graphon& w, std::uint64_t budget, std::uint64_t seed, int grid, const std::string& filter) {
        WrReport report = verify_wr_identities(w, make_options("auto", budget, seed, grid, 1), filter);
        py::list rows;
        for (const auto& item : report.items) {
          rows.append(py::make_tuple(item.name, item.target, item.estimate.value, item.estimate.stderr_,
                                     std::string(verdict_name(item.verdict))));
        }
        return rows;
      },
      py::arg("w"), py::arg("budget") = 200'000, py::arg("seed") = 0, py::arg("grid") = 12,
      py::arg("filter") = "");

  m.def("run_cli", [](const std::vector<std::string>& args) { return run_cli(args); });

  m.attr("__version__") = "0.1.0";
}
