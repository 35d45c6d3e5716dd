#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mclab/coloring.hpp"
#include "mclab/config.hpp"
#include "mclab/errors.hpp"
#include "mclab/graph.hpp"
#include "mclab/graph_io.hpp"
#include "mclab/mc_bounds.hpp"
#include "mclab/sampler.hpp"
#include "mclab/sweep.hpp"
#include "mclab/threshold.hpp"

namespace py = pybind11;
using namespace mclab;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return edges;
}

std::vector<std::pair<Vertex, Vertex>> to_pairs(std::span<const Edge> edges) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::string> tag_names(const std::vector<Certificate>& certs) {
  std::vector<std::string> out;
  for (Certificate c : certs) out.emplace_back(to_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monochromatic connection colorings, bounds on mc(G), and "
            "G(n,p) threshold experiments.";

  auto base = py::register_exception<Error>(m, "McError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NotConnectedError>(m, "NotConnectedError", base.ptr());
  py::register_exception<TooLargeError>(m, "TooLargeError", base.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
  py::register_exception<UnsupportedSpecError>(m, "UnsupportedSpecError",
                                               base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n,
                       const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Graph(n, to_edges(edges));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{},
           "Canonical edges only (u < v, strictly increasing).")
      .def_static(
          "from_unordered",
          [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
            return Graph::from_unordered(n, to_edges(edges));
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges",
                             [](const Graph& g) { return to_pairs(g.edges()); })
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           })
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" +
               std::to_string(g.m()) + ")";
      })
      .def("to_edge_list", &to_edge_list)
      .def_static("from_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
      });

  m.def("complete_graph", &named::complete);
  m.def("empty_graph", &named::empty);
  m.def("path_graph", &named::path);
  m.def("cycle_graph", &named::cycle);
  m.def("star_graph", &named::star);
  m.def("petersen_graph", &named::petersen);

  m.def(
      "sample_gnp",
      [](std::size_t n, double p, std::uint64_t seed, std::uint64_t stream,
         const std::string& kernel) {
        const RngSeed s{seed, stream};
        if (kernel == "auto") return sample_gnp(n, p, s);
        if (kernel == "dense") return sample_gnp_dense(n, p, s);
        if (kernel == "sparse") return sample_gnp_sparse(n, p, s);
        throw DomainError("kernel must be auto, dense or sparse");
      },
      py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("stream") = 0,
      py::arg("kernel") = "auto", py::call_guard<py::gil_scoped_release>());

  m.def("is_connected", &is_connected);
  m.def("connected_components", &connected_components);
  m.def("min_degree", &min_degree);
  m.def("max_degree", &max_degree);
  m.def("spanning_tree",
        [](const Graph& g) { return to_pairs(spanning_tree(g)); });
  m.def("diameter", &diameter, "None means infinite (disconnected).");
  m.def("has_cut_vertex", &has_cut_vertex);
  m.def("is_triangle_free", &is_triangle_free);
  m.def("vertex_connectivity", &vertex_connectivity);
  m.def("complement", &complement);
  m.def("chromatic_number_small", &chromatic_number_small, py::arg("g"),
        py::arg("cap") = kDefaultChromaticCap);

  py::class_<EdgeColoring>(m, "EdgeColoring")
      .def_static(
          "from_labels",
          [](const std::vector<std::uint64_t>& labels) {
            return EdgeColoring::from_labels(
                std::span<const std::uint64_t>(labels));
          })
      .def_property_readonly("labels",
                             [](const EdgeColoring& c) {
                               auto l = c.labels();
                               return std::vector<Color>(l.begin(), l.end());
                             })
      .def_property_readonly("num_colors", &EdgeColoring::num_colors)
      .def("__len__", &EdgeColoring::size);

  m.def("spanning_tree_coloring", &spanning_tree_coloring);
  m.def("verify_mc_coloring", &verify_mc_coloring);
  m.def("find_uncovered_pair", &find_uncovered_pair);
  m.def("mc_lower_bound", &mc_lower_bound);
  m.def(
      "mc_upper_bound",
      [](const Graph& g, std::size_t chi_cap) {
        const UpperBound b = mc_upper_bound(g, chi_cap);
        return py::make_tuple(b.value, tag_names(b.achieved_by));
      },
      py::arg("g"), py::arg("chi_cap") = kDefaultChromaticCap,
      "Returns (value, [tags attaining it]).");
  m.def(
      "tree_bound_exactness",
      [](const Graph& g) -> py::object {
        auto cert = tree_bound_exactness(g);
        if (!cert) return py::none();
        std::string letters;
        for (ExactnessCondition c : cert->conditions) letters += condition_letter(c);
        return py::make_tuple(letters, cert->value);
      },
      "None, or (condition letters, m-n+2).");
  m.def(
      "exact_mc_small",
      [](const Graph& g, std::size_t edge_cap, bool prune) {
        return exact_mc_small(g, ExactOptions{edge_cap, prune});
      },
      py::arg("g"), py::arg("edge_cap") = kDefaultExactEdgeCap,
      py::arg("prune") = true, py::call_guard<py::gil_scoped_release>());

  py::class_<McBounds>(m, "McBounds")
      .def_readonly("lower", &McBounds::lower)
      .def_readonly("upper", &McBounds::upper)
      .def_readonly("exact", &McBounds::exact)
      .def_property_readonly(
          "certificates",
          [](const McBounds& b) { return tag_names(b.certificates); });
  m.def(
      "analyze",
      [](const Graph& g, std::size_t chi_cap, std::size_t exact_cap,
         bool request_exact) {
        return analyze(g, AnalyzeOptions{chi_cap, exact_cap, request_exact});
      },
      py::arg("g"), py::arg("chi_cap") = kDefaultChromaticCap,
      py::arg("exact_cap") = kDefaultExactEdgeCap,
      py::arg("request_exact") = false);

  py::class_<ThresholdSpec>(m, "ThresholdSpec")
      .def_static("constant", &ThresholdSpec::constant)
      .def_static("power", &ThresholdSpec::power)
      .def_static("n_log_n", &ThresholdSpec::n_log_n, py::arg("ell") = 1.0)
      .def_static(
          "custom",
          [](const std::map<std::uint64_t, double>& table,
             std::optional<std::string> regime, double ell) {
            std::optional<Regime> r;
            if (regime) r = parse_regime(*regime);
            return ThresholdSpec::custom(table, r, ell);
          },
          py::arg("table"), py::arg("regime") = py::none(),
          py::arg("ell") = 1.0)
      .def("with_regime",
           [](const ThresholdSpec& s, const std::string& regime, double ell) {
             return s.with_regime(parse_regime(regime), ell);
           },
           py::arg("regime"), py::arg("ell") = 1.0)
      .def_property_readonly(
          "family", [](const ThresholdSpec& s) { return std::string(to_string(s.family())); })
      .def_property_readonly(
          "regime", [](const ThresholdSpec& s) { return std::string(to_string(s.regime())); })
      .def_property_readonly("ell", &ThresholdSpec::ell)
      .def("f", &ThresholdSpec::f)
      .def("target", &ThresholdSpec::target)
      .def("upper_constant", &ThresholdSpec::upper_constant);

  m.def("threshold_p", &threshold_p);
  m.def("chernoff_lower_tail", &chernoff_lower_tail);
  m.def("chernoff_upper_tail", &chernoff_upper_tail);
  m.def("connectivity_prob_limit", &connectivity_prob_limit);

  py::class_<TrialOutcome>(m, "TrialOutcome")
      .def_readonly("connected", &TrialOutcome::connected)
      .def_readonly("m", &TrialOutcome::m)
      .def_readonly("delta", &TrialOutcome::delta)
      .def_property_readonly(
          "decision",
          [](const TrialOutcome& o) { return std::string(to_string(o.decision)); })
      .def_property_readonly(
          "source",
          [](const TrialOutcome& o) { return std::string(to_string(o.source)); });

  m.def(
      "decide_mc_at_least",
      [](const Graph& g, std::size_t f_value, bool allow_exact,
         std::size_t exact_cap) {
        return decide_mc_at_least(g, f_value,
                                  DecideOptions{allow_exact, exact_cap});
      },
      py::arg("g"), py::arg("f_value"), py::arg("allow_exact") = false,
      py::arg("exact_cap") = kDefaultExactEdgeCap);
  m.def(
      "run_trial",
      [](std::size_t n, double p, const ThresholdSpec& spec,
         std::uint64_t seed, std::uint64_t stream) {
        return run_trial(n, p, spec, RngSeed{seed, stream});
      },
      py::arg("n"), py::arg("p"), py::arg("spec"), py::arg("seed"),
      py::arg("stream") = 0);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("n", &SweepRow::n)
      .def_readonly("multiplier", &SweepRow::multiplier)
      .def_readonly("p", &SweepRow::p)
      .def_readonly("trials", &SweepRow::trials)
      .def_readonly("yes", &SweepRow::yes)
      .def_readonly("no", &SweepRow::no)
      .def_readonly("unknown", &SweepRow::unknown)
      .def_readonly("frac_yes", &SweepRow::frac_yes)
      .def_readonly("clamped", &SweepRow::clamped)
      .def_readonly("failed", &SweepRow::failed)
      .def_readonly("error", &SweepRow::error);

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("rows", &SweepReport::rows)
      .def("to_csv", [](const SweepReport& r) { return to_csv(r); });

  m.def(
      "sweep",
      [](const ThresholdSpec& spec, std::vector<std::size_t> n_list,
         std::vector<double> multipliers, std::size_t trials,
         std::uint64_t master_seed, std::size_t workers, bool allow_exact) {
        SweepConfig c;
        c.spec = spec;
        c.n_list = std::move(n_list);
        c.multipliers = std::move(multipliers);
        c.trials = trials;
        c.master_seed = master_seed;
        c.workers = workers;
        c.decide.allow_exact = allow_exact;
        return sweep(c);
      },
      py::arg("spec"), py::arg("n_list"), py::arg("multipliers"),
      py::arg("trials"), py::arg("master_seed"), py::arg("workers") = 1,
      py::arg("allow_exact") = false, py::call_guard<py::gil_scoped_release>());

  m.def(
      "estimate_transition",
      [](const ThresholdSpec& spec, std::size_t n, double lo, double hi,
         double tolerance, std::size_t trials, std::uint64_t master_seed,
         std::size_t workers) {
        TransitionOptions o;
        o.lo = lo;
        o.hi = hi;
        o.tolerance = tolerance;
        o.trials = trials;
        o.master_seed = master_seed;
        o.workers = workers;
        return estimate_transition(spec, n, o);
      },
      py::arg("spec"), py::arg("n"), py::arg("lo"), py::arg("hi"),
      py::arg("tolerance"), py::arg("trials"), py::arg("master_seed"),
      py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());

  m.def("parse_config", [](const std::string& text) {
    return to_config_text(parse_config(text));
  }, "Validates a sweep config and returns it in normalized form.");
}
