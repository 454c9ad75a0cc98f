#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ktsp/cli.hpp"
#include "ktsp/closed_forms.hpp"
#include "ktsp/errors.hpp"
#include "ktsp/families.hpp"
#include "ktsp/io.hpp"
#include "ktsp/metric.hpp"
#include "ktsp/steiner.hpp"
#include "ktsp/theorems.hpp"
#include "ktsp/tsp.hpp"

namespace py = pybind11;
using namespace ktsp;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::str(to_string(q)));
}

py::object integer(const BigInt& z) { return py::int_(py::str(z.str())); }

Rational to_rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

template <bool Directed>
BasicGraph<Directed> make_graph(int order, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                const std::optional<py::list>& weights) {
  std::vector<Edge> es;
  for (const auto& [u, v] : edges) es.push_back({u, v});
  if (!weights) return BasicGraph<Directed>(order, es);
  std::vector<Rational> ws;
  for (const py::handle& w : *weights) ws.push_back(to_rational(w));
  return BasicGraph<Directed>(order, es, ws);
}

template <bool Directed>
std::vector<std::pair<Vertex, Vertex>> edge_pairs(const BasicGraph<Directed>& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::object any_graph(AnyGraph g) {
  if (auto* u = std::get_if<Graph>(&g)) return py::cast(std::move(*u));
  return py::cast(std::move(std::get<Digraph>(g)));
}

py::dict estimate_dict(const TspEstimate& e) {
  py::dict d;
  d["estimate"] = fraction(e.estimate);
  d["variance_of_mean"] = fraction(e.variance_of_mean);
  d["standard_error"] = e.standard_error;
  d["samples"] = e.samples;
  d["seed"] = e.seed;
  return d;
}

py::dict verdict_dict(const TheoremVerdict& v) {
  py::dict d;
  d["theorem"] = v.theorem;
  d["instance"] = v.instance;
  d["k"] = v.k;
  d["holds"] = v.holds();
  d["equality"] = v.equality();
  d["agreement"] = v.agreement();
  py::list claims;
  for (const Claim& c : v.claims) {
    py::dict cd;
    cd["name"] = c.name;
    cd["relation"] = c.relation;
    cd["lhs"] = fraction(c.lhs);
    cd["rhs"] = fraction(c.rhs);
    cd["holds"] = c.holds;
    cd["equality"] = c.equality;
    cd["predicted_equality"] = c.predicted_equality ? py::cast(*c.predicted_equality) : py::none();
    cd["certificate"] = c.certificate;
    claims.append(cd);
  }
  d["claims"] = claims;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact k-TSP and Steiner distance invariants";

  // Translators run newest first, so derived errors register after the base.
  auto& error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph<false>), py::arg("order"), py::arg("edges"), py::arg("weights") = py::none())
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("weighted", &Graph::weighted)
      .def_property_readonly("edges", &edge_pairs<false>)
      .def("__repr__", [](const Graph& g) { return "<ktsp.Graph " + instance_descriptor(g) + ">"; });
  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_graph<true>), py::arg("order"), py::arg("arcs"), py::arg("weights") = py::none())
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("size", &Digraph::size)
      .def_property_readonly("weighted", &Digraph::weighted)
      .def_property_readonly("arcs", &edge_pairs<true>)
      .def("__repr__", [](const Digraph& d) { return "<ktsp.Digraph " + instance_descriptor(d) + ">"; });

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("encode_graph6", &encode_graph6, py::arg("graph"));
  m.def("family", [](const std::string& spec) {
    const FamilySpec f = FamilySpec::parse(spec);
    f.validate();
    return any_graph(make_family(f));
  }, py::arg("spec"), "Graph of a family spec such as 'cycle:7' or 'dp:20,6'.");

  m.def("wiener", [](const Graph& g) { return fraction(wiener(apsp(g))); });
  m.def("wiener", [](const Digraph& d) { return fraction(wiener(apsp(d))); });

  m.def("tsp_distance", [](const Graph& g, const std::vector<Vertex>& s) {
    const TspResult r = tsp_distance(apsp(g), VertexSet(s));
    return py::make_tuple(fraction(r.value), r.order);
  }, py::arg("graph"), py::arg("vertices"));
  m.def("tsp_distance", [](const Digraph& d, const std::vector<Vertex>& s) {
    const TspResult r = tsp_distance(apsp(d), VertexSet(s));
    return py::make_tuple(fraction(r.value), r.order);
  }, py::arg("graph"), py::arg("vertices"));
  m.def("steiner_distance", [](const Graph& g, const std::vector<Vertex>& s) {
    return fraction(steiner_distance(g, VertexSet(s)).value);
  }, py::arg("graph"), py::arg("vertices"));
  m.def("steiner_distance", [](const Digraph& d, const std::vector<Vertex>& s) {
    return fraction(steiner_distance_digraph(d, VertexSet(s)).value);
  }, py::arg("graph"), py::arg("vertices"));

  m.def("tsp_wiener", [](const Graph& g, int k, int threads) { return fraction(tsp_wiener(g, k, threads)); },
        py::arg("graph"), py::arg("k"), py::arg("threads") = 1);
  m.def("tsp_wiener", [](const Digraph& d, int k, int threads) { return fraction(tsp_wiener(d, k, threads)); },
        py::arg("graph"), py::arg("k"), py::arg("threads") = 1);
  m.def("tsp_mean", [](const Graph& g, int k, int threads) { return fraction(tsp_mean(g, k, threads)); },
        py::arg("graph"), py::arg("k"), py::arg("threads") = 1);
  m.def("tsp_mean", [](const Digraph& d, int k, int threads) { return fraction(tsp_mean(d, k, threads)); },
        py::arg("graph"), py::arg("k"), py::arg("threads") = 1);
  m.def("steiner_wiener", [](const Graph& g, int k, int threads) { return fraction(steiner_wiener(g, k, threads)); },
        py::arg("graph"), py::arg("k"), py::arg("threads") = 1);
  m.def("steiner_wiener", [](const Digraph& d, int k, int threads) { return fraction(steiner_wiener(d, k, threads)); },
        py::arg("graph"), py::arg("k"), py::arg("threads") = 1);
  m.def("tsp_eccentricity", [](const Graph& g, int k, int threads) {
    const EccentricityProfile p = tsp_eccentricity(g, k, threads);
    py::list ecc;
    for (const Rational& x : p.ecc) ecc.append(fraction(x));
    return py::make_tuple(ecc, fraction(p.radius), fraction(p.diameter));
  }, py::arg("graph"), py::arg("k"), py::arg("threads") = 1);
  m.def("tsp_mean_estimate", [](const Graph& g, int k, std::uint64_t samples, std::uint64_t seed, int threads) {
    return estimate_dict(tsp_mean_estimate(apsp(g), k, samples, seed, threads));
  }, py::arg("graph"), py::arg("k"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);

  m.def("wtspk_clique", [](int n, int k) { return integer(wtspk_clique(n, k)); });
  m.def("wtspk_star", [](int n, int k) { return integer(wtspk_star(n, k)); });
  m.def("wtspk_path", [](int n, int k) { return integer(wtspk_path(n, k)); });
  m.def("wtspk_cycle_exact", [](int n, int k) { return integer(wtspk_cycle_exact(n, k)); });
  m.def("mutspk_cycle_asymptotic", [](int k) { return fraction(mutspk_cycle_asymptotic(k)); });
  m.def("broom_integral", [](int k) { return fraction(broom_integral(k)); });

  m.def("check_tsp_le_2steiner", [](const Graph& g, int k) { return verdict_dict(check_tsp_le_2steiner(g, k)); });
  m.def("check_bounds", [](const Graph& g, int k) { return verdict_dict(check_bounds(g, k)); });
  m.def("check_perm_average_bound", [](const Graph& g, int k) { return verdict_dict(check_perm_average_bound(g, k)); });
  m.def("check_triple", [](const Graph& g) { return verdict_dict(verify_triple(GraphAnalysis(g, 3))); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one ktsp command line; returns (exit code, stdout, stderr).");
}
