#include "ktsp/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ktsp/closed_forms.hpp"
#include "ktsp/errors.hpp"
#include "ktsp/families.hpp"
#include "ktsp/io.hpp"
#include "ktsp/metric.hpp"
#include "ktsp/parallel.hpp"
#include "ktsp/report.hpp"
#include "ktsp/scan.hpp"
#include "ktsp/steiner.hpp"
#include "ktsp/theorems.hpp"
#include "ktsp/tsp.hpp"

namespace ktsp::cli {

namespace {

using Clock = std::chrono::steady_clock;

/// Bad command line or unreadable input file; exit code 1 like parse errors.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SourceOptions {
  std::string family;
  std::string graph6;
  std::string input;
  std::string format = "auto";
  bool digraph = false;
};

struct CommonOptions {
  int threads = 0;
  bool csv = false;
  bool no_timing = false;
  std::vector<int> k;
  std::string k_range;
};

struct Loaded {
  AnyGraph graph = Graph(1, {});
  std::string descriptor;
  std::optional<FamilySpec> family;
};

void add_source(CLI::App* app, SourceOptions& s) {
  app->add_option("--family", s.family, "Named family, e.g. cycle:101, broom:48, dp:20,6");
  app->add_option("--graph6", s.graph6, "Inline graph6 or sparse6 string");
  app->add_option("--input", s.input, "Graph file (graph6 or edge list)");
  app->add_option("--format", s.format, "Input format: auto, graph6, edges")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));
  app->add_flag("--digraph", s.digraph, "Read the edge list as arcs");
}

void add_common(CLI::App* app, CommonOptions& c) {
  app->add_option("--threads", c.threads, "Worker threads (0: hardware concurrency)")->check(CLI::NonNegativeNumber);
  app->add_flag("--csv", c.csv, "CSV instead of JSON");
  app->add_flag("--no-timing", c.no_timing, "Omit the timing block");
  app->add_option("--k", c.k, "Set size(s), comma separated")->delimiter(',');
  app->add_option("--k-range", c.k_range, "Inclusive range a..b of set sizes");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string descriptor_of(const AnyGraph& g) {
  return std::visit([](const auto& x) { return instance_descriptor(x); }, g);
}

// Resolves "family:params" when the name is a known family, graph6 otherwise.
Loaded load_spec_or_graph6(const std::string& text) {
  Loaded l;
  const auto colon = text.find(':');
  if (colon != std::string::npos && colon > 0) {
    l.family = FamilySpec::parse(text);
    l.family->validate();
    l.graph = make_family(*l.family);
    l.descriptor = l.family->to_string();
    return l;
  }
  l.graph = parse_graph6(text);
  l.descriptor = descriptor_of(l.graph);
  return l;
}

Loaded load(const SourceOptions& s) {
  const int given = !s.family.empty() + !s.graph6.empty() + !s.input.empty();
  if (given != 1) throw UsageError("exactly one of --family, --graph6, --input is required");
  Loaded l;
  if (!s.family.empty()) {
    l.family = FamilySpec::parse(s.family);
    l.family->validate();
    l.graph = make_family(*l.family);
    l.descriptor = l.family->to_string();
  } else if (!s.graph6.empty()) {
    l.graph = parse_graph6(s.graph6);
    l.descriptor = descriptor_of(l.graph);
  } else {
    const GraphFormat format = s.format == "graph6" ? GraphFormat::Graph6
                               : s.format == "edges" ? GraphFormat::EdgeList
                                                     : GraphFormat::Auto;
    l.graph = read_graph(read_file(s.input), format, s.digraph);
    l.descriptor = descriptor_of(l.graph);
  }
  return l;
}

std::vector<int> k_values(const CommonOptions& c) {
  std::vector<int> out = c.k;
  if (!c.k_range.empty()) {
    const auto dots = c.k_range.find("..");
    if (dots == std::string::npos) throw UsageError("--k-range expects a..b");
    try {
      const int a = std::stoi(c.k_range.substr(0, dots));
      const int b = std::stoi(c.k_range.substr(dots + 2));
      for (int k = a; k <= b; ++k) out.push_back(k);
    } catch (const std::logic_error&) {
      throw UsageError("--k-range expects a..b");
    }
  }
  std::set<int> unique(out.begin(), out.end());
  return {unique.begin(), unique.end()};
}

void require_k(int k, int n) {
  if (k < 2 || k > n) {
    throw PreconditionError("k = " + std::to_string(k) + " outside [2, n = " + std::to_string(n) + "]");
  }
}

void require_connected(const AnyGraph& g) {
  if (const Graph* u = std::get_if<Graph>(&g)) {
    if (!is_connected(*u)) throw PreconditionError("graph not connected");
  } else if (!is_strongly_connected(std::get<Digraph>(g))) {
    throw PreconditionError("digraph not strongly connected");
  }
}

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

struct Timing {
  Json phases = Json::object();
  void add(const std::string& name, Clock::time_point t) { phases[name] = ms_since(t); }
};

void emit(std::ostream& out, const std::vector<std::string>& command, Json body, const CommonOptions& c,
          const Timing& timing) {
  if (!c.no_timing) {
    body["timing"] = Json{{"threads", resolve_threads(c.threads)}, {"phases_ms", timing.phases}};
  }
  out << report_document(command, body).dump(2) << "\n";
}

// Command echo without execution-only flags, so reports compare across
// thread counts.
std::vector<std::string> echo(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--threads") {
      ++i;
      continue;
    }
    if (args[i].rfind("--threads=", 0) == 0 || args[i] == "--no-timing") continue;
    out.push_back(args[i]);
  }
  return out;
}

// ---- compute ---------------------------------------------------------------

struct ComputeOptions {
  bool wtspk = false, mutspk = false, wk = false, muk = false, ecc = false, wiener = false, formula = false;
  bool estimate = false;
  std::string set;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
};

VertexSet parse_set(const std::string& text, int n) {
  std::vector<Vertex> members;
  std::stringstream ss(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument("trailing");
      members.push_back(static_cast<Vertex>(v));
    } catch (const std::logic_error&) {
      throw ParseError("invalid vertex '" + item + "' in --set", offset);
    }
    offset += item.size() + 1;
  }
  VertexSet s(members);
  s.validate(n);
  return s;
}

struct Row {
  std::string k, quantity;
  Rational value;
};

int cmd_compute(const std::vector<std::string>& args, const SourceOptions& src, const CommonOptions& c,
                ComputeOptions o, std::ostream& out) {
  Timing timing;
  auto t0 = Clock::now();
  const Loaded l = load(src);
  timing.add("load", t0);
  const bool directed = std::holds_alternative<Digraph>(l.graph);
  const int n = std::visit([](const auto& g) { return g.order(); }, l.graph);
  require_connected(l.graph);
  const std::vector<int> ks = k_values(c);
  const int threads = c.threads;
  if (!(o.wtspk || o.mutspk || o.wk || o.muk || o.ecc || o.wiener || o.formula || o.estimate) && o.set.empty()) {
    o.wtspk = o.mutspk = o.wk = o.muk = true;
  }
  const bool needs_k = o.wtspk || o.mutspk || o.wk || o.muk || o.ecc || o.formula || o.estimate;
  if (needs_k && ks.empty()) throw PreconditionError("--k or --k-range is required");
  for (int k : ks) require_k(k, n);

  std::vector<Row> rows;
  Json body;
  body["instance"] = Json{{"descriptor", l.descriptor}, {"order", n},
                          {"size", std::visit([](const auto& g) { return g.size(); }, l.graph)},
                          {"directed", directed},
                          {"weighted", std::visit([](const auto& g) { return g.weighted(); }, l.graph)}};
  t0 = Clock::now();
  const DistanceMatrix m = std::visit([&](const auto& g) { return apsp(g, threads); }, l.graph);
  timing.add("distances", t0);
  Json results = Json::object();
  if (o.wiener) {
    results["wiener"] = rational_json(wiener(m));
    results["mean_distance"] = rational_json(mean_distance(m));
    rows.push_back({"", "wiener", wiener(m)});
    rows.push_back({"", "mean_distance", mean_distance(m)});
  }
  if (!o.set.empty()) {
    const VertexSet s = parse_set(o.set, n);
    const std::string ks_text = std::to_string(s.size());
    Json js{{"members", set_json(s)}};
    if (s.size() >= 2) {
      const TspResult t = tsp_distance(m, s);
      js["tsp"] = Json{{"value", rational_json(t.value)}, {"order", t.order}};
      rows.push_back({ks_text, "tsp_set", t.value});
      SteinerResult st;
      Json witness = Json::array();
      if (directed) {
        const Digraph& d = std::get<Digraph>(l.graph);
        st = steiner_distance_digraph(d, s);
        for (std::size_t e : st.witness) witness.push_back({d.edges()[e].u, d.edges()[e].v});
      } else {
        const Graph& g = std::get<Graph>(l.graph);
        st = steiner_distance(g, s);
        for (std::size_t e : st.witness) witness.push_back({g.edges()[e].u, g.edges()[e].v});
      }
      js["steiner"] = Json{{"value", rational_json(st.value)}, {"witness", witness}};
      rows.push_back({ks_text, "steiner_set", st.value});
    }
    results["set"] = js;
  }
  Json per_k = Json::array();
  for (int k : ks) {
    Json block{{"k", k}};
    const std::string kt = std::to_string(k);
    if (o.wtspk || o.mutspk) {
      t0 = Clock::now();
      Rational w;
      std::string method = "enumeration";
      try {
        w = tsp_wiener(m, k, threads);
      } catch (const ResourceError&) {
        if (!l.family) throw;
        std::optional<FormulaValue> f;
        try {
          f = formula(*l.family, k);
        } catch (const PreconditionError&) {
        }
        if (!f || !f->exact) throw;
        w = *f->exact;
        method = "closed form";
      }
      timing.add("wtspk_k" + kt, t0);
      const Rational mean = w / Rational(binomial(n, k));
      if (o.wtspk) {
        block["wtspk"] = rational_json(w);
        rows.push_back({kt, "wtspk", w});
      }
      if (o.mutspk) {
        block["mutspk"] = rational_json(mean);
        rows.push_back({kt, "mutspk", mean});
      }
      block["wtspk_method"] = method;
    }
    if (o.wk || o.muk) {
      t0 = Clock::now();
      const Rational w = std::visit([&](const auto& g) { return steiner_wiener(g, k, threads); }, l.graph);
      timing.add("wk_k" + kt, t0);
      const Rational mean = w / Rational(binomial(n, k));
      if (o.wk) {
        block["wk"] = rational_json(w);
        rows.push_back({kt, "wk", w});
      }
      if (o.muk) {
        block["muk"] = rational_json(mean);
        rows.push_back({kt, "muk", mean});
      }
    }
    if (o.ecc) {
      t0 = Clock::now();
      const EccentricityProfile p = tsp_eccentricity(m, k, threads);
      block["ecc_tsp"] = eccentricity_json(p);
      for (std::size_t v = 0; v < p.ecc.size(); ++v) rows.push_back({kt, "ecc_tsp[" + std::to_string(v) + "]", p.ecc[v]});
      rows.push_back({kt, "rad_tsp", p.radius});
      rows.push_back({kt, "diam_tsp", p.diameter});
      if (!directed) {
        const EccentricityProfile q = steiner_eccentricity(std::get<Graph>(l.graph), k, threads);
        block["ecc_steiner"] = eccentricity_json(q);
        for (std::size_t v = 0; v < q.ecc.size(); ++v) {
          rows.push_back({kt, "ecc_steiner[" + std::to_string(v) + "]", q.ecc[v]});
        }
        rows.push_back({kt, "rad_steiner", q.radius});
        rows.push_back({kt, "diam_steiner", q.diameter});
      }
      timing.add("ecc_k" + kt, t0);
    }
    if (o.formula) {
      if (!l.family) throw PreconditionError("--formula requires --family");
      const FormulaValue f = formula(*l.family, k);
      block["formula"] = formula_json(f);
      if (f.exact) rows.push_back({kt, "formula_wtspk", *f.exact});
      if (f.asymptotic) rows.push_back({kt, "formula_coefficient_per_" + f.asymptotic_unit, *f.asymptotic});
    }
    if (o.estimate) {
      t0 = Clock::now();
      const TspEstimate e = tsp_mean_estimate(m, k, o.samples, o.seed, threads);
      timing.add("estimate_k" + kt, t0);
      block["estimate"] = estimate_json(e);
      rows.push_back({kt, "estimate", e.estimate});
      rows.push_back({kt, "estimate_variance_of_mean", e.variance_of_mean});
    }
    per_k.push_back(block);
  }
  if (!ks.empty()) results["per_k"] = per_k;
  body["results"] = results;
  if (c.csv) {
    out << csv_row({"instance", "k", "quantity", "value", "decimal"});
    for (const Row& r : rows) out << csv_row({l.descriptor, r.k, r.quantity, to_string(r.value), to_decimal(r.value, kDisplayDigits)});
  } else {
    emit(out, echo(args), body, c, timing);
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::vector<std::string> theorems;
  int scan = 0;
  std::string scan_file;
  std::string against;
  std::string subgraph;
  std::vector<int> j;
  int order = 0;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& all_theorem_ids() {
  static const std::vector<std::string> ids{"tsp2steiner", "triple", "bounds", "permavg", "wtsp3", "digraph",
                                            "subadd", "ecc", "treeecc", "spanmono", "dlw"};
  return ids;
}

std::vector<std::string> expand_theorems(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const std::string& id : raw) {
    if (id == "all") {
      out.push_back("all");
      continue;
    }
    if (std::find(all_theorem_ids().begin(), all_theorem_ids().end(), id) == all_theorem_ids().end()) {
      throw UsageError("unknown theorem '" + id + "'");
    }
    out.push_back(id);
  }
  if (out.empty()) throw UsageError("--theorem is required");
  return out;
}

void csv_verdicts(std::ostream& out, const std::vector<TheoremVerdict>& verdicts) {
  out << csv_row({"theorem", "instance", "k", "j", "claim", "relation", "lhs", "rhs", "holds", "equality",
                  "predicted_equality", "certificate"});
  for (const TheoremVerdict& v : verdicts) {
    for (const Claim& c : v.claims) {
      out << csv_row({v.theorem, v.instance, std::to_string(v.k), v.j ? std::to_string(*v.j) : "", c.name,
                      c.relation, to_string(c.lhs), to_string(c.rhs), c.holds ? "true" : "false",
                      c.equality ? "true" : "false",
                      c.predicted_equality ? (*c.predicted_equality ? "true" : "false") : "", c.certificate});
    }
  }
}

int cmd_verify(const std::vector<std::string>& args, const SourceOptions& src, const CommonOptions& c,
               const VerifyOptions& o, std::ostream& out) {
  Timing timing;
  const std::vector<std::string> ids = expand_theorems(o.theorems);
  const std::vector<int> ks = k_values(c);
  const int threads = c.threads;
  auto wants = [&](const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };

  if (o.scan > 0 || !o.scan_file.empty()) {
    ScanOptions so;
    so.threads = threads;
    if (!wants("all")) so.theorems = ids;
    if (!ks.empty()) {
      so.k_min = ks.front();
      so.k_max = ks.back();
    }
    if (!o.scan_file.empty()) {
      so.graphs = parse_graph6_lines(read_file(o.scan_file));
    } else {
      so.order = o.scan;
    }
    auto t0 = Clock::now();
    const ScanReport r = exhaustive_scan(so);
    timing.add("scan", t0);
    if (c.csv) {
      out << csv_row({"k", "graphs", "min_mutspk", "argmin", "max_mutspk", "argmax", "tsp2steiner_equalities",
                      "permavg_equalities", "lower_bound_equalities", "upper_bound_equalities"});
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const std::string& x : v) s += (s.empty() ? "" : " ") + x;
        return s;
      };
      for (const KScanSummary& s : r.per_k) {
        out << csv_row({std::to_string(s.k), std::to_string(s.graphs), to_string(s.min_mean), join(s.argmin),
                        to_string(s.max_mean), join(s.argmax), std::to_string(s.tsp2steiner_equalities),
                        std::to_string(s.permavg_equalities), std::to_string(s.lower_equalities),
                        std::to_string(s.upper_equalities)});
      }
    } else {
      emit(out, echo(args), Json{{"scan", scan_json(r)}}, c, timing);
    }
    return r.ok() ? kOk : kVerdictFailed;
  }

  std::vector<TheoremVerdict> verdicts;
  Json experiments = Json::array();
  const bool only_ecc = std::all_of(ids.begin(), ids.end(), [](const std::string& id) { return id == "ecc"; });
  const bool has_source = !src.family.empty() || !src.graph6.empty() || !src.input.empty();
  std::optional<Loaded> l;
  auto t0 = Clock::now();
  if (has_source || !only_ecc) {
    l = load(src);
    require_connected(l->graph);
  }
  timing.add("load", t0);
  const Graph* g = l ? std::get_if<Graph>(&l->graph) : nullptr;
  const Digraph* d = l ? std::get_if<Digraph>(&l->graph) : nullptr;
  const int n = g ? g->order() : d ? d->order() : o.order;
  auto need_k = [&](const std::string& id) {
    if (ks.empty()) throw PreconditionError("theorem '" + id + "' requires --k or --k-range");
  };
  auto need_graph = [&](const std::string& id) {
    if (!g) throw PreconditionError("theorem '" + id + "' requires an undirected graph");
  };

  std::vector<std::string> run = ids;
  if (wants("all")) {
    run.clear();
    if (g) {
      for (const char* id : {"tsp2steiner", "triple", "bounds", "permavg", "wtsp3", "subadd"}) run.push_back(id);
      if (is_tree(*g)) run.push_back("treeecc");
      if (g->weighted()) std::erase_if(run, [](const std::string& id) { return id == "bounds" || id == "triple"; });
    } else if (d) {
      run = {"digraph", "subadd"};
    }
  }

  std::optional<GraphAnalysis> analysis;
  auto graph_analysis = [&]() -> const GraphAnalysis& {
    if (!analysis) {
      const int max_k = ks.empty() ? 3 : std::max(3, ks.back());
      analysis.emplace(*g, max_k, threads);
    }
    return *analysis;
  };

  t0 = Clock::now();
  for (const std::string& id : run) {
    if (id == "triple") {
      need_graph(id);
      verdicts.push_back(verify_triple(graph_analysis()));
    } else if (id == "wtsp3") {
      need_graph(id);
      verdicts.push_back(check_wtsp3_identity(graph_analysis()));
    } else if (id == "tsp2steiner" || id == "bounds" || id == "permavg" || id == "treeecc") {
      need_graph(id);
      need_k(id);
      for (int k : ks) {
        require_k(k, n);
        if (id == "tsp2steiner") verdicts.push_back(check_tsp_le_2steiner(graph_analysis(), k));
        if (id == "bounds") verdicts.push_back(check_bounds(graph_analysis(), k));
        if (id == "permavg") verdicts.push_back(check_perm_average_bound(graph_analysis(), k));
        if (id == "treeecc") verdicts.push_back(check_tree_eccentricity(*g, k, threads));
      }
    } else if (id == "digraph") {
      if (!d) throw PreconditionError("theorem 'digraph' requires a digraph");
      need_k(id);
      for (int k : ks) {
        require_k(k, n);
        verdicts.push_back(check_digraph_tsp_ge_steiner(*d, k, threads));
      }
    } else if (id == "subadd") {
      need_k(id);
      for (int k : ks) {
        require_k(k, n);
        std::vector<int> js = o.j;
        if (js.empty()) {
          for (int j = 2; j + k - 1 <= n; ++j) js.push_back(j);
        }
        for (int j : js) {
          verdicts.push_back(g ? check_subadditivity(*g, j, k, threads) : check_subadditivity(*d, j, k, threads));
        }
      }
    } else if (id == "spanmono") {
      need_graph(id);
      need_k(id);
      if (o.subgraph.empty()) throw UsageError("theorem 'spanmono' requires --subgraph");
      const Loaded h = load_spec_or_graph6(o.subgraph);
      const Graph* hg = std::get_if<Graph>(&h.graph);
      if (!hg) throw PreconditionError("--subgraph must be undirected");
      for (int k : ks) {
        require_k(k, n);
        verdicts.push_back(check_spanning_monotonicity(*g, *hg, k, threads));
      }
    } else if (id == "ecc") {
      need_k(id);
      const int order = o.order > 0 ? o.order : n;
      for (int k : ks) verdicts.push_back(check_ecc_observations(order, k, threads));
    } else if (id == "dlw") {
      if (!l || !l->family || l->family->id != FamilyId::Broom) {
        throw PreconditionError("theorem 'dlw' requires --family broom:d");
      }
      DlwOptions dopt;
      dopt.d = l->family->params.at(0);
      dopt.threads = threads;
      dopt.samples = o.samples;
      dopt.seed = o.seed;
      if (!o.against.empty()) {
        const Loaded a = load_spec_or_graph6(o.against);
        const Graph* ag = std::get_if<Graph>(&a.graph);
        if (!ag) throw PreconditionError("--against must be undirected");
        dopt.against = *ag;
        dopt.against_name = a.descriptor;
      }
      for (int k : ks.empty() ? std::vector<int>{4} : ks) {
        dopt.k = k;
        const DlwReport r = delavina_waller_experiment(dopt);
        experiments.push_back(dlw_json(r));
        TheoremVerdict v;
        v.theorem = "dlw";
        v.instance = r.tree + " vs " + r.against;
        v.k = k;
        Claim claim;
        claim.name = "mu_tsp,k(T(d)) > mu_tsp,k(" + r.against + ")";
        claim.relation = ">";
        claim.lhs = r.tree_mean;
        claim.rhs = r.against_mean;
        claim.holds = r.tree_beats_against;
        claim.equality = r.tree_mean == r.against_mean;
        claim.certificate = r.exact ? "exact" : "sampled estimate (not exact)";
        v.claims.push_back(std::move(claim));
        verdicts.push_back(std::move(v));
      }
    }
  }
  timing.add("verify", t0);

  bool ok = true;
  Json vj = Json::array();
  Json repro = Json::array();
  for (const TheoremVerdict& v : verdicts) {
    vj.push_back(verdict_json(v));
    if (!v.holds() || !v.agreement()) {
      ok = false;
      repro.push_back(reproduction_json(v));
    }
  }
  if (c.csv) {
    csv_verdicts(out, verdicts);
  } else {
    Json body;
    if (l) body["instance"] = Json{{"descriptor", l->descriptor}, {"order", n}};
    body["verdicts"] = vj;
    if (!experiments.empty()) body["experiments"] = experiments;
    body["ok"] = ok;
    if (!ok) body["reproduction"] = repro;
    emit(out, echo(args), body, c, timing);
  }
  return ok ? kOk : kVerdictFailed;
}

// ---- estimate --------------------------------------------------------------

int cmd_estimate(const std::vector<std::string>& args, const SourceOptions& src, const CommonOptions& c,
                 std::uint64_t samples, std::uint64_t seed, std::ostream& out) {
  Timing timing;
  auto t0 = Clock::now();
  const Loaded l = load(src);
  require_connected(l.graph);
  const int n = std::visit([](const auto& g) { return g.order(); }, l.graph);
  const std::vector<int> ks = k_values(c);
  if (ks.empty()) throw PreconditionError("--k or --k-range is required");
  const DistanceMatrix m = std::visit([&](const auto& g) { return apsp(g, c.threads); }, l.graph);
  timing.add("load", t0);
  Json per_k = Json::array();
  std::vector<std::pair<int, TspEstimate>> all;
  for (int k : ks) {
    require_k(k, n);
    t0 = Clock::now();
    const TspEstimate e = tsp_mean_estimate(m, k, samples, seed, c.threads);
    timing.add("estimate_k" + std::to_string(k), t0);
    Json block{{"k", k}};
    const Json fields = estimate_json(e);
    for (const auto& [key, value] : fields.items()) block[key] = value;
    per_k.push_back(block);
    all.emplace_back(k, e);
  }
  if (c.csv) {
    out << csv_row({"instance", "k", "samples", "seed", "estimate", "decimal", "variance_of_mean", "standard_error"});
    for (const auto& [k, e] : all) {
      std::ostringstream se;
      se.precision(kDisplayDigits);
      se << e.standard_error;
      out << csv_row({l.descriptor, std::to_string(k), std::to_string(e.samples), std::to_string(e.seed),
                      to_string(e.estimate), to_decimal(e.estimate, kDisplayDigits), to_string(e.variance_of_mean),
                      se.str()});
    }
  } else {
    Json body;
    body["instance"] = Json{{"descriptor", l.descriptor}, {"order", n}};
    body["results"] = Json{{"per_k", per_k}};
    emit(out, echo(args), body, c, timing);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-TSP and Steiner distance invariants of graphs", "ktsp"};
  app.set_version_flag("--version", std::string(KTSP_VERSION));
  app.require_subcommand(1);

  SourceOptions src;
  CommonOptions common;
  ComputeOptions co;
  VerifyOptions vo;
  std::uint64_t est_samples = 10000;
  std::uint64_t est_seed = 1;

  CLI::App* compute = app.add_subcommand("compute", "Compute invariants of one graph");
  add_source(compute, src);
  add_common(compute, common);
  compute->add_flag("--wtspk", co.wtspk, "k-TSP-Wiener index");
  compute->add_flag("--mutspk", co.mutspk, "Average k-TSP distance");
  compute->add_flag("--wk", co.wk, "Steiner k-Wiener index");
  compute->add_flag("--muk", co.muk, "Average Steiner k-distance");
  compute->add_flag("--ecc", co.ecc, "Eccentricities, radius and diameter");
  compute->add_flag("--wiener", co.wiener, "Wiener index and mean distance");
  compute->add_flag("--formula", co.formula, "Closed form of the family");
  compute->add_flag("--estimate", co.estimate, "Sampled estimate of mu_tsp,k");
  compute->add_option("--set", co.set, "tsp_k and d_k of one vertex set, e.g. 0,3,5");
  compute->add_option("--samples", co.samples, "Samples for --estimate");
  compute->add_option("--seed", co.seed, "Seed for --estimate");

  CLI::App* verify = app.add_subcommand("verify", "Check theorems on a graph or an exhaustive scan");
  add_source(verify, src);
  add_common(verify, common);
  verify->add_option("--theorem", vo.theorems,
                     "tsp2steiner, triple, bounds, permavg, wtsp3, digraph, subadd, ecc, treeecc, spanmono, dlw, all")
      ->delimiter(',');
  verify->add_option("--scan", vo.scan, "Scan every connected graph of this order (<= 7)");
  verify->add_option("--scan-file", vo.scan_file, "Scan the graph6 graphs in this file");
  verify->add_option("--against", vo.against, "Comparison graph for dlw (family or graph6)");
  verify->add_option("--subgraph", vo.subgraph, "Spanning subgraph for spanmono (family or graph6)");
  verify->add_option("--j", vo.j, "j values for subadd")->delimiter(',');
  verify->add_option("--order", vo.order, "Order n for the ecc sweep");
  verify->add_option("--samples", vo.samples, "Sampler fallback size for dlw");
  verify->add_option("--seed", vo.seed, "Sampler seed for dlw");

  CLI::App* estimate = app.add_subcommand("estimate", "Sampled estimate of mu_tsp,k");
  add_source(estimate, src);
  add_common(estimate, common);
  estimate->add_option("--samples", est_samples, "Number of sampled sets")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", est_seed, "Base seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << KTSP_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (compute->parsed()) return cmd_compute(args, src, common, co, out);
    if (verify->parsed()) return cmd_verify(args, src, common, vo, out);
    return cmd_estimate(args, src, common, est_samples, est_seed, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const ResourceError& e) {
    err << "resource: " << e.what() << "\n";
    return kResourceError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace ktsp::cli
