#include "ktsp/scan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "aggregate.hpp"
#include "ktsp/closed_forms.hpp"
#include "ktsp/enumerate.hpp"
#include "ktsp/errors.hpp"
#include "ktsp/families.hpp"
#include "ktsp/io.hpp"
#include "ktsp/parallel.hpp"
#include "ktsp/random.hpp"
#include "ktsp/steiner.hpp"

namespace ktsp {

namespace {

constexpr std::size_t kGraphsPerChunk = 512;
constexpr std::size_t kMaxBundles = 16;

struct Extreme {
  std::optional<Rational> value;
  std::vector<Graph> graphs;

  void offer(const Rational& x, const Graph& g, bool lower) {
    if (!value || (lower ? x < *value : x > *value)) {
      value = x;
      graphs.clear();
    }
    if (x == *value) graphs.push_back(g);
  }
};

struct KPart {
  std::uint64_t graphs = 0;
  Extreme min, max;
  std::uint64_t tsp2steiner = 0, permavg = 0, lower = 0, upper = 0;
  std::uint64_t degree_meeting = 0, degree_violations = 0;
  std::optional<std::string> degree_example;
};

struct Part {
  std::vector<KPart> per_k;
  std::uint64_t graphs = 0, triple = 0, wtsp3 = 0, failures = 0, mismatches = 0;
  std::vector<TheoremVerdict> bundles;
};

int min_degree(const Graph& g) {
  int out = g.order();
  for (Vertex v = 0; v < g.order(); ++v) out = std::min(out, g.degree(v));
  return out;
}

void record(Part& p, const TheoremVerdict& v) {
  const bool failed = !v.holds();
  const bool mismatch = !v.agreement();
  p.failures += failed;
  p.mismatches += mismatch;
  if ((failed || mismatch) && p.bundles.size() < kMaxBundles) p.bundles.push_back(v);
}

std::vector<std::string> classes(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const Graph& g : graphs) {
    out.insert(g.order() <= 11 ? canonical_graph6(g) : encode_graph6(g));
  }
  return {out.begin(), out.end()};
}

}  // namespace

ScanReport exhaustive_scan(const ScanOptions& options) {
  std::vector<std::string> selected = options.theorems.empty() ? scan_theorems() : options.theorems;
  for (const std::string& id : selected) {
    if (std::find(scan_theorems().begin(), scan_theorems().end(), id) == scan_theorems().end()) {
      throw PreconditionError("theorem '" + id + "' is not part of the scan");
    }
  }
  auto runs = [&](const char* id) { return std::find(selected.begin(), selected.end(), id) != selected.end(); };

  ScanReport report;
  std::vector<std::uint64_t> masks;
  if (options.graphs) {
    report.source = "graph6 list";
    for (const Graph& g : *options.graphs) {
      if (g.weighted()) throw PreconditionError("scan graphs must be unweighted");
      if (!is_connected(g)) throw PreconditionError("scan graph " + encode_graph6(g) + " is not connected");
      report.order = std::max(report.order, g.order());
    }
  } else {
    if (options.order < 1 || options.order > ConnectedGraphStream::kMaxOrder) {
      throw ResourceError("internal enumeration supports orders 1..7; supply graph6 input for larger orders");
    }
    report.source = "enumeration";
    report.order = options.order;
    masks = connected_graph_masks(options.order);
  }
  const int k_min = std::max(2, options.k_min);
  const int k_max = options.k_max > 0 ? std::min(options.k_max, report.order) : report.order;
  if (k_min > k_max) throw PreconditionError("empty k range");
  const std::size_t total = options.graphs ? options.graphs->size() : masks.size();
  const std::size_t chunks = (total + kGraphsPerChunk - 1) / kGraphsPerChunk;
  const int ks = k_max - k_min + 1;
  std::vector<Part> parts(chunks);

  parallel_for_chunks(chunks, options.threads, [&](std::size_t c) {
    Part& p = parts[c];
    p.per_k.resize(ks);
    const std::size_t first = c * kGraphsPerChunk;
    const std::size_t last = std::min(total, first + kGraphsPerChunk);
    for (std::size_t i = first; i < last; ++i) {
      const Graph g = options.graphs ? (*options.graphs)[i] : graph_from_edge_mask(options.order, masks[i]);
      const int n = g.order();
      ++p.graphs;
      if (n < 2) continue;
      const GraphAnalysis a(g, std::min(n, k_max), 1);
      if (n >= 3 && runs("triple")) {
        const TheoremVerdict v = verify_triple(a);
        p.triple += v.equality();
        record(p, v);
      }
      if (n >= 3 && runs("wtsp3")) {
        record(p, check_wtsp3_identity(a));
        ++p.wtsp3;
      }
      const int delta = min_degree(g);
      for (int k = k_min; k <= std::min(k_max, n); ++k) {
        KPart& kp = p.per_k[k - k_min];
        ++kp.graphs;
        if (runs("tsp2steiner")) {
          const TheoremVerdict v = check_tsp_le_2steiner(a, k);
          kp.tsp2steiner += v.equality();
          record(p, v);
        }
        if (runs("permavg")) {
          const TheoremVerdict v = check_perm_average_bound(a, k);
          kp.permavg += v.equality();
          record(p, v);
        }
        Rational mean;
        if (runs("bounds")) {
          const TheoremVerdict v = check_bounds(a, k);
          mean = v.claims[0].lhs;
          kp.lower += v.claims[0].equality;
          kp.upper += v.claims[1].equality;
          record(p, v);
          if (k >= 3 && delta >= n + 2 - k) {
            ++kp.degree_meeting;
            if (!*v.claims[0].predicted_equality) {
              ++kp.degree_violations;
              if (!kp.degree_example) kp.degree_example = encode_graph6(g);
              if (k <= 4) {
                ++p.mismatches;
                if (p.bundles.size() < kMaxBundles) p.bundles.push_back(v);
              }
            }
          }
        } else {
          mean = a.tsp_mean(k);
        }
        kp.min.offer(mean, g, true);
        kp.max.offer(mean, g, false);
      }
    }
  });

  report.theorems = selected;
  std::vector<KPart> merged(ks);
  for (const Part& p : parts) {
    report.graphs += p.graphs;
    report.triple_equalities += p.triple;
    report.wtsp3_checked += p.wtsp3;
    report.failures += p.failures;
    report.mismatches += p.mismatches;
    for (const TheoremVerdict& v : p.bundles) {
      if (report.bundles.size() < kMaxBundles) report.bundles.push_back(v);
    }
    for (int i = 0; i < ks; ++i) {
      const KPart& src = p.per_k[i];
      KPart& dst = merged[i];
      dst.graphs += src.graphs;
      dst.tsp2steiner += src.tsp2steiner;
      dst.permavg += src.permavg;
      dst.lower += src.lower;
      dst.upper += src.upper;
      dst.degree_meeting += src.degree_meeting;
      dst.degree_violations += src.degree_violations;
      if (!dst.degree_example) dst.degree_example = src.degree_example;
      if (src.min.value) {
        for (const Graph& g : src.min.graphs) dst.min.offer(*src.min.value, g, true);
      }
      if (src.max.value) {
        for (const Graph& g : src.max.graphs) dst.max.offer(*src.max.value, g, false);
      }
    }
  }
  for (int i = 0; i < ks; ++i) {
    const KPart& kp = merged[i];
    if (kp.graphs == 0) continue;
    KScanSummary s;
    s.k = k_min + i;
    s.graphs = kp.graphs;
    s.min_mean = *kp.min.value;
    s.max_mean = *kp.max.value;
    s.argmin = classes(kp.min.graphs);
    s.argmax = classes(kp.max.graphs);
    s.argmin_labeled = kp.min.graphs.size();
    s.argmax_labeled = kp.max.graphs.size();
    s.tsp2steiner_equalities = kp.tsp2steiner;
    s.permavg_equalities = kp.permavg;
    s.lower_equalities = kp.lower;
    s.upper_equalities = kp.upper;
    report.per_k.push_back(std::move(s));
    if (runs("bounds") && s.k >= 3) {
      DegreeFinding f;
      f.k = k_min + i;
      f.graphs_meeting_degree = kp.degree_meeting;
      f.not_all_hamiltonian = kp.degree_violations;
      f.example = kp.degree_example;
      f.asserted = f.k <= 4;
      report.degree.push_back(std::move(f));
    }
  }
  return report;
}

DlwReport delavina_waller_experiment(const DlwOptions& options) {
  const int d = options.d;
  const int k = options.k;
  if (d < 6 || d % 6 != 0) throw PreconditionError("experiment requires d >= 6 divisible by 6");
  if (k < 4) throw PreconditionError("experiment requires k >= 4");
  const BroomTree broom = broom_tree(d);
  const Graph& tree = broom.graph;
  const int n = tree.order();
  detail::check_k_range(n, k, 4);
  const Graph against = options.against ? *options.against : cycle_graph(n);
  if (against.order() != n) throw PreconditionError("comparison graph must have order 2d+1");
  if (!is_connected(against)) throw PreconditionError("comparison graph not connected");

  DlwReport r;
  r.d = d;
  r.k = k;
  r.tree = "broom:" + std::to_string(d);
  r.against = options.against_name.empty() ? "cycle:" + std::to_string(n) : options.against_name;
  r.heuristic_coefficient = 2 * broom_integral(k);
  r.cycle_coefficient = 2 * mutspk_cycle_asymptotic(k);

  const bool against_is_cycle = against == cycle_graph(n);
  const bool within_budget = binomial_saturating(n, k) <= detail::kMaxSubsetEnumeration;
  if (within_budget) {
    // Trees: tsp_k = 2 d_k; spot-check that against Held-Karp.
    r.tree_mean = 2 * steiner_mean(tree, k, options.threads);
    const DistanceMatrix m = apsp(tree, options.threads);
    TspSolver tsp(m);
    TreeSteiner fast(tree);
    std::vector<Vertex> scratch;
    Rng rng(derive_seed(options.seed, 0));
    for (int i = 0; i < 2000; ++i) {
      const std::vector<Vertex> s = sample_subset(rng, n, k);
      if (tsp.length(s) != 2 * fast.length(s, scratch)) {
        throw std::logic_error("tree doubling identity violated on " + VertexSet(s).to_string());
      }
      ++r.doubling_checked;
    }
    r.against_mean = against_is_cycle ? Rational(wtspk_cycle_exact(n, k)) / Rational(binomial(n, k))
                                      : tsp_mean(against, k, options.threads);
  } else {
    r.tree_estimate = tsp_mean_estimate(apsp(tree, options.threads), k, options.samples, options.seed,
                                        options.threads);
    r.tree_mean = r.tree_estimate->estimate;
    r.exact = false;
    if (against_is_cycle) {
      r.against_mean = Rational(wtspk_cycle_exact(n, k)) / Rational(binomial(n, k));
    } else {
      r.against_estimate = tsp_mean_estimate(apsp(against, options.threads), k, options.samples, options.seed,
                                             options.threads);
      r.against_mean = r.against_estimate->estimate;
    }
  }
  r.tree_beats_against = r.tree_mean > r.against_mean;
  return r;
}

}  // namespace ktsp
