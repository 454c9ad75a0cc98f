#pragma once

#include <cstdint>
#include <vector>

#include "ktsp/graph.hpp"
#include "ktsp/metric.hpp"
#include "ktsp/rational.hpp"

namespace ktsp {

/// `witness` lists edge (or arc) indices into the host graph's edges().
struct SteinerResult {
  Rational value;
  std::vector<std::size_t> witness;
};

/// Dreyfus-Wagner over (terminal subset, vertex) states on the metric
/// closure. Holds reusable buffers; one solver per thread.
class SteinerSolver {
 public:
  SteinerSolver(const Graph& g, const DistanceMatrix& m);

  /// Scaled optimum only.
  Length length(std::span<const Vertex> terminals);
  SteinerResult solve(const VertexSet& s);

 private:
  void run(std::span<const Vertex> terminals, bool keep_trace);
  void expand(std::uint32_t mask, Vertex v, std::vector<bool>& used_edges);
  void add_path(Vertex from, Vertex to, std::vector<bool>& used_edges);

  const Graph& g_;
  const DistanceMatrix& m_;
  std::vector<Vertex> terms_;
  std::vector<Length> dp_;     // [mask][v]
  std::vector<Length> merge_;  // [mask][v]
  std::vector<std::uint32_t> split_;
  std::vector<Vertex> via_;
};

/// Steiner distance of every vertex set of size <= max_k at once, indexed by
/// vertex bitmask (entry for the empty set unused). Requires order <= 18.
std::vector<Length> steiner_table(const Graph& g, const DistanceMatrix& m, int max_k);

/// Constant-time distances and per-set Steiner distance on a tree: half the
/// cyclic sum of distances between consecutive members in DFS order.
class TreeSteiner {
 public:
  /// Throws PreconditionError unless `t` is a tree.
  explicit TreeSteiner(const Graph& t);

  Length distance(Vertex u, Vertex v) const;
  /// Scaled; `members` in any order, scratch space reused.
  Length length(std::span<const Vertex> members, std::vector<Vertex>& scratch) const;
  Length scale() const noexcept { return scale_; }

 private:
  Vertex lca(Vertex u, Vertex v) const;

  int n_;
  Length scale_;
  std::vector<int> tin_;
  std::vector<int> depth_;
  std::vector<Length> wdepth_;
  std::vector<int> euler_first_;
  std::vector<std::vector<Vertex>> sparse_;  // Euler-tour RMQ by depth
};

SteinerResult steiner_distance(const Graph& g, const VertexSet& s);
Rational steiner_distance_tree_fast(const Graph& t, const VertexSet& s);

/// W_k: sum over all k-sets. Uses the all-subsets table for small orders,
/// the tree method for trees and per-set Dreyfus-Wagner otherwise.
/// Budget: C(n,k) <= 10^8.
Rational steiner_wiener(const Graph& g, int k, int threads = 1);
Rational steiner_mean(const Graph& g, int k, int threads = 1);
EccentricityProfile steiner_eccentricity(const Graph& g, int k, int threads = 1);

enum class DigraphSteinerMode {
  /// Every terminal reaches every other terminal inside the chosen arcs.
  MutualReachability,
  /// The chosen arcs form a strongly connected subdigraph.
  StronglyConnected,
};

struct DigraphSteinerOptions {
  DigraphSteinerMode mode = DigraphSteinerMode::MutualReachability;
  /// Search nodes (partial ears) before a ResourceError.
  std::uint64_t expansion_budget = 200'000'000;
};

/// Exact best-first search over vertex sets grown by ears.
SteinerResult steiner_distance_digraph(const Digraph& d, const VertexSet& s,
                                       const DigraphSteinerOptions& options = {});

/// Minimum strongly connected subdigraph cost for every vertex set of size
/// <= max_k (superset closure of per-vertex-set optima). Order <= 14.
std::vector<Length> digraph_steiner_table(const Digraph& d, const DistanceMatrix& m, int max_k,
                                          std::uint64_t expansion_budget = 2'000'000'000);

Rational steiner_wiener(const Digraph& d, int k, int threads = 1);
Rational steiner_mean(const Digraph& d, int k, int threads = 1);

}  // namespace ktsp
