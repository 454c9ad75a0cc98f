#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ktsp/graph.hpp"
#include "ktsp/metric.hpp"
#include "ktsp/rational.hpp"
#include "ktsp/steiner.hpp"
#include "ktsp/tsp.hpp"

namespace ktsp {

/// One compared pair of exact quantities.
struct Claim {
  std::string name;
  /// One of "<=", ">=", "==", "<", ">".
  std::string relation;
  Rational lhs;
  Rational rhs;
  bool holds = true;
  bool equality = false;
  /// Structural prediction of `equality`, when a characterization exists.
  std::optional<bool> predicted_equality;
  /// Equality certificate or counterexample.
  std::string certificate;

  bool agreement() const noexcept { return !predicted_equality || *predicted_equality == equality; }
};

struct TheoremVerdict {
  std::string theorem;
  std::string instance;
  int k = 0;
  std::optional<int> j;
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, std::string>> details;

  bool holds() const noexcept;
  bool agreement() const noexcept;
  /// Equality of the first claim.
  bool equality() const noexcept { return !claims.empty() && claims.front().equality; }
};

/// Shared per-graph data for the checkers: distances and, for orders up to
/// 16, tsp and Steiner values of every set of size <= max_k.
class GraphAnalysis {
 public:
  GraphAnalysis(const Graph& g, int max_k, int threads = 1);

  const Graph& graph() const noexcept { return g_; }
  const DistanceMatrix& distances() const noexcept { return m_; }
  int order() const noexcept { return g_.order(); }
  int max_k() const noexcept { return max_k_; }
  int threads() const noexcept { return threads_; }
  bool has_tables() const noexcept { return !tsp_.empty(); }

  /// Per-thread evaluator; members must be sorted.
  class Evaluator {
   public:
    explicit Evaluator(const GraphAnalysis& a);
    Length tsp(std::span<const Vertex> s);
    Length steiner(std::span<const Vertex> s);

   private:
    const GraphAnalysis& a_;
    std::optional<TspSolver> tsp_;
    std::optional<SteinerSolver> steiner_;
    std::vector<Vertex> scratch_;
  };
  Evaluator evaluator() const { return Evaluator(*this); }

  Rational wiener() const;
  Rational mean_distance() const;
  Rational tsp_wiener(int k) const;
  Rational steiner_wiener(int k) const;
  Rational tsp_mean(int k) const;

 private:
  friend class Evaluator;
  Graph g_;
  int max_k_;
  int threads_;
  DistanceMatrix m_;
  std::vector<Length> tsp_;
  std::vector<Length> steiner_;
  std::optional<TreeSteiner> tree_;
};

struct TripleCertificate {
  Vertex u = 0, v = 0, w = 0;
  Rational d_uv, d_uw, d_vw;
  /// 2 max < sum.
  bool strict = false;
  /// Every choice of the three shortest paths is pairwise edge-disjoint.
  bool disjoint = false;
};

struct TripleConditionResult {
  /// No triple is both strict and disjoint.
  bool equality_predicted = true;
  /// W_3 = (n-2)/2 W, computed exactly.
  bool equality_observed = true;
  /// First (lexicographic) strict and disjoint triple.
  std::optional<TripleCertificate> certificate;
  Rational w3;
  Rational half_bound;
};

/// Unweighted, connected, n >= 3.
TripleConditionResult check_triple_condition(const GraphAnalysis& a);
TripleConditionResult check_triple_condition(const Graph& g);
TheoremVerdict verify_triple(const GraphAnalysis& a);

TheoremVerdict check_tsp_le_2steiner(const GraphAnalysis& a, int k);
TheoremVerdict check_tsp_le_2steiner(const Graph& g, int k);

/// Unweighted graphs only.
TheoremVerdict check_bounds(const GraphAnalysis& a, int k);
TheoremVerdict check_bounds(const Graph& g, int k);

TheoremVerdict check_perm_average_bound(const GraphAnalysis& a, int k);
TheoremVerdict check_perm_average_bound(const Graph& g, int k);

TheoremVerdict check_wtsp3_identity(const GraphAnalysis& a);

TheoremVerdict check_digraph_tsp_ge_steiner(const Digraph& d, int k, int threads = 1);

TheoremVerdict check_subadditivity(const Graph& g, int j, int k, int threads = 1);
TheoremVerdict check_subadditivity(const Digraph& d, int j, int k, int threads = 1);

/// Tree identity ecc_tsp,k = 2 ecc_k at every vertex.
TheoremVerdict check_tree_eccentricity(const Graph& t, int k, int threads = 1);

/// ecc_tsp,k(G, v) <= ecc_tsp,k(H, v) for a spanning subgraph H of G.
TheoremVerdict check_spanning_monotonicity(const Graph& g, const Graph& h, int k, int threads = 1);

/// Clique-to-path deletion sweep on n vertices (3 <= k <= n <= 8).
TheoremVerdict check_ecc_observations(int n, int k, int threads = 1);

/// Induced subgraph on `s` has a spanning cycle (|s| = 2: the pair is
/// adjacent). Requires order <= 64 and |s| <= 20.
bool is_hamiltonian_subset(const Graph& g, std::span<const Vertex> s);

/// Compact instance text: "graph6:<string>" for unweighted graphs of order
/// <= 62, otherwise a one-line edge list.
std::string instance_descriptor(const Graph& g);
std::string instance_descriptor(const Digraph& d);

}  // namespace ktsp
