#pragma once

// Definition-level reference implementations. None of them share code with
// the library beyond the graph containers and Rational.

#include <optional>
#include <vector>

#include "ktsp/graph.hpp"
#include "ktsp/rational.hpp"

namespace oracle {

using ktsp::Digraph;
using ktsp::Graph;
using ktsp::Rational;
using ktsp::Vertex;

/// Floyd-Warshall in exact rationals; nullopt marks unreachable pairs.
template <bool Directed>
std::vector<std::vector<std::optional<Rational>>> floyd(const ktsp::BasicGraph<Directed>& g);

/// Minimum cyclic distance sum over all k! orders of `s`.
Rational tsp_permutations(const std::vector<std::vector<std::optional<Rational>>>& d, const std::vector<Vertex>& s);

/// Shortest closed walk through every member of `s`, searched over
/// (vertex, visited members) states of the graph itself.
template <bool Directed>
Rational tsp_walk(const ktsp::BasicGraph<Directed>& g, const std::vector<Vertex>& s);

/// Minimum over connected vertex supersets U of s of the MST weight of G[U].
Rational steiner_supersets(const Graph& g, const std::vector<Vertex>& s);

/// Minimum arc-weight subset in which the members of s reach one another.
Rational steiner_arc_subsets(const Digraph& d, const std::vector<Vertex>& s);

/// W_k of a tree by edge cuts: sum over edges of C(n,k) - C(a,k) - C(n-a,k).
Rational tree_steiner_wiener(const Graph& t, int k);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<Vertex>> subsets(int n, int k);

/// Every shortest u-v path of an unweighted graph, as edge lists.
std::vector<std::vector<std::pair<Vertex, Vertex>>> shortest_paths(const Graph& g, Vertex u, Vertex v);

/// A triple that is strict (2 max < sum) and whose shortest paths are
/// pairwise edge-disjoint for every choice; lexicographically first.
std::optional<std::vector<Vertex>> strict_disjoint_triple(const Graph& g);

// ---- integer versions for unweighted inputs (exhaustive scans) ----

/// BFS hop distances; -1 marks unreachable pairs.
template <bool Directed>
std::vector<std::vector<int>> bfs_distances(const ktsp::BasicGraph<Directed>& g);

int tsp_permutations(const std::vector<std::vector<int>>& d, const std::vector<Vertex>& s);

/// Breadth-first search over (vertex, visited members) of an unweighted
/// graph or digraph: the shortest closed walk from s[0] through all of s.
template <bool Directed>
int tsp_walk_unweighted(const ktsp::BasicGraph<Directed>& g, const std::vector<Vertex>& s);

/// table[mask] = min |U| - 1 over connected U containing mask (n <= 20).
std::vector<int> steiner_superset_table(const Graph& g);

inline std::uint32_t mask_of(const std::vector<Vertex>& s) {
  std::uint32_t m = 0;
  for (Vertex v : s) m |= 1u << v;
  return m;
}

}  // namespace oracle
