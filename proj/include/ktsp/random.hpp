#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ktsp/graph.hpp"

namespace ktsp {

/// The engine is fixed by the standard (mt19937_64), and every draw below
/// goes through uniform_below, so streams are identical across platforms.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), bound >= 1, by rejection.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for an independent stream `index` derived from `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index + 0x632be59bd9b4e019ULL));
}

/// Uniform k-subset of {0..n-1} (Floyd), sorted.
std::vector<Vertex> sample_subset(Rng& rng, int n, int k);

/// Uniform permutation (Fisher-Yates).
std::vector<Vertex> random_permutation(Rng& rng, int n);

struct RandomGraphOptions {
  int order = 6;
  /// Probability, in thousandths, of each edge beyond the spanning skeleton.
  int extra_edge_permille = 300;
  bool weighted = false;
  /// Weights are p/q with 1 <= p <= max_numerator, 1 <= q <= max_denominator.
  int max_numerator = 5;
  int max_denominator = 3;
  /// Permits zero weights (about one edge in eight).
  bool allow_zero_weight = false;
};

/// Random spanning tree plus extra edges; always connected.
Graph random_connected_graph(Rng& rng, const RandomGraphOptions& options);

/// Random Hamiltonian cycle plus extra arcs; always strongly connected.
Digraph random_strongly_connected_digraph(Rng& rng, const RandomGraphOptions& options);

/// A random labeled tree on n vertices.
Graph random_tree(Rng& rng, int n);

/// A random spanning connected subgraph of g: a random spanning tree of g
/// plus each remaining edge kept with the given probability. Unweighted g.
Graph random_spanning_connected_subgraph(Rng& rng, const Graph& g, int keep_permille);

}  // namespace ktsp
