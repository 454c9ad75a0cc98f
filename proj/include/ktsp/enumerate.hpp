#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ktsp/graph.hpp"

namespace ktsp {

/// Number of vertex pairs of an order-n graph, in graph6 bit order:
/// (0,1), (0,2), (1,2), (0,3), ...
inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Bit j(j-1)/2 + i of `mask` is the pair (i, j), i < j.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_of(const Graph& g);
bool mask_is_connected(int n, std::uint64_t mask);

/// Every connected labeled graph of order n (1 <= n <= 7), each once, in
/// increasing edge-mask order. [begin, end) restricts the mask range so a
/// scan can be split across workers.
class ConnectedGraphStream {
 public:
  static constexpr int kMaxOrder = 7;

  explicit ConnectedGraphStream(int n);
  ConnectedGraphStream(int n, std::uint64_t begin, std::uint64_t end);

  std::optional<Graph> next();
  /// Mask of the graph most recently returned by next().
  std::uint64_t current_mask() const noexcept { return current_; }
  std::uint64_t mask_limit() const noexcept { return std::uint64_t{1} << pair_count(n_); }

 private:
  int n_;
  std::uint64_t cursor_;
  std::uint64_t end_;
  std::uint64_t current_ = 0;
};

/// Edge masks of every connected labeled graph of order n, ascending.
std::vector<std::uint64_t> connected_graph_masks(int n);

/// graph6 string of the isomorphism-class representative with the smallest
/// graph6 bit sequence. Unweighted graphs of order <= 11; vertices are only
/// permuted within classes of equal (degree, neighbour degrees).
std::string canonical_graph6(const Graph& g);

/// One representative per isomorphism class of trees of order n (n >= 1),
/// sorted by graph6 string.
std::vector<Graph> enumerate_unlabeled_trees(int n);

}  // namespace ktsp
