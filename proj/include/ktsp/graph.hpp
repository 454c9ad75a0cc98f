#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ktsp/rational.hpp"

namespace ktsp {

using Vertex = std::int32_t;

/// An edge {u, v} (undirected, stored with u < v) or an arc u -> v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Adjacency entry. `edge` indexes into BasicGraph::edges().
struct Arc {
  Vertex to = 0;
  Length weight = 1;
  std::uint32_t edge = 0;
};

/// Immutable simple graph (Directed = false) or digraph (Directed = true) on
/// vertices 0..order-1 with optional nonnegative rational weights.
///
/// Weights are kept exactly; `scaled_weight()` gives each weight multiplied
/// by `scale()`, the least common denominator, so that path arithmetic can be
/// done in int64 without losing exactness.
template <bool Directed>
class BasicGraph {
 public:
  static constexpr bool kDirected = Directed;

  BasicGraph(int order, std::vector<Edge> edges);
  BasicGraph(int order, std::vector<Edge> edges, std::vector<Rational> weights);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool weighted() const noexcept { return !weights_.empty(); }

  /// Sorted, duplicate free. Undirected edges have u < v.
  std::span<const Edge> edges() const noexcept { return edges_; }
  Rational weight(std::size_t edge_index) const;
  Length scaled_weight(std::size_t edge_index) const noexcept {
    return scaled_.empty() ? 1 : scaled_[edge_index];
  }
  Length scale() const noexcept { return scale_; }

  /// Outgoing arcs sorted by target. For graphs, every incident edge.
  std::span<const Arc> out_arcs(Vertex v) const noexcept {
    return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
  }
  std::span<const Arc> in_arcs(Vertex v) const noexcept {
    if constexpr (!Directed) return out_arcs(v);
    return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept {
    return static_cast<int>(out_offsets_[v + 1] - out_offsets_[v]);
  }

  std::optional<std::size_t> find_edge(Vertex u, Vertex v) const noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept { return find_edge(u, v).has_value(); }

  /// Out-neighbourhood as a bitmask. Requires order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const noexcept;

  friend bool operator==(const BasicGraph& a, const BasicGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
  }

 private:
  void build();

  int order_;
  std::vector<Edge> edges_;
  std::vector<Rational> weights_;
  std::vector<Length> scaled_;
  Length scale_ = 1;
  std::vector<std::size_t> out_offsets_;
  std::vector<Arc> out_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Arc> in_;
};

extern template class BasicGraph<false>;
extern template class BasicGraph<true>;

using Graph = BasicGraph<false>;
using Digraph = BasicGraph<true>;
using AnyGraph = std::variant<Graph, Digraph>;

/// A nonempty set of distinct vertices, kept sorted.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  static VertexSet from_mask(std::uint64_t mask);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  Vertex operator[](std::size_t i) const noexcept { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  std::span<const Vertex> members() const noexcept { return members_; }
  bool contains(Vertex v) const noexcept;
  /// Requires every member < 64.
  std::uint64_t mask() const noexcept;

  /// Throws PreconditionError if empty or a member is outside [0, order).
  void validate(int order) const;

  std::string to_string() const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

bool is_connected(const Graph& g);
bool is_strongly_connected(const Digraph& d);
bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);
bool is_star_graph(const Graph& g);
bool is_complete_graph(const Graph& g);

/// Vertex `v` becomes `perm[v]`. Weights travel with their edges.
Graph relabel(const Graph& g, std::span<const Vertex> perm);
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);

/// Copies with one edge added or removed (unweighted graphs only).
Graph with_edge(const Graph& g, Edge e);
Graph without_edge(const Graph& g, Edge e);

/// The induced subgraph on `vertices`, relabelled 0..|vertices|-1 in order.
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

}  // namespace ktsp
