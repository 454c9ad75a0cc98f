#include "ktsp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "ktsp/errors.hpp"

namespace ktsp {

namespace mp = boost::multiprecision;

namespace {

// Keeps sums of up to 2^22 scaled weights inside int64.
constexpr Length kMaxScaledWeight = Length{1} << 40;

}  // namespace

template <bool Directed>
BasicGraph<Directed>::BasicGraph(int order, std::vector<Edge> edges)
    : BasicGraph(order, std::move(edges), {}) {}

template <bool Directed>
BasicGraph<Directed>::BasicGraph(int order, std::vector<Edge> edges,
                                 std::vector<Rational> weights)
    : order_(order), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (order_ < 1) throw PreconditionError("graph order must be at least 1");
  if (!weights_.empty() && weights_.size() != edges_.size()) {
    throw PreconditionError("weight count does not match edge count");
  }
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= order_ || e.v >= order_) {
      throw PreconditionError("edge endpoint out of range [0, " + std::to_string(order_) + ")");
    }
    if (e.u == e.v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    }
  }
  for (const Rational& w : weights_) {
    if (w < 0) throw PreconditionError("negative weight " + ktsp::to_string(w));
  }
  if constexpr (!Directed) {
    for (Edge& e : edges_) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
  }
  // Sort edges, carrying weights along.
  std::vector<std::size_t> idx(edges_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return edges_[a] < edges_[b]; });
  std::vector<Edge> sorted_edges;
  std::vector<Rational> sorted_weights;
  sorted_edges.reserve(edges_.size());
  for (std::size_t i : idx) {
    if (!sorted_edges.empty() && sorted_edges.back() == edges_[i]) {
      throw PreconditionError("duplicate edge " + std::to_string(edges_[i].u) + " " +
                              std::to_string(edges_[i].v));
    }
    sorted_edges.push_back(edges_[i]);
    if (!weights_.empty()) sorted_weights.push_back(weights_[i]);
  }
  edges_ = std::move(sorted_edges);
  weights_ = std::move(sorted_weights);
  build();
}

template <bool Directed>
void BasicGraph<Directed>::build() {
  if (!weights_.empty()) {
    BigInt lcm = 1;
    for (const Rational& w : weights_) {
      const BigInt den = mp::denominator(w);
      lcm = lcm / mp::gcd(lcm, den) * den;
      if (lcm > kMaxScaledWeight) {
        throw ResourceError("common weight denominator exceeds 2^40");
      }
    }
    scale_ = static_cast<Length>(lcm);
    scaled_.reserve(weights_.size());
    for (const Rational& w : weights_) {
      const BigInt s = mp::numerator(w) * (lcm / mp::denominator(w));
      if (s > kMaxScaledWeight) {
        throw ResourceError("scaled weight " + ktsp::to_string(w) + " exceeds 2^40");
      }
      scaled_.push_back(static_cast<Length>(s));
    }
  }

  const auto n = static_cast<std::size_t>(order_);
  std::vector<std::size_t> out_count(n + 1, 0), in_count(n + 1, 0);
  for (const Edge& e : edges_) {
    ++out_count[e.u];
    if constexpr (Directed) {
      ++in_count[e.v];
    } else {
      ++out_count[e.v];
    }
  }
  out_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) out_offsets_[v + 1] = out_offsets_[v] + out_count[v];
  out_.resize(out_offsets_[n]);
  std::vector<std::size_t> fill(out_offsets_.begin(), out_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const Length w = scaled_weight(i);
    out_[fill[e.u]++] = Arc{e.v, w, static_cast<std::uint32_t>(i)};
    if constexpr (!Directed) out_[fill[e.v]++] = Arc{e.u, w, static_cast<std::uint32_t>(i)};
  }
  auto by_target = [](const Arc& a, const Arc& b) { return a.to < b.to; };
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v]),
              out_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v + 1]), by_target);
  }
  if constexpr (Directed) {
    in_offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) in_offsets_[v + 1] = in_offsets_[v] + in_count[v];
    in_.resize(in_offsets_[n]);
    std::vector<std::size_t> fill_in(in_offsets_.begin(), in_offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      in_[fill_in[e.v]++] = Arc{e.u, scaled_weight(i), static_cast<std::uint32_t>(i)};
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(in_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[v]),
                in_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[v + 1]), by_target);
    }
  }
}

template <bool Directed>
Rational BasicGraph<Directed>::weight(std::size_t edge_index) const {
  return weights_.empty() ? Rational(1) : weights_[edge_index];
}

template <bool Directed>
std::optional<std::size_t> BasicGraph<Directed>::find_edge(Vertex u, Vertex v) const noexcept {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) return std::nullopt;
  const auto arcs = out_arcs(u);
  const auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                                   [](const Arc& a, Vertex t) { return a.to < t; });
  if (it == arcs.end() || it->to != v) return std::nullopt;
  return it->edge;
}

template <bool Directed>
std::uint64_t BasicGraph<Directed>::neighbor_mask(Vertex v) const noexcept {
  std::uint64_t mask = 0;
  for (const Arc& a : out_arcs(v)) mask |= std::uint64_t{1} << a.to;
  return mask;
}

template class BasicGraph<false>;
template class BasicGraph<true>;

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0) throw PreconditionError("negative vertex index in set");
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw PreconditionError("duplicate vertex " + std::to_string(members_[i]) + " in set");
    }
  }
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<Vertex> m;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) m.push_back(v);
  }
  return VertexSet(std::move(m));
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const noexcept {
  std::uint64_t m = 0;
  for (Vertex v : members_) m |= std::uint64_t{1} << v;
  return m;
}

void VertexSet::validate(int order) const {
  if (members_.empty()) throw PreconditionError("vertex set must be nonempty");
  if (members_.back() >= order) {
    throw PreconditionError("vertex " + std::to_string(members_.back()) +
                            " out of range [0, " + std::to_string(order) + ")");
  }
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
  os << '}';
  return os.str();
}

namespace {

template <bool Directed>
std::vector<bool> reachable_from(const BasicGraph<Directed>& g, Vertex s, bool reverse) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Arc& a : reverse ? g.in_arcs(v) : g.out_arcs(v)) {
      if (!seen[a.to]) {
        seen[a.to] = true;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

bool all_true(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace

bool is_connected(const Graph& g) { return all_true(reachable_from(g, 0, false)); }

bool is_strongly_connected(const Digraph& d) {
  return all_true(reachable_from(d, 0, false)) && all_true(reachable_from(d, 0, true));
}

bool is_tree(const Graph& g) {
  return g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_star_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  if (g.order() <= 2) return true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return true;
  }
  return false;
}

bool is_complete_graph(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - 1) / 2;
}

namespace {

template <bool Directed>
BasicGraph<Directed> relabel_impl(const BasicGraph<Directed>& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) {
    throw PreconditionError("permutation size does not match graph order");
  }
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  edges.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge e = g.edges()[i];
    edges.push_back({perm[e.u], perm[e.v]});
    if (g.weighted()) weights.push_back(g.weight(i));
  }
  return BasicGraph<Directed>(g.order(), std::move(edges), std::move(weights));
}

}  // namespace

Graph relabel(const Graph& g, std::span<const Vertex> perm) { return relabel_impl(g, perm); }
Digraph relabel(const Digraph& d, std::span<const Vertex> perm) { return relabel_impl(d, perm); }

Graph with_edge(const Graph& g, Edge e) {
  if (g.weighted()) throw PreconditionError("with_edge requires an unweighted graph");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(e);
  return Graph(g.order(), std::move(edges));
}

Graph without_edge(const Graph& g, Edge e) {
  if (g.weighted()) throw PreconditionError("without_edge requires an unweighted graph");
  if (e.u > e.v) std::swap(e.u, e.v);
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  if (edges.size() == g.size()) throw PreconditionError("edge not present");
  return Graph(g.order(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  vertices.validate(g.order());
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge e = g.edges()[i];
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      edges.push_back({index[e.u], index[e.v]});
      if (g.weighted()) weights.push_back(g.weight(i));
    }
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges), std::move(weights));
}

}  // namespace ktsp
