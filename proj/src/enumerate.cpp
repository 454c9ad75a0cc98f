#include "ktsp/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ktsp/errors.hpp"
#include "ktsp/io.hpp"

namespace ktsp {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

std::uint64_t edge_mask_of(const Graph& g) {
  if (g.order() > 11) throw PreconditionError("edge masks need order <= 11");
  std::uint64_t mask = 0;
  for (const Edge& e : g.edges()) mask |= std::uint64_t{1} << (e.v * (e.v - 1) / 2 + e.u);
  return mask;
}

bool mask_is_connected(int n, std::uint64_t mask) {
  std::uint32_t adj[16] = {};
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  const std::uint32_t all = (n == 32) ? ~0u : (1u << n) - 1;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[__builtin_ctz(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

ConnectedGraphStream::ConnectedGraphStream(int n) : ConnectedGraphStream(n, 0, ~std::uint64_t{0}) {}

ConnectedGraphStream::ConnectedGraphStream(int n, std::uint64_t begin, std::uint64_t end)
    : n_(n), cursor_(begin), end_(end) {
  if (n < 1) throw PreconditionError("enumeration order must be at least 1");
  if (n > kMaxOrder) {
    throw PreconditionError("labeled enumeration supports n <= 7; for larger orders supply a graph6 file");
  }
  end_ = std::min(end_, mask_limit());
}

std::optional<Graph> ConnectedGraphStream::next() {
  while (cursor_ < end_) {
    const std::uint64_t mask = cursor_++;
    if (mask_is_connected(n_, mask)) {
      current_ = mask;
      return graph_from_edge_mask(n_, mask);
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> connected_graph_masks(int n) {
  ConnectedGraphStream probe(n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < probe.mask_limit(); ++m) {
    if (mask_is_connected(n, m)) out.push_back(m);
  }
  return out;
}

namespace {

// AHU encoding of the tree rooted at v.
std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : adj[v]) {
    if (w != parent) children.push_back(rooted_code(adj, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::string tree_canonical(const std::vector<std::vector<Vertex>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return "()";
  // Centers by repeated leaf stripping.
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> enumerate_unlabeled_trees(int n) {
  if (n < 1) throw PreconditionError("tree order must be at least 1");
  if (n > 20) throw ResourceError("unlabeled tree enumeration budget is n <= 20");
  std::vector<std::vector<std::vector<Vertex>>> level{{{}}};
  for (int order = 2; order <= n; ++order) {
    std::set<std::string> seen;
    std::vector<std::vector<std::vector<Vertex>>> next;
    for (const auto& adj : level) {
      for (Vertex v = 0; v < order - 1; ++v) {
        auto grown = adj;
        grown.emplace_back();
        grown[v].push_back(order - 1);
        grown[order - 1].push_back(v);
        if (seen.insert(tree_canonical(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::string, Graph>> keyed;
  for (const auto& adj : level) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : adj[v]) {
        if (v < w) edges.push_back({v, w});
      }
    }
    Graph g(n, std::move(edges));
    std::string key = encode_graph6(g);
    keyed.emplace_back(std::move(key), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

std::string canonical_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw PreconditionError("canonical form supports order <= 11");
  if (g.weighted()) throw PreconditionError("canonical form requires an unweighted graph");
  std::vector<std::vector<int>> invariant(n);
  for (Vertex v = 0; v < n; ++v) {
    invariant[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (const Arc& a : g.out_arcs(v)) nd.push_back(g.degree(a.to));
    std::sort(nd.begin(), nd.end());
    invariant[v].insert(invariant[v].end(), nd.begin(), nd.end());
  }
  // order[p] = original vertex placed at position p.
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return invariant[a] < invariant[b]; });
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && invariant[order[j]] == invariant[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  const int bits = pair_count(n);
  // Key with the first graph6 bit most significant.
  auto key_of = [&](const std::vector<Vertex>& at) {
    std::uint64_t key = 0;
    int idx = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++idx) {
        if (g.has_edge(at[i], at[j])) key |= std::uint64_t{1} << (bits - 1 - idx);
      }
    }
    return key;
  };
  std::uint64_t best = key_of(order);
  for (;;) {
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + blocks[b].first;
      auto last = order.begin() + blocks[b].second;
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
    best = std::min(best, key_of(order));
  }
  std::uint64_t mask = 0;
  for (int idx = 0; idx < bits; ++idx) {
    if (best >> (bits - 1 - idx) & 1) mask |= std::uint64_t{1} << idx;
  }
  return encode_graph6(graph_from_edge_mask(n, mask));
}

}  // namespace ktsp
