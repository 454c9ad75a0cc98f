#include "ktsp/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ktsp/errors.hpp"

namespace ktsp {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Vertex> sample_subset(Rng& rng, int n, int k) {
  if (k < 0 || k > n) throw PreconditionError("sample size out of range");
  std::vector<Vertex> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  for (int j = n - k; j < n; ++j) {
    const auto t = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[i], p[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  return p;
}

namespace {

Rational random_weight(Rng& rng, const RandomGraphOptions& o) {
  if (o.allow_zero_weight && uniform_below(rng, 8) == 0) return 0;
  const auto p = 1 + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(o.max_numerator)));
  const auto q = 1 + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(o.max_denominator)));
  return Rational(p, q);
}

bool coin(Rng& rng, int permille) {
  return static_cast<int>(uniform_below(rng, 1000)) < permille;
}

}  // namespace

Graph random_tree(Rng& rng, int n) {
  if (n < 1) throw PreconditionError("tree order must be at least 1");
  const auto perm = random_permutation(rng, n);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    const auto parent = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(v)));
    edges.push_back({perm[parent], perm[v]});
  }
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(Rng& rng, const RandomGraphOptions& o) {
  const int n = o.order;
  const Graph tree = random_tree(rng, n);
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.has_edge(u, v) && coin(rng, o.extra_edge_permille)) edges.push_back({u, v});
    }
  }
  std::sort(edges.begin(), edges.end());
  std::vector<Rational> weights;
  if (o.weighted) {
    for (std::size_t i = 0; i < edges.size(); ++i) weights.push_back(random_weight(rng, o));
  }
  return Graph(n, std::move(edges), std::move(weights));
}

Digraph random_strongly_connected_digraph(Rng& rng, const RandomGraphOptions& o) {
  const int n = o.order;
  if (n < 1) throw PreconditionError("digraph order must be at least 1");
  std::set<std::pair<Vertex, Vertex>> arcs;
  if (n >= 2) {
    const auto perm = random_permutation(rng, n);
    for (int i = 0; i < n; ++i) arcs.insert({perm[i], perm[(i + 1) % n]});
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !arcs.count({u, v}) && coin(rng, o.extra_edge_permille)) arcs.insert({u, v});
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : arcs) edges.push_back({u, v});
  std::vector<Rational> weights;
  if (o.weighted) {
    for (std::size_t i = 0; i < edges.size(); ++i) weights.push_back(random_weight(rng, o));
  }
  return Digraph(n, std::move(edges), std::move(weights));
}

Graph random_spanning_connected_subgraph(Rng& rng, const Graph& g, int keep_permille) {
  if (g.weighted()) throw PreconditionError("spanning subgraph sampling needs an unweighted graph");
  // Random spanning tree: Kruskal over a shuffled edge order.
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> keep(g.size(), false);
  for (std::size_t i : order) {
    const Edge e = g.edges()[i];
    const Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      keep[i] = true;
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (keep[i] || coin(rng, keep_permille)) edges.push_back(g.edges()[i]);
  }
  return Graph(g.order(), std::move(edges));
}

}  // namespace ktsp
