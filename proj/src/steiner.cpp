#include "ktsp/steiner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "aggregate.hpp"
#include "ktsp/errors.hpp"

namespace ktsp {

namespace {

constexpr Length kInf = std::numeric_limits<Length>::max() / 4;

void require_connected(const Graph& g, const DistanceMatrix& m) {
  if (!m.all_reachable()) throw PreconditionError("graph not connected");
  (void)g;
}

// Edge indices of one shortest a-b path; ties broken by hop count, then by
// smallest predecessor.
std::vector<std::size_t> shortest_path_edges(const Graph& g, Vertex a, Vertex b) {
  const auto n = static_cast<std::size_t>(g.order());
  using Key = std::pair<Length, int>;
  std::vector<Key> best(n, {kInf, 0});
  std::vector<std::size_t> pred_edge(n, 0);
  std::vector<Vertex> pred(n, -1);
  std::vector<bool> done(n, false);
  using Item = std::tuple<Length, int, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  best[a] = {0, 0};
  heap.push({0, 0, a});
  while (!heap.empty()) {
    const auto [dist, hops, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = true;
    if (v == b) break;
    for (const Arc& arc : g.out_arcs(v)) {
      const Key cand{dist + arc.weight, hops + 1};
      if (!done[arc.to] && (cand < best[arc.to] || (cand == best[arc.to] && v < pred[arc.to]))) {
        best[arc.to] = cand;
        pred[arc.to] = v;
        pred_edge[arc.to] = arc.edge;
        heap.push({cand.first, cand.second, arc.to});
      }
    }
  }
  std::vector<std::size_t> out;
  for (Vertex v = b; v != a; v = pred[v]) out.push_back(pred_edge[v]);
  return out;
}

}  // namespace

SteinerSolver::SteinerSolver(const Graph& g, const DistanceMatrix& m) : g_(g), m_(m) {
  require_connected(g, m);
}

void SteinerSolver::run(std::span<const Vertex> terminals, bool keep_trace) {
  const int n = g_.order();
  const int q = static_cast<int>(terminals.size()) - 1;
  terms_.assign(terminals.begin(), terminals.end());
  const std::size_t masks = std::size_t{1} << q;
  dp_.assign(masks * static_cast<std::size_t>(n), kInf);
  merge_.assign(masks * static_cast<std::size_t>(n), kInf);
  if (keep_trace) {
    split_.assign(masks * static_cast<std::size_t>(n), 0);
    via_.assign(masks * static_cast<std::size_t>(n), -1);
  }
  for (int i = 0; i < q; ++i) {
    const Length* row = m_.row(terms_[i + 1]);
    Length* out = dp_.data() + (std::size_t{1} << i) * static_cast<std::size_t>(n);
    std::copy(row, row + n, out);
  }
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    Length* merge = merge_.data() + mask * static_cast<std::size_t>(n);
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    // E ranges over proper subsets of mask that contain the lowest bit.
    for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
      const std::uint32_t e = low | sub;
      const Length* a = dp_.data() + e * static_cast<std::size_t>(n);
      const Length* b = dp_.data() + (mask ^ e) * static_cast<std::size_t>(n);
      for (Vertex u = 0; u < n; ++u) {
        const Length c = a[u] + b[u];
        if (c < merge[u]) {
          merge[u] = c;
          if (keep_trace) split_[mask * static_cast<std::size_t>(n) + u] = e;
        }
      }
      if (sub == 0) break;
    }
    Length* out = dp_.data() + mask * static_cast<std::size_t>(n);
    for (Vertex u = 0; u < n; ++u) {
      if (merge[u] >= kInf) continue;
      const Length* row = m_.row(u);
      for (Vertex v = 0; v < n; ++v) {
        const Length c = merge[u] + row[v];
        if (c < out[v]) {
          out[v] = c;
          if (keep_trace) via_[mask * static_cast<std::size_t>(n) + v] = u;
        }
      }
    }
  }
}

Length SteinerSolver::length(std::span<const Vertex> terminals) {
  if (terminals.size() <= 1) return 0;
  if (terminals.size() == 2) return m_.row(terminals[0])[terminals[1]];
  run(terminals, false);
  const std::size_t full = (std::size_t{1} << (terminals.size() - 1)) - 1;
  return dp_[full * static_cast<std::size_t>(g_.order()) + terminals[0]];
}

void SteinerSolver::add_path(Vertex from, Vertex to, std::vector<bool>& used_edges) {
  if (from == to) return;
  for (std::size_t e : shortest_path_edges(g_, from, to)) used_edges[e] = true;
}

void SteinerSolver::expand(std::uint32_t mask, Vertex v, std::vector<bool>& used_edges) {
  const auto n = static_cast<std::size_t>(g_.order());
  if ((mask & (mask - 1)) == 0) {
    const int i = __builtin_ctz(mask);
    add_path(terms_[i + 1], v, used_edges);
    return;
  }
  const Vertex u = via_[mask * n + v];
  add_path(u, v, used_edges);
  const std::uint32_t e = split_[mask * n + u];
  expand(e, u, used_edges);
  expand(mask ^ e, u, used_edges);
}

SteinerResult SteinerSolver::solve(const VertexSet& s) {
  s.validate(g_.order());
  if (s.size() > 20) throw ResourceError("Steiner terminal budget is k <= 20");
  SteinerResult result;
  if (s.size() == 1) {
    result.value = 0;
    return result;
  }
  const std::span<const Vertex> terminals = s.members();
  run(terminals, true);
  const auto n = static_cast<std::size_t>(g_.order());
  const std::uint32_t full = (std::uint32_t{1} << (terminals.size() - 1)) - 1;
  const Length best = dp_[full * n + terminals[0]];
  std::vector<bool> used(g_.size(), false);
  expand(full, terminals[0], used);

  // Minimum spanning forest of the union, then strip non-terminal leaves.
  std::vector<std::size_t> candidates;
  for (std::size_t e = 0; e < used.size(); ++e) {
    if (used[e]) candidates.push_back(e);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    return g_.scaled_weight(a) < g_.scaled_weight(b);
  });
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> in_tree(g_.size(), false);
  std::vector<int> degree(n, 0);
  for (std::size_t e : candidates) {
    const Edge ed = g_.edges()[e];
    const Vertex a = find(ed.u), b = find(ed.v);
    if (a == b) continue;
    parent[a] = b;
    in_tree[e] = true;
    ++degree[ed.u];
    ++degree[ed.v];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < in_tree.size(); ++e) {
      if (!in_tree[e]) continue;
      const Edge ed = g_.edges()[e];
      for (Vertex leaf : {ed.u, ed.v}) {
        if (degree[leaf] == 1 && !s.contains(leaf)) {
          in_tree[e] = false;
          --degree[ed.u];
          --degree[ed.v];
          changed = true;
          break;
        }
      }
    }
  }
  Length total = 0;
  for (std::size_t e = 0; e < in_tree.size(); ++e) {
    if (in_tree[e]) {
      result.witness.push_back(e);
      total += g_.scaled_weight(e);
    }
  }
  if (total != best) throw std::logic_error("Steiner witness weight differs from the optimum");
  result.value = m_.to_rational(best);
  return result;
}

std::vector<Length> steiner_table(const Graph& g, const DistanceMatrix& m, int max_k) {
  const int n = g.order();
  if (n > 18) throw ResourceError("all-subsets Steiner table supports order <= 18");
  require_connected(g, m);
  max_k = std::clamp(max_k, 1, n);
  const std::size_t masks = std::size_t{1} << n;
  const auto nn = static_cast<std::size_t>(n);
  // dp[D][v]: Steiner distance of D + {v}, for |D| <= max_k - 1.
  std::vector<Length> dp(masks * nn, kInf);
  std::vector<Length> merge(nn);
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    const int size = __builtin_popcount(mask);
    if (size > max_k - 1) continue;
    Length* out = dp.data() + mask * nn;
    if (size == 1) {
      const Length* row = m.row(__builtin_ctz(mask));
      std::copy(row, row + n, out);
      continue;
    }
    std::fill(merge.begin(), merge.end(), kInf);
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
      const std::uint32_t e = low | sub;
      const Length* a = dp.data() + e * nn;
      const Length* b = dp.data() + (mask ^ e) * nn;
      for (std::size_t u = 0; u < nn; ++u) merge[u] = std::min(merge[u], a[u] + b[u]);
      if (sub == 0) break;
    }
    for (Vertex u = 0; u < n; ++u) {
      const Length* row = m.row(u);
      const Length mu = merge[u];
      for (std::size_t v = 0; v < nn; ++v) out[v] = std::min(out[v], mu + row[v]);
    }
  }
  std::vector<Length> table(masks, 0);
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < 2 || size > max_k) continue;
    const std::uint32_t low = mask & (~mask + 1);
    table[mask] = dp[(mask ^ low) * nn + static_cast<std::size_t>(__builtin_ctz(low))];
  }
  return table;
}

TreeSteiner::TreeSteiner(const Graph& t) : n_(t.order()), scale_(t.scale()) {
  if (!is_tree(t)) throw PreconditionError("input is not a tree");
  const auto n = static_cast<std::size_t>(n_);
  tin_.assign(n, 0);
  depth_.assign(n, 0);
  wdepth_.assign(n, 0);
  euler_first_.assign(n, 0);
  std::vector<Vertex> euler;
  euler.reserve(2 * n);
  // Iterative DFS from vertex 0 in increasing neighbour order.
  std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
  std::vector<Vertex> parent(n, -1);
  int timer = 0;
  tin_[0] = timer++;
  euler_first_[0] = 0;
  euler.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto arcs = t.out_arcs(v);
    if (next < arcs.size()) {
      const Arc a = arcs[next++];
      if (a.to == parent[v]) continue;
      parent[a.to] = v;
      depth_[a.to] = depth_[v] + 1;
      wdepth_[a.to] = wdepth_[v] + a.weight;
      tin_[a.to] = timer++;
      euler_first_[a.to] = static_cast<int>(euler.size());
      euler.push_back(a.to);
      stack.push_back({a.to, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) euler.push_back(stack.back().first);
    }
  }
  sparse_.push_back(euler);
  for (std::size_t len = 2; len <= euler.size(); len *= 2) {
    const auto& prev = sparse_.back();
    std::vector<Vertex> level(euler.size() - len + 1);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Vertex a = prev[i], b = prev[i + len / 2];
      level[i] = depth_[a] <= depth_[b] ? a : b;
    }
    sparse_.push_back(std::move(level));
  }
}

Vertex TreeSteiner::lca(Vertex u, Vertex v) const {
  int a = euler_first_[u], b = euler_first_[v];
  if (a > b) std::swap(a, b);
  const int span = b - a + 1;
  const int level = 31 - __builtin_clz(static_cast<unsigned>(span));
  const Vertex x = sparse_[level][a];
  const Vertex y = sparse_[level][b - (1 << level) + 1];
  return depth_[x] <= depth_[y] ? x : y;
}

Length TreeSteiner::distance(Vertex u, Vertex v) const {
  return wdepth_[u] + wdepth_[v] - 2 * wdepth_[lca(u, v)];
}

Length TreeSteiner::length(std::span<const Vertex> members, std::vector<Vertex>& scratch) const {
  if (members.size() <= 1) return 0;
  scratch.assign(members.begin(), members.end());
  std::sort(scratch.begin(), scratch.end(), [&](Vertex a, Vertex b) { return tin_[a] < tin_[b]; });
  Length cyclic = 0;
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    cyclic += distance(scratch[i], scratch[(i + 1) % scratch.size()]);
  }
  return cyclic / 2;
}

SteinerResult steiner_distance(const Graph& g, const VertexSet& s) {
  s.validate(g.order());
  const DistanceMatrix m = apsp(g);
  SteinerSolver solver(g, m);
  return solver.solve(s);
}

Rational steiner_distance_tree_fast(const Graph& t, const VertexSet& s) {
  s.validate(t.order());
  const TreeSteiner tree(t);
  std::vector<Vertex> scratch;
  return Rational(tree.length(s.members(), scratch), tree.scale());
}

namespace {

constexpr int kTableMaxOrder = 16;

detail::SubsetAggregate steiner_aggregate(const Graph& g, int k, int threads, bool want_ecc) {
  const int n = g.order();
  detail::check_k_range(n, k, 1);
  const DistanceMatrix m = apsp(g, threads);
  require_connected(g, m);
  const std::string what = "Steiner index";
  if (n <= kTableMaxOrder) {
    detail::checked_subset_count(n, k, what);
    const std::vector<Length> table = steiner_table(g, m, k);
    return detail::aggregate_subsets(n, k, threads, want_ecc, what, [&] {
      return [&](std::span<const Vertex> c) {
        std::uint32_t mask = 0;
        for (Vertex v : c) mask |= 1u << v;
        return table[mask];
      };
    });
  }
  if (is_tree(g)) {
    const TreeSteiner tree(g);
    return detail::aggregate_subsets(n, k, threads, want_ecc, what, [&] {
      return [&tree, scratch = std::vector<Vertex>()](std::span<const Vertex> c) mutable {
        return tree.length(c, scratch);
      };
    });
  }
  return detail::aggregate_subsets(n, k, threads, want_ecc, what, [&] {
    return [solver = SteinerSolver(g, m)](std::span<const Vertex> c) mutable { return solver.length(c); };
  });
}

}  // namespace

Rational steiner_wiener(const Graph& g, int k, int threads) {
  detail::check_k_range(g.order(), k, 2);
  return detail::aggregate_sum(steiner_aggregate(g, k, threads, false), g.scale());
}

Rational steiner_mean(const Graph& g, int k, int threads) {
  return steiner_wiener(g, k, threads) / Rational(binomial(g.order(), k));
}

EccentricityProfile steiner_eccentricity(const Graph& g, int k, int threads) {
  detail::check_k_range(g.order(), k, 1);
  const auto agg = steiner_aggregate(g, k, threads, true);
  return detail::to_profile(agg, g.order(), k, g.scale());
}

}  // namespace ktsp
