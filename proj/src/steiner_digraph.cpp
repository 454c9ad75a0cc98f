// Minimum strongly connected subdigraph containing a terminal set.
//
// Every strongly connected digraph has a spanning strongly connected
// subdigraph built from one vertex by adding ears: simple paths x -> ... -> y
// with x, y already present (x = y allowed) and at least one new interior
// vertex. Ear arcs are disjoint from earlier arcs, so costs add up, and the
// cheapest way to reach a vertex set depends on that set only. The search
// is Dijkstra over vertex sets.

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "aggregate.hpp"
#include "ktsp/errors.hpp"
#include "ktsp/steiner.hpp"
#include "ktsp/tsp.hpp"

namespace ktsp {

namespace {

constexpr Length kInf = std::numeric_limits<Length>::max() / 4;
constexpr int kMaxOrder = 30;
constexpr int kTableMaxOrder = 14;

using Mask = std::uint32_t;

struct Ear {
  Length cost = kInf;
  std::vector<Vertex> path;  // x, interior..., y
};

class EarEnumerator {
 public:
  EarEnumerator(const Digraph& d, const DistanceMatrix& m, std::uint64_t budget)
      : d_(d), m_(m), budget_(budget) {}

  /// Cheapest ear per interior set, interior drawn from `allowed`, cost at
  /// most `bound`.
  const std::unordered_map<Mask, Ear>& run(Mask u, Mask allowed, Length bound, bool keep_paths) {
    u_ = u;
    allowed_ = allowed & ~u;
    bound_ = bound;
    keep_paths_ = keep_paths;
    ears_.clear();
    memo_.clear();
    const int n = d_.order();
    ret_lb_.assign(static_cast<std::size_t>(n), kInf);
    for (Vertex z = 0; z < n; ++z) {
      if (!((allowed_ >> z) & 1)) continue;
      for (Mask it = u; it != 0; it &= it - 1) {
        const Length x = m_.row(z)[__builtin_ctz(it)];
        if (x >= 0) ret_lb_[z] = std::min(ret_lb_[z], x);
      }
    }
    for (Mask it = u; it != 0; it &= it - 1) {
      const Vertex x = __builtin_ctz(it);
      for (const Arc& a : d_.out_arcs(x)) {
        if (!((allowed_ >> a.to) & 1)) continue;
        if (a.weight + ret_lb_[a.to] > bound_) continue;
        path_ = {x, a.to};
        dfs(Mask{1} << a.to, a.to, a.weight);
      }
    }
    return ears_;
  }

  std::uint64_t used() const noexcept { return used_; }

 private:
  void dfs(Mask interior, Vertex z, Length cost) {
    if (++used_ > budget_) {
      throw ResourceError("digraph Steiner search exceeded its budget of " + std::to_string(budget_) +
                          " expansions");
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(interior) << 5) | static_cast<std::uint64_t>(z);
    auto [it, inserted] = memo_.try_emplace(key, cost);
    if (!inserted) {
      if (it->second <= cost) return;
      it->second = cost;
    }
    // Close the ear with the cheapest arc back into U.
    Length back = kInf;
    Vertex back_to = -1;
    for (const Arc& a : d_.out_arcs(z)) {
      if (((u_ >> a.to) & 1) && a.weight < back) {
        back = a.weight;
        back_to = a.to;
      }
    }
    if (back_to >= 0 && cost + back <= bound_) {
      Ear& ear = ears_[interior];
      if (cost + back < ear.cost) {
        ear.cost = cost + back;
        if (keep_paths_) {
          ear.path = path_;
          ear.path.push_back(back_to);
        }
      }
    }
    for (const Arc& a : d_.out_arcs(z)) {
      const Mask bit = Mask{1} << a.to;
      if (!(allowed_ & bit) || (interior & bit)) continue;
      const Length next = cost + a.weight;
      if (next + ret_lb_[a.to] > bound_) continue;
      path_.push_back(a.to);
      dfs(interior | bit, a.to, next);
      path_.pop_back();
    }
  }

  const Digraph& d_;
  const DistanceMatrix& m_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  Mask u_ = 0;
  Mask allowed_ = 0;
  Length bound_ = kInf;
  bool keep_paths_ = false;
  std::vector<Length> ret_lb_;
  std::vector<Vertex> path_;
  std::unordered_map<Mask, Ear> ears_;
  std::unordered_map<std::uint64_t, Length> memo_;
};

void require_strong(const DistanceMatrix& m) {
  if (!m.all_reachable()) throw PreconditionError("digraph not strongly connected");
}

// Any completion of U must contain a path from U to each missing terminal
// and one back, built from arcs outside U.
Length lower_bound(const DistanceMatrix& m, Mask u, Mask terminals) {
  Length lb = 0;
  for (Mask it = terminals & ~u; it != 0; it &= it - 1) {
    const Vertex s = __builtin_ctz(it);
    Length to = kInf, from = kInf;
    for (Mask jt = u; jt != 0; jt &= jt - 1) {
      const Vertex x = __builtin_ctz(jt);
      to = std::min(to, m.row(x)[s]);
      from = std::min(from, m.row(s)[x]);
    }
    lb = std::max({lb, to, from});
  }
  return lb;
}

struct SearchOutcome {
  Length cost = 0;
  std::vector<std::size_t> arcs;
};

SearchOutcome search(const Digraph& d, const DistanceMatrix& m, const VertexSet& s, std::uint64_t budget) {
  const Vertex root = s[0];
  Mask terminals = 0;
  for (Vertex v : s) terminals |= Mask{1} << v;
  TspSolver tsp(m);
  Length upper = tsp.length(s.members());

  struct Parent {
    Mask prev = 0;
    std::vector<Vertex> path;
  };
  std::unordered_map<Mask, Length> best;
  std::unordered_map<Mask, Parent> parent;
  using Item = std::pair<Length, Mask>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  const Mask start = Mask{1} << root;
  best[start] = 0;
  heap.push({0, start});
  const Mask all = d.order() == 32 ? ~Mask{0} : (Mask{1} << d.order()) - 1;
  EarEnumerator ears(d, m, budget);
  while (!heap.empty()) {
    const auto [cost, u] = heap.top();
    heap.pop();
    if (cost > best[u]) continue;
    if ((u & terminals) == terminals) {
      SearchOutcome out;
      out.cost = cost;
      for (Mask at = u; at != start;) {
        const Parent& p = parent.at(at);
        for (std::size_t i = 0; i + 1 < p.path.size(); ++i) {
          out.arcs.push_back(*d.find_edge(p.path[i], p.path[i + 1]));
        }
        at = p.prev;
      }
      std::sort(out.arcs.begin(), out.arcs.end());
      return out;
    }
    const auto& found = ears.run(u, all, upper - cost, true);
    std::vector<std::pair<Mask, const Ear*>> ordered;
    ordered.reserve(found.size());
    for (const auto& [interior, ear] : found) ordered.emplace_back(interior, &ear);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [interior, ear_ptr] : ordered) {
      const Ear& ear = *ear_ptr;
      const Mask next = u | interior;
      const Length c = cost + ear.cost;
      if (c + lower_bound(m, next, terminals) > upper) continue;
      auto it = best.find(next);
      if (it != best.end() && it->second <= c) continue;
      best[next] = c;
      parent[next] = Parent{u, ear.path};
      heap.push({c, next});
    }
  }
  throw std::logic_error("digraph Steiner search ended without reaching the terminals");
}

}  // namespace

SteinerResult steiner_distance_digraph(const Digraph& d, const VertexSet& s, const DigraphSteinerOptions& options) {
  s.validate(d.order());
  if (d.order() > kMaxOrder) throw ResourceError("digraph Steiner search supports order <= 30");
  const DistanceMatrix m = apsp(d);
  require_strong(m);
  SteinerResult result;
  if (s.size() == 1) {
    result.value = 0;
    return result;
  }
  // With nonnegative weights the arcs inside the strongly connected component
  // of the terminals already give mutual reachability, so both modes share
  // one optimum and one witness.
  (void)options.mode;
  const SearchOutcome out = search(d, m, s, options.expansion_budget);
  result.value = m.to_rational(out.cost);
  result.witness = out.arcs;
  return result;
}

std::vector<Length> digraph_steiner_table(const Digraph& d, const DistanceMatrix& m, int max_k,
                                          std::uint64_t expansion_budget) {
  const int n = d.order();
  if (n > kTableMaxOrder) throw ResourceError("all-subsets digraph Steiner table supports order <= 14");
  require_strong(m);
  (void)max_k;
  const std::size_t masks = std::size_t{1} << n;
  std::vector<Length> exact(masks, kInf);
  EarEnumerator ears(d, m, expansion_budget);
  for (int r = 0; r < n; ++r) {
    // Sets whose smallest vertex is r; ears only use vertices above r.
    const Mask above = static_cast<Mask>((masks - 1) & ~((std::size_t{2} << r) - 1));
    exact[std::size_t{1} << r] = 0;
    for (std::size_t u = std::size_t{1} << r; u < masks; ++u) {
      if (static_cast<int>(__builtin_ctzll(u)) != r || exact[u] >= kInf) continue;
      for (const auto& [interior, ear] : ears.run(static_cast<Mask>(u), above, kInf, false)) {
        const std::size_t next = u | interior;
        exact[next] = std::min(exact[next], exact[u] + ear.cost);
      }
    }
  }
  // Superset closure.
  for (int b = 0; b < n; ++b) {
    for (std::size_t u = 0; u < masks; ++u) {
      if (!((u >> b) & 1)) exact[u] = std::min(exact[u], exact[u | (std::size_t{1} << b)]);
    }
  }
  exact[0] = 0;
  return exact;
}

namespace {

detail::SubsetAggregate digraph_steiner_aggregate(const Digraph& d, int k, int threads) {
  const int n = d.order();
  detail::check_k_range(n, k, 2);
  const DistanceMatrix m = apsp(d, threads);
  require_strong(m);
  const std::string what = "digraph Steiner index";
  detail::checked_subset_count(n, k, what);
  if (n <= kTableMaxOrder) {
    const std::vector<Length> table = digraph_steiner_table(d, m, k);
    return detail::aggregate_subsets(n, k, threads, false, what, [&] {
      return [&](std::span<const Vertex> c) {
        std::uint32_t mask = 0;
        for (Vertex v : c) mask |= 1u << v;
        return table[mask];
      };
    });
  }
  if (n > kMaxOrder) throw ResourceError("digraph Steiner search supports order <= 30");
  return detail::aggregate_subsets(n, k, threads, false, what, [&] {
    return [&](std::span<const Vertex> c) {
      return search(d, m, VertexSet(std::vector<Vertex>(c.begin(), c.end())), 200'000'000).cost;
    };
  });
}

}  // namespace

Rational steiner_wiener(const Digraph& d, int k, int threads) {
  return detail::aggregate_sum(digraph_steiner_aggregate(d, k, threads), d.scale());
}

Rational steiner_mean(const Digraph& d, int k, int threads) {
  return steiner_wiener(d, k, threads) / Rational(binomial(d.order(), k));
}

}  // namespace ktsp
