#include "ktsp/metric.hpp"

#include <algorithm>
#include <queue>

#include "ktsp/errors.hpp"
#include "ktsp/parallel.hpp"

namespace ktsp {

Length Distance::scaled() const {
  if (!reachable()) throw PreconditionError("distance is unreachable");
  return scaled_;
}

DistanceMatrix::DistanceMatrix(int order, bool symmetric, Length scale, std::vector<Length> entries)
    : n_(order), symmetric_(symmetric), scale_(scale), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
    throw PreconditionError("distance matrix has the wrong number of entries");
  }
  all_reachable_ = std::none_of(entries_.begin(), entries_.end(), [](Length x) { return x < 0; });
}

Length DistanceMatrix::scaled(Vertex u, Vertex v) const {
  const Length x = entries_[index(u, v)];
  if (x < 0) {
    throw PreconditionError("vertex " + std::to_string(v) + " is unreachable from " + std::to_string(u));
  }
  return x;
}

Rational DistanceMatrix::value(Vertex u, Vertex v) const { return to_rational(scaled(u, v)); }

namespace {

template <bool Directed>
void single_source(const BasicGraph<Directed>& g, Vertex s, Length* out) {
  const int n = g.order();
  std::fill(out, out + n, DistanceMatrix::kUnreachable);
  out[s] = 0;
  if (!g.weighted()) {
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (const Arc& a : g.out_arcs(v)) {
        if (out[a.to] < 0) {
          out[a.to] = out[v] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return;
  }
  using Item = std::pair<Length, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0, s});
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  while (!heap.empty()) {
    const auto [dist, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = true;
    for (const Arc& a : g.out_arcs(v)) {
      const Length cand = dist + a.weight;
      if (!done[a.to] && (out[a.to] < 0 || cand < out[a.to])) {
        out[a.to] = cand;
        heap.push({cand, a.to});
      }
    }
  }
}

template <bool Directed>
DistanceMatrix apsp_impl(const BasicGraph<Directed>& g, int threads) {
  const int n = g.order();
  std::vector<Length> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  constexpr std::size_t kSourcesPerChunk = 64;
  const std::size_t chunks = (static_cast<std::size_t>(n) + kSourcesPerChunk - 1) / kSourcesPerChunk;
  parallel_for_chunks(chunks, threads, [&](std::size_t c) {
    const auto first = static_cast<Vertex>(c * kSourcesPerChunk);
    const auto last = static_cast<Vertex>(std::min<std::size_t>(n, (c + 1) * kSourcesPerChunk));
    for (Vertex s = first; s < last; ++s) {
      single_source(g, s, entries.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n));
    }
  });
  return DistanceMatrix(n, !Directed, g.scale(), std::move(entries));
}

}  // namespace

DistanceMatrix apsp(const Graph& g, int threads) { return apsp_impl(g, threads); }
DistanceMatrix apsp(const Digraph& d, int threads) { return apsp_impl(d, threads); }

Rational wiener(const DistanceMatrix& m) {
  if (!m.all_reachable()) throw PreconditionError("graph not connected");
  __int128 total = 0;
  const int n = m.order();
  for (Vertex u = 0; u < n; ++u) {
    const Length* row = m.row(u);
    for (Vertex v = m.symmetric() ? u + 1 : 0; v < n; ++v) total += row[v];
  }
  return Rational(to_bigint(total), BigInt(m.scale()));
}

Rational mean_distance(const DistanceMatrix& m) {
  const int n = m.order();
  if (n < 2) throw PreconditionError("mean distance needs n >= 2");
  const BigInt pairs = m.symmetric() ? binomial(n, 2) : BigInt(n) * (n - 1);
  return wiener(m) / Rational(pairs);
}

}  // namespace ktsp
