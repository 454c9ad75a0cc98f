#include "ktsp/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aggregate.hpp"
#include "ktsp/errors.hpp"
#include "ktsp/random.hpp"

namespace ktsp {

namespace {

constexpr Length kInf = std::numeric_limits<Length>::max() / 4;
constexpr int kTableMaxOrder = 16;
constexpr std::uint64_t kSampleBlock = 1u << 16;

Length dist(const DistanceMatrix& m, Vertex u, Vertex v) {
  const Length x = m.row(u)[v];
  if (x < 0) {
    throw PreconditionError("vertex " + std::to_string(v) + " unreachable from " + std::to_string(u));
  }
  return x;
}

}  // namespace

void TspSolver::prepare(std::span<const Vertex> members) {
  if (static_cast<int>(members.size()) > kMaxK) {
    throw ResourceError("Held-Karp budget is k <= 24 (2^k states)");
  }
  set_.assign(members.begin(), members.end());
  std::sort(set_.begin(), set_.end());
  for (Vertex v : set_) {
    if (v < 0 || v >= m_.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
  for (std::size_t i = 1; i < set_.size(); ++i) {
    if (set_[i] == set_[i - 1]) throw PreconditionError("duplicate vertex in set");
  }
}

void TspSolver::fill_cost_to_go() {
  const int q = static_cast<int>(set_.size()) - 1;
  const std::size_t masks = std::size_t{1} << q;
  const auto qq = static_cast<std::size_t>(q);
  h_.assign(masks * qq, kInf);
  const Vertex anchor = set_[0];
  // Distances among members, reachability checked once.
  std::vector<Length> d(qq * qq);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) d[i * qq + j] = i == j ? 0 : dist(m_, set_[i + 1], set_[j + 1]);
  }
  const std::size_t full = masks - 1;
  for (int j = 0; j < q; ++j) h_[full * qq + j] = dist(m_, set_[j + 1], anchor);
  for (std::size_t mask = full; mask-- > 1;) {
    Length* row = h_.data() + mask * qq;
    for (int j = 0; j < q; ++j) {
      if (!((mask >> j) & 1)) continue;
      Length best = kInf;
      for (int l = 0; l < q; ++l) {
        if ((mask >> l) & 1) continue;
        best = std::min(best, d[j * qq + l] + h_[(mask | (std::size_t{1} << l)) * qq + l]);
      }
      row[j] = best;
    }
  }
}

Length TspSolver::length(std::span<const Vertex> members) {
  const std::size_t k = members.size();
  if (k <= 1) return 0;
  if (k == 2) return dist(m_, members[0], members[1]) + dist(m_, members[1], members[0]);
  if (k == 3) {
    const Vertex a = members[0], b = members[1], c = members[2];
    return std::min(dist(m_, a, b) + dist(m_, b, c) + dist(m_, c, a),
                    dist(m_, a, c) + dist(m_, c, b) + dist(m_, b, a));
  }
  prepare(members);
  fill_cost_to_go();
  const int q = static_cast<int>(set_.size()) - 1;
  Length best = kInf;
  for (int j = 0; j < q; ++j) {
    best = std::min(best, dist(m_, set_[0], set_[j + 1]) + h_[(std::size_t{1} << j) * q + j]);
  }
  return best;
}

TspResult TspSolver::solve(const VertexSet& s) {
  s.validate(m_.order());
  TspResult result;
  result.order.assign(s.begin(), s.end());
  if (s.size() == 1) {
    result.value = 0;
    return result;
  }
  prepare(s.members());
  fill_cost_to_go();
  const int q = static_cast<int>(set_.size()) - 1;
  const auto qq = static_cast<std::size_t>(q);
  Length remaining = kInf;
  for (int j = 0; j < q; ++j) {
    remaining = std::min(remaining, dist(m_, set_[0], set_[j + 1]) + h_[(std::size_t{1} << j) * qq + j]);
  }
  result.value = m_.to_rational(remaining);
  result.order = {set_[0]};
  std::size_t mask = 0;
  Vertex cur = set_[0];
  for (int step = 0; step < q; ++step) {
    for (int l = 0; l < q; ++l) {
      if ((mask >> l) & 1) continue;
      const std::size_t next = mask | (std::size_t{1} << l);
      const Length leg = dist(m_, cur, set_[l + 1]);
      if (leg + h_[next * qq + l] == remaining) {
        remaining -= leg;
        mask = next;
        cur = set_[l + 1];
        result.order.push_back(cur);
        break;
      }
    }
  }
  return result;
}

TspResult tsp_distance(const DistanceMatrix& m, const VertexSet& s) {
  TspSolver solver(m);
  return solver.solve(s);
}

std::vector<Length> tsp_table(const DistanceMatrix& m, int max_k) {
  const int n = m.order();
  if (n > kTableMaxOrder) throw ResourceError("all-subsets TSP table supports order <= 16");
  if (!m.all_reachable()) throw PreconditionError("graph not connected");
  max_k = std::clamp(max_k, 1, n);
  const std::size_t masks = std::size_t{1} << n;
  const auto nn = static_cast<std::size_t>(n);
  // f[mask][j]: shortest path from the lowest member of mask through all of
  // mask, ending at j.
  std::vector<Length> f(masks * nn, kInf);
  std::vector<Length> table(masks, 0);
  for (std::size_t mask = 1; mask < masks; ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size > max_k) continue;
    const int low = __builtin_ctzll(mask);
    Length* row = f.data() + mask * nn;
    if (size == 1) {
      row[low] = 0;
      continue;
    }
    for (std::size_t rest = mask & (mask - 1); rest != 0; rest &= rest - 1) {
      const int j = __builtin_ctzll(rest);
      const std::size_t prev = mask ^ (std::size_t{1} << j);
      const Length* prow = f.data() + prev * nn;
      Length best = kInf;
      for (std::size_t it = prev; it != 0; it &= it - 1) {
        const int i = __builtin_ctzll(it);
        if (prow[i] < kInf) best = std::min(best, prow[i] + m.row(i)[j]);
      }
      row[j] = best;
    }
    Length best = kInf;
    for (std::size_t rest = mask & (mask - 1); rest != 0; rest &= rest - 1) {
      const int j = __builtin_ctzll(rest);
      best = std::min(best, row[j] + m.row(j)[low]);
    }
    table[mask] = best;
  }
  return table;
}

namespace {

detail::SubsetAggregate tsp_aggregate(const DistanceMatrix& m, int k, int threads, bool want_ecc) {
  const int n = m.order();
  detail::check_k_range(n, k, 1);
  if (!m.all_reachable()) {
    throw PreconditionError(m.symmetric() ? "graph not connected" : "digraph not strongly connected");
  }
  const std::string what = "TSP index";
  detail::checked_subset_count(n, k, what);
  if (n <= kTableMaxOrder) {
    const std::vector<Length> table = tsp_table(m, k);
    return detail::aggregate_subsets(n, k, threads, want_ecc, what, [&] {
      return [&](std::span<const Vertex> c) {
        std::uint32_t mask = 0;
        for (Vertex v : c) mask |= 1u << v;
        return table[mask];
      };
    });
  }
  return detail::aggregate_subsets(n, k, threads, want_ecc, what, [&] {
    return [solver = TspSolver(m)](std::span<const Vertex> c) mutable { return solver.length(c); };
  });
}

}  // namespace

Rational tsp_wiener(const DistanceMatrix& m, int k, int threads) {
  detail::check_k_range(m.order(), k, 2);
  return detail::aggregate_sum(tsp_aggregate(m, k, threads, false), m.scale());
}

Rational tsp_wiener(const Graph& g, int k, int threads) { return tsp_wiener(apsp(g, threads), k, threads); }
Rational tsp_wiener(const Digraph& d, int k, int threads) { return tsp_wiener(apsp(d, threads), k, threads); }

Rational tsp_mean(const DistanceMatrix& m, int k, int threads) {
  return tsp_wiener(m, k, threads) / Rational(binomial(m.order(), k));
}
Rational tsp_mean(const Graph& g, int k, int threads) { return tsp_mean(apsp(g, threads), k, threads); }
Rational tsp_mean(const Digraph& d, int k, int threads) { return tsp_mean(apsp(d, threads), k, threads); }

EccentricityProfile tsp_eccentricity(const DistanceMatrix& m, int k, int threads) {
  detail::check_k_range(m.order(), k, 1);
  return detail::to_profile(tsp_aggregate(m, k, threads, true), m.order(), k, m.scale());
}
EccentricityProfile tsp_eccentricity(const Graph& g, int k, int threads) {
  return tsp_eccentricity(apsp(g, threads), k, threads);
}
EccentricityProfile tsp_eccentricity(const Digraph& d, int k, int threads) {
  return tsp_eccentricity(apsp(d, threads), k, threads);
}

TspEstimate tsp_mean_estimate(const DistanceMatrix& m, int k, std::uint64_t samples, std::uint64_t seed,
                              int threads) {
  const int n = m.order();
  detail::check_k_range(n, k, 1);
  if (samples < 1) throw PreconditionError("samples must be at least 1");
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  struct Part {
    __int128 sum = 0;
    __int128 sumsq = 0;
  };
  std::vector<Part> parts(blocks);
  parallel_for_chunks(blocks, threads, [&](std::size_t b) {
    Rng rng(derive_seed(seed, b));
    TspSolver solver(m);
    const std::uint64_t count = std::min(kSampleBlock, samples - b * kSampleBlock);
    Part& p = parts[b];
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::vector<Vertex> s = sample_subset(rng, n, k);
      const Length x = solver.length(s);
      p.sum += x;
      p.sumsq += static_cast<__int128>(x) * x;
    }
  });
  BigInt sum = 0, sumsq = 0;
  for (const Part& p : parts) {
    sum += to_bigint(p.sum);
    sumsq += to_bigint(p.sumsq);
  }
  const BigInt nsamp(samples);
  const BigInt scale(m.scale());
  TspEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.estimate = Rational(sum, nsamp * scale);
  if (samples > 1) {
    out.variance_of_mean = Rational(nsamp * sumsq - sum * sum, nsamp * nsamp * (nsamp - 1) * scale * scale);
  } else {
    out.variance_of_mean = 0;
  }
  out.standard_error = std::sqrt(out.variance_of_mean.convert_to<double>());
  return out;
}

}  // namespace ktsp
