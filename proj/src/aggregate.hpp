#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ktsp/errors.hpp"
#include "ktsp/graph.hpp"
#include "ktsp/metric.hpp"
#include "ktsp/parallel.hpp"
#include "ktsp/rational.hpp"
#include "ktsp/subsets.hpp"

namespace ktsp::detail {

inline constexpr std::uint64_t kMaxSubsetEnumeration = 100'000'000;
inline constexpr std::uint64_t kSubsetChunk = 1u << 16;

inline std::uint64_t checked_subset_count(int n, int k, const std::string& what) {
  const std::uint64_t total = binomial_saturating(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  if (total > kMaxSubsetEnumeration) {
    throw ResourceError(what + ": C(" + std::to_string(n) + "," + std::to_string(k) +
                        ") exceeds the exact enumeration budget of 10^8 sets; use the sampler");
  }
  return total;
}

inline void check_k_range(int n, int k, int min_k) {
  if (k < min_k || k > n) {
    throw PreconditionError("k = " + std::to_string(k) + " outside [" + std::to_string(min_k) + ", n = " +
                            std::to_string(n) + "]");
  }
}

struct SubsetAggregate {
  __int128 sum = 0;
  std::uint64_t count = 0;
  /// -1 until a set containing the vertex is seen.
  std::vector<Length> ecc;
  /// Lexicographic rank of the first set attaining ecc.
  std::vector<std::uint64_t> ecc_rank;
};

/// Folds a per-set length over all k-subsets of {0..n-1} in lexicographic
/// rank order. make_eval() builds one evaluator per chunk; the reduction is
/// in chunk order, so the result (including the earliest-rank witnesses)
/// does not depend on `threads`.
template <class MakeEval>
SubsetAggregate aggregate_subsets(int n, int k, int threads, bool want_ecc, const std::string& what,
                                  MakeEval&& make_eval) {
  const std::uint64_t total = checked_subset_count(n, k, what);
  const std::uint64_t chunks = (total + kSubsetChunk - 1) / kSubsetChunk;
  std::vector<SubsetAggregate> parts(chunks);
  parallel_for_chunks(chunks, threads, [&](std::size_t c) {
    auto eval = make_eval();
    SubsetAggregate& part = parts[c];
    if (want_ecc) {
      part.ecc.assign(static_cast<std::size_t>(n), -1);
      part.ecc_rank.assign(static_cast<std::size_t>(n), 0);
    }
    const std::uint64_t first = c * kSubsetChunk;
    const std::uint64_t last = std::min(total, first + kSubsetChunk);
    std::vector<Vertex> comb = unrank_combination(n, k, first);
    for (std::uint64_t r = first; r < last; ++r) {
      const Length x = eval(std::span<const Vertex>(comb));
      part.sum += x;
      if (want_ecc) {
        for (Vertex v : comb) {
          if (x > part.ecc[v]) {
            part.ecc[v] = x;
            part.ecc_rank[v] = r;
          }
        }
      }
      next_combination(comb, n);
    }
    part.count = last - first;
  });
  SubsetAggregate out;
  if (want_ecc) {
    out.ecc.assign(static_cast<std::size_t>(n), -1);
    out.ecc_rank.assign(static_cast<std::size_t>(n), 0);
  }
  for (const SubsetAggregate& part : parts) {
    out.sum += part.sum;
    out.count += part.count;
    if (want_ecc) {
      for (int v = 0; v < n; ++v) {
        if (part.ecc[v] > out.ecc[v]) {
          out.ecc[v] = part.ecc[v];
          out.ecc_rank[v] = part.ecc_rank[v];
        }
      }
    }
  }
  return out;
}

inline Rational aggregate_sum(const SubsetAggregate& a, Length scale) {
  return Rational(to_bigint(a.sum), BigInt(scale));
}

inline EccentricityProfile to_profile(const SubsetAggregate& a, int n, int k, Length scale) {
  EccentricityProfile p;
  for (int v = 0; v < n; ++v) {
    p.ecc.emplace_back(a.ecc[v], scale);
    p.witness.emplace_back(unrank_combination(n, k, a.ecc_rank[v]));
  }
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  return p;
}

}  // namespace ktsp::detail
