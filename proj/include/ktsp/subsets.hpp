#pragma once

#include <cstdint>
#include <vector>

#include "ktsp/graph.hpp"
#include "ktsp/rational.hpp"

namespace ktsp {

/// Lexicographic successor of a sorted k-subset of {0..n-1}. Returns false
/// after the last subset.
inline bool next_combination(std::vector<Vertex>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

/// The subset of lexicographic rank `rank` (0-based). Requires C(n,k) < 2^64.
inline std::vector<Vertex> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<Vertex> c;
  c.reserve(static_cast<std::size_t>(k));
  Vertex x = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t with_x =
          binomial_saturating(static_cast<std::uint64_t>(n - x - 1), static_cast<std::uint64_t>(k - i - 1));
      if (rank < with_x) break;
      rank -= with_x;
      ++x;
    }
    c.push_back(x++);
  }
  return c;
}

}  // namespace ktsp
