#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ktsp/graph.hpp"
#include "ktsp/rational.hpp"
#include "ktsp/theorems.hpp"
#include "ktsp/tsp.hpp"

namespace ktsp {

/// Scan theorem ids, in report order.
inline const std::vector<std::string>& scan_theorems() {
  static const std::vector<std::string> ids{"tsp2steiner", "triple", "bounds", "permavg", "wtsp3"};
  return ids;
}

struct ScanOptions {
  /// Enumerated order (<= 7); ignored when `graphs` is set.
  int order = 0;
  int k_min = 2;
  int k_max = 0;
  int threads = 1;
  /// Subset of scan_theorems(); empty means all.
  std::vector<std::string> theorems;
  /// Connected unweighted graphs to scan instead of the enumeration.
  std::optional<std::vector<Graph>> graphs;
};

struct KScanSummary {
  int k = 0;
  std::uint64_t graphs = 0;
  Rational min_mean;
  Rational max_mean;
  /// Isomorphism classes (canonical graph6, sorted) attaining the extremes.
  std::vector<std::string> argmin;
  std::vector<std::string> argmax;
  std::uint64_t argmin_labeled = 0;
  std::uint64_t argmax_labeled = 0;
  std::uint64_t tsp2steiner_equalities = 0;
  std::uint64_t permavg_equalities = 0;
  std::uint64_t lower_equalities = 0;
  std::uint64_t upper_equalities = 0;
};

/// delta(G) >= n+2-k against "every k-subset is Hamiltonian".
struct DegreeFinding {
  int k = 0;
  std::uint64_t graphs_meeting_degree = 0;
  std::uint64_t not_all_hamiltonian = 0;
  std::optional<std::string> example;
  /// Counted as a mismatch when violated (k in {3, 4}).
  bool asserted = false;
};

struct ScanReport {
  int order = 0;
  std::string source;
  std::vector<std::string> theorems;
  std::uint64_t graphs = 0;
  std::vector<KScanSummary> per_k;
  std::uint64_t triple_equalities = 0;
  std::uint64_t wtsp3_checked = 0;
  std::vector<DegreeFinding> degree;
  std::uint64_t failures = 0;
  std::uint64_t mismatches = 0;
  /// The first failing or mismatching verdicts, in scan order.
  std::vector<TheoremVerdict> bundles;

  bool ok() const noexcept { return failures == 0 && mismatches == 0; }
};

ScanReport exhaustive_scan(const ScanOptions& options);

struct DlwOptions {
  int d = 0;
  int k = 4;
  /// Defaults to the cycle of order 2d+1.
  std::optional<Graph> against;
  std::string against_name;
  int threads = 1;
  /// Sampler fallback when an exact run exceeds the enumeration budget.
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
};

struct DlwReport {
  int d = 0;
  int k = 0;
  std::string tree;
  std::string against;
  bool exact = true;
  Rational tree_mean;
  Rational against_mean;
  std::optional<TspEstimate> tree_estimate;
  std::optional<TspEstimate> against_estimate;
  /// 2 c(k): heuristic broom coefficient per d.
  Rational heuristic_coefficient;
  /// 2 (1 - 2^(1-k)): cycle coefficient per d.
  Rational cycle_coefficient;
  /// Random sets where Held-Karp confirmed tsp_k = 2 d_k on the tree.
  std::uint64_t doubling_checked = 0;
  bool tree_beats_against = false;
};

/// Tree T(d) (d divisible by 6, d >= 6) against a graph of the same order.
DlwReport delavina_waller_experiment(const DlwOptions& options);

}  // namespace ktsp
