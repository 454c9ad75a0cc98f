#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ktsp/graph.hpp"
#include "ktsp/metric.hpp"
#include "ktsp/rational.hpp"

namespace ktsp {

/// `order` starts at the smallest member; the tour returns to it.
struct TspResult {
  Rational value;
  std::vector<Vertex> order;
};

/// Held-Karp on the metric closure, anchored at the smallest member.
/// Reusable buffers; one solver per thread.
class TspSolver {
 public:
  static constexpr int kMaxK = 24;

  explicit TspSolver(const DistanceMatrix& m) : m_(m) {}

  /// Scaled optimum. Members in any order.
  Length length(std::span<const Vertex> members);
  /// Optimum with the lexicographically smallest optimal order.
  TspResult solve(const VertexSet& s);

 private:
  void prepare(std::span<const Vertex> members);
  void fill_cost_to_go();

  const DistanceMatrix& m_;
  std::vector<Vertex> set_;
  std::vector<Length> h_;  // [mask][j] cost to go, anchor excluded
};

TspResult tsp_distance(const DistanceMatrix& m, const VertexSet& s);

/// tsp of every vertex set of size <= max_k, indexed by bitmask. Requires
/// order <= 16 and all pairs reachable.
std::vector<Length> tsp_table(const DistanceMatrix& m, int max_k);

/// Budget: C(n,k) <= 10^8. Throws PreconditionError when some pair is
/// unreachable.
Rational tsp_wiener(const DistanceMatrix& m, int k, int threads = 1);
Rational tsp_wiener(const Graph& g, int k, int threads = 1);
Rational tsp_wiener(const Digraph& d, int k, int threads = 1);
Rational tsp_mean(const DistanceMatrix& m, int k, int threads = 1);
Rational tsp_mean(const Graph& g, int k, int threads = 1);
Rational tsp_mean(const Digraph& d, int k, int threads = 1);
EccentricityProfile tsp_eccentricity(const DistanceMatrix& m, int k, int threads = 1);
EccentricityProfile tsp_eccentricity(const Graph& g, int k, int threads = 1);
EccentricityProfile tsp_eccentricity(const Digraph& d, int k, int threads = 1);

struct TspEstimate {
  Rational estimate;
  /// Exact sample variance divided by the sample count (0 for one sample).
  Rational variance_of_mean;
  /// sqrt(variance_of_mean); display and tolerance checks only.
  double standard_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Mean of tsp over `samples` uniform k-subsets. Samples are drawn in blocks
/// of 65536 with one derived stream per block, so the result is independent
/// of `threads`.
TspEstimate tsp_mean_estimate(const DistanceMatrix& m, int k, std::uint64_t samples, std::uint64_t seed,
                              int threads = 1);

}  // namespace ktsp
