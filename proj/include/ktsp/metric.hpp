#pragma once

#include <cstdint>
#include <vector>

#include "ktsp/graph.hpp"
#include "ktsp/rational.hpp"

namespace ktsp {

/// A shortest-path distance or the distinguished value "unreachable".
/// Deliberately has no arithmetic: extract `scaled()` once reachability is
/// established.
class Distance {
 public:
  static Distance unreachable() noexcept { return Distance(); }
  explicit Distance(Length scaled) noexcept : scaled_(scaled) {}

  bool reachable() const noexcept { return scaled_ >= 0; }
  /// Throws PreconditionError when unreachable.
  Length scaled() const;

  friend bool operator==(const Distance&, const Distance&) = default;

 private:
  Distance() = default;
  Length scaled_ = -1;
};

/// n x n shortest-path lengths in units of 1/scale().
class DistanceMatrix {
 public:
  /// Sentinel stored in raw rows for unreachable pairs.
  static constexpr Length kUnreachable = -1;

  DistanceMatrix(int order, bool symmetric, Length scale, std::vector<Length> entries);

  int order() const noexcept { return n_; }
  bool symmetric() const noexcept { return symmetric_; }
  Length scale() const noexcept { return scale_; }
  bool all_reachable() const noexcept { return all_reachable_; }

  Distance at(Vertex u, Vertex v) const noexcept { return Distance(entries_[index(u, v)]); }
  bool reachable(Vertex u, Vertex v) const noexcept { return entries_[index(u, v)] >= 0; }
  /// Throws PreconditionError when unreachable.
  Length scaled(Vertex u, Vertex v) const;
  /// Exact value; throws PreconditionError when unreachable.
  Rational value(Vertex u, Vertex v) const;
  Rational to_rational(Length scaled_length) const { return Rational(scaled_length, scale_); }

  /// Raw row; entries equal kUnreachable where there is no path.
  const Length* row(Vertex u) const noexcept { return entries_.data() + index(u, 0); }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_;
  bool symmetric_;
  Length scale_;
  std::vector<Length> entries_;
  bool all_reachable_;
};

/// BFS when unweighted, Dijkstra otherwise. Sources are split across
/// `threads` workers; the result does not depend on the split.
DistanceMatrix apsp(const Graph& g, int threads = 1);
DistanceMatrix apsp(const Digraph& d, int threads = 1);

/// Symmetric: sum over unordered pairs. Asymmetric: sum over ordered pairs.
/// Throws PreconditionError("graph not connected") on an unreachable pair.
Rational wiener(const DistanceMatrix& m);

/// Symmetric: W / C(n,2). Asymmetric: W / (n(n-1)), the ordered-pair mean.
Rational mean_distance(const DistanceMatrix& m);

/// Per-vertex maxima of a k-set invariant over the sets containing the
/// vertex, with one maximizing set per vertex.
struct EccentricityProfile {
  std::vector<Rational> ecc;
  std::vector<VertexSet> witness;
  Rational radius;
  Rational diameter;
};

}  // namespace ktsp
