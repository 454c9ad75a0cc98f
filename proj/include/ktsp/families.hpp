#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ktsp/graph.hpp"

namespace ktsp {

enum class FamilyId { Path, Cycle, Star, Clique, Kab, Broom, Dp };

std::string_view family_name(FamilyId id);

/// "name:p1,p2,..." with name one of path, cycle, star, clique, kab, broom, dp.
struct FamilySpec {
  FamilyId id = FamilyId::Path;
  std::vector<int> params;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  bool directed() const noexcept { return id == FamilyId::Dp; }
  /// Throws PreconditionError naming the violated constraint.
  void validate() const;
  int order() const;
};

AnyGraph make_family(const FamilySpec& spec);

Graph path_graph(int n);
/// n >= 3.
Graph cycle_graph(int n);
/// Order n: center 0 and leaves 1..n-1.
Graph star_graph(int n);
Graph complete_graph(int n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);

/// Three identical brooms glued at a center. Handles have d/2 - 1 edges and
/// every tip carries d/6 + 1 pendant leaves.
struct BroomTree {
  Graph graph = Graph(1, {});
  Vertex center = 0;
  std::array<Vertex, 3> tips{};
  std::vector<Vertex> leaves;
  int handle_length = 0;
  int leaves_per_tip = 0;
};

/// d >= 6, d divisible by 6.
BroomTree broom_tree(int d);

/// Directed path v_1 -> ... -> v_{d-1} (vertices 0..d-2) and leaves
/// l_1..l_{n-d+1} (vertices d-1..n-1) with arcs v_{d-1} -> l_i -> v_1.
struct DpDigraph {
  Digraph graph = Digraph(1, {});
  std::vector<Vertex> path;
  std::vector<Vertex> leaves;
};

/// d >= 3, n >= d + 1.
DpDigraph dp_digraph(int n, int d);

/// 0 -> 1 -> ... -> n-1 -> 0, n >= 2.
Digraph directed_cycle(int n);

}  // namespace ktsp
