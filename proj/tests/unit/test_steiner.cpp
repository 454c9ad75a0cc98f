#include <gtest/gtest.h>

#include <numeric>

#include "ktsp/errors.hpp"
#include "ktsp/enumerate.hpp"
#include "ktsp/families.hpp"
#include "ktsp/io.hpp"
#include "ktsp/random.hpp"
#include "ktsp/steiner.hpp"
#include "support/oracles.hpp"

using namespace ktsp;

namespace {

// The witness must be a tree of the claimed weight spanning the terminals.
void expect_valid_witness(const Graph& g, const VertexSet& s, const SteinerResult& r) {
  Rational total = 0;
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e : r.witness) {
    total += g.weight(e);
    const int a = find(g.edges()[e].u), b = find(g.edges()[e].v);
    ASSERT_NE(a, b) << "witness has a cycle";
    parent[a] = b;
  }
  EXPECT_EQ(total, r.value);
  for (Vertex v : s) EXPECT_EQ(find(v), find(s[0]));
}

}  // namespace

TEST(Steiner, SmallExamples) {
  EXPECT_EQ(steiner_distance(path_graph(6), {1, 4}).value, 3);
  EXPECT_EQ(steiner_distance(star_graph(5), {1, 2, 3}).value, 3);
  EXPECT_EQ(steiner_distance(cycle_graph(6), {0, 2, 4}).value, 4);
  EXPECT_EQ(steiner_distance(complete_graph(5), {0}).value, 0);
  EXPECT_EQ(steiner_distance_tree_fast(path_graph(5), {0, 4}), 4);
  const BroomTree t = broom_tree(6);
  EXPECT_EQ(steiner_distance_tree_fast(t.graph, VertexSet({t.tips[0], t.tips[1], t.tips[2]})), 6);
  EXPECT_THROW(steiner_distance_tree_fast(cycle_graph(4), {0, 2}), PreconditionError);
  EXPECT_THROW(steiner_distance(path_graph(3), {0, 3}), PreconditionError);
}

TEST(Steiner, WienerIdentities) {
  EXPECT_EQ(steiner_wiener(complete_graph(4), 3), 8);
  EXPECT_EQ(steiner_wiener(star_graph(5), 3), 24);
  for (int n = 3; n <= 12; ++n) {
    for (int k = 2; k <= std::min(n, 6); ++k) {
      EXPECT_EQ(steiner_mean(complete_graph(n), k), k - 1);
      EXPECT_EQ(steiner_mean(path_graph(n), k), Rational((k - 1) * (n + 1), k + 1));
    }
    EXPECT_EQ(steiner_wiener(path_graph(n), 2), wiener(apsp(path_graph(n))));
  }
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const Graph t = random_tree(rng, 3 + static_cast<int>(uniform_below(rng, 18)));
    EXPECT_EQ(steiner_wiener(t, 3), Rational(t.order() - 2, 2) * wiener(apsp(t)));
  }
}

TEST(Steiner, MatchesSupersetOracleOnWeightedGraphs) {
  Rng rng(17);
  for (int i = 0; i < 80; ++i) {
    RandomGraphOptions o;
    o.order = 3 + static_cast<int>(uniform_below(rng, 7));
    o.weighted = i % 4 != 0;
    o.allow_zero_weight = i % 5 == 0;
    const Graph g = random_connected_graph(rng, o);
    const int k = 2 + static_cast<int>(uniform_below(rng, std::min(4, g.order() - 1)));
    const auto members = sample_subset(rng, g.order(), k);
    const VertexSet s(members);
    const SteinerResult r = steiner_distance(g, s);
    EXPECT_EQ(r.value, oracle::steiner_supersets(g, members)) << encode_edge_list(g) << s.to_string();
    expect_valid_witness(g, s, r);
  }
}

TEST(Steiner, TableMatchesSolver) {
  Rng rng(2);
  for (int i = 0; i < 15; ++i) {
    RandomGraphOptions o;
    o.order = 4 + static_cast<int>(uniform_below(rng, 8));
    o.weighted = true;
    const Graph g = random_connected_graph(rng, o);
    const DistanceMatrix m = apsp(g);
    const auto table = steiner_table(g, m, 4);
    SteinerSolver solver(g, m);
    for (int k = 1; k <= 4; ++k) {
      for (const auto& s : oracle::subsets(g.order(), k)) EXPECT_EQ(table[oracle::mask_of(s)], solver.length(s));
    }
  }
}

TEST(Steiner, TreeMethodMatchesEdgeCuts) {
  Rng rng(9);
  for (int i = 0; i < 25; ++i) {
    const Graph t = random_tree(rng, 5 + static_cast<int>(uniform_below(rng, 30)));
    for (int k = 2; k <= 4; ++k) EXPECT_EQ(steiner_wiener(t, k), oracle::tree_steiner_wiener(t, k));
  }
  for (int d = 6; d <= 12; d += 6) {
    const Graph t = broom_tree(d).graph;
    EXPECT_EQ(steiner_wiener(t, 4), oracle::tree_steiner_wiener(t, 4));
  }
}

TEST(Steiner, EdgeAdditionNeverIncreases) {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    RandomGraphOptions o;
    o.order = 7;
    o.extra_edge_permille = 100;
    const Graph g = random_connected_graph(rng, o);
    Graph h = g;
    for (Vertex u = 0; u < 7 && h.size() == g.size(); ++u) {
      for (Vertex v = u + 1; v < 7; ++v) {
        if (!g.has_edge(u, v)) {
          h = with_edge(g, {u, v});
          break;
        }
      }
    }
    for (int k = 2; k <= 5; ++k) EXPECT_LE(steiner_wiener(h, k), steiner_wiener(g, k));
  }
}

TEST(Steiner, Eccentricity) {
  const EccentricityProfile p = steiner_eccentricity(path_graph(5), 2);
  EXPECT_EQ(p.ecc, (std::vector<Rational>{4, 3, 2, 3, 4}));
  EXPECT_EQ(p.radius, 2);
  EXPECT_EQ(p.diameter, 4);
}

TEST(DigraphSteiner, SmallExamples) {
  EXPECT_EQ(steiner_distance_digraph(directed_cycle(3), {0, 1}).value, 3);
  EXPECT_EQ(steiner_distance_digraph(directed_cycle(5), {0}).value, 0);
  for (int d = 4; d <= 8; ++d) {
    const DpDigraph dp = dp_digraph(d + 6, d);
    EXPECT_EQ(steiner_distance_digraph(dp.graph, VertexSet({dp.leaves[0], dp.leaves[1]})).value, d + 2);
    const VertexSet leaves(std::vector<Vertex>(dp.leaves.begin(), dp.leaves.begin() + 4));
    EXPECT_EQ(steiner_distance_digraph(dp.graph, leaves).value, d - 2 + 8);
  }
}

TEST(DigraphSteiner, MatchesArcSubsetOracle) {
  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    RandomGraphOptions o;
    o.order = 2 + static_cast<int>(uniform_below(rng, 4));
    o.extra_edge_permille = 250;
    o.weighted = i % 2 == 0;
    const Digraph d = random_strongly_connected_digraph(rng, o);
    if (d.size() > 16) continue;
    const int k = 2 + static_cast<int>(uniform_below(rng, d.order() - 1));
    const auto members = sample_subset(rng, d.order(), k);
    const Rational expected = oracle::steiner_arc_subsets(d, members);
    EXPECT_EQ(steiner_distance_digraph(d, VertexSet(members)).value, expected);
    DigraphSteinerOptions strong;
    strong.mode = DigraphSteinerMode::StronglyConnected;
    EXPECT_EQ(steiner_distance_digraph(d, VertexSet(members), strong).value, expected);
  }
}

TEST(DigraphSteiner, TableMatchesSearch) {
  Rng rng(19);
  for (int i = 0; i < 6; ++i) {
    RandomGraphOptions o;
    o.order = 6;
    const Digraph d = random_strongly_connected_digraph(rng, o);
    const auto table = digraph_steiner_table(d, apsp(d), 3);
    for (int k = 2; k <= 3; ++k) {
      for (const auto& s : oracle::subsets(6, k)) {
        EXPECT_EQ(table[oracle::mask_of(s)], steiner_distance_digraph(d, VertexSet(s)).value);
      }
    }
  }
}

TEST(DigraphSteiner, BudgetIsEnforced) {
  DigraphSteinerOptions tiny;
  tiny.expansion_budget = 1;
  const DpDigraph dp = dp_digraph(12, 5);
  EXPECT_THROW(steiner_distance_digraph(dp.graph, VertexSet({dp.leaves[0], dp.leaves[1], dp.leaves[2]}), tiny),
               ResourceError);
}
