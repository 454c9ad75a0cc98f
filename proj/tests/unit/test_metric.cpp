#include <gtest/gtest.h>

#include "ktsp/errors.hpp"
#include "ktsp/families.hpp"
#include "ktsp/io.hpp"
#include "ktsp/metric.hpp"
#include "ktsp/random.hpp"
#include "support/oracles.hpp"

using namespace ktsp;

namespace {

template <bool Directed>
void expect_matches_floyd(const BasicGraph<Directed>& g) {
  const DistanceMatrix m = apsp(g);
  const auto ref = oracle::floyd(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      ASSERT_EQ(m.reachable(u, v), ref[u][v].has_value());
      if (ref[u][v]) EXPECT_EQ(m.value(u, v), *ref[u][v]);
    }
  }
}

}  // namespace

TEST(Metric, SmallExamples) {
  EXPECT_EQ(apsp(path_graph(4)).value(0, 3), 3);
  const DpDigraph dp = dp_digraph(20, 6);
  EXPECT_EQ(apsp(dp.graph).value(dp.leaves[0], dp.leaves[1]), 6);
  const Graph w = parse_edge_list_graph("0 1 1\n1 2 2");
  EXPECT_EQ(apsp(w).value(0, 2), 3);
  EXPECT_EQ(apsp(w).scale(), 1);
  const Graph half = parse_edge_list_graph("0 1 1/2\n1 2 1/3\n0 2 1");
  EXPECT_EQ(apsp(half).value(0, 2), Rational(5, 6));
}

TEST(Metric, WienerAndMean) {
  EXPECT_EQ(wiener(apsp(complete_graph(5))), 10);
  EXPECT_EQ(wiener(apsp(path_graph(4))), 10);
  EXPECT_EQ(wiener(apsp(star_graph(5))), 16);
  for (int n = 2; n <= 20; ++n) {
    EXPECT_EQ(mean_distance(apsp(complete_graph(n))), 1);
    EXPECT_EQ(mean_distance(apsp(star_graph(n))), Rational(2 * (n - 1), n));
    EXPECT_EQ(mean_distance(apsp(path_graph(n))), Rational(n + 1, 3));
  }
  EXPECT_EQ(mean_distance(apsp(path_graph(4))), Rational(5, 3));
  // Ordered pairs for digraphs: the directed n-cycle averages n/2.
  EXPECT_EQ(mean_distance(apsp(directed_cycle(6))), 3);
}

TEST(Metric, MatchesFloydOnRandomInputs) {
  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    RandomGraphOptions o;
    o.order = 2 + static_cast<int>(uniform_below(rng, 10));
    o.weighted = i % 2 == 0;
    o.allow_zero_weight = i % 3 == 0;
    expect_matches_floyd(random_connected_graph(rng, o));
    expect_matches_floyd(random_strongly_connected_digraph(rng, o));
  }
}

TEST(Metric, MetricAxiomsAndRelabelInvariance) {
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    RandomGraphOptions o;
    o.order = 3 + static_cast<int>(uniform_below(rng, 12));
    o.weighted = true;
    const Graph g = random_connected_graph(rng, o);
    const DistanceMatrix m = apsp(g);
    for (Vertex a = 0; a < g.order(); ++a) {
      EXPECT_EQ(m.scaled(a, a), 0);
      for (Vertex b = 0; b < g.order(); ++b) {
        EXPECT_EQ(m.scaled(a, b), m.scaled(b, a));
        for (Vertex c = 0; c < g.order(); ++c) EXPECT_LE(m.scaled(a, c), m.scaled(a, b) + m.scaled(b, c));
      }
    }
    const auto perm = random_permutation(rng, g.order());
    EXPECT_EQ(wiener(apsp(relabel(g, perm))), wiener(m));
  }
}

TEST(Metric, ThreadsDoNotChangeResult) {
  Rng rng(8);
  RandomGraphOptions o;
  o.order = 60;
  o.weighted = true;
  const Graph g = random_connected_graph(rng, o);
  EXPECT_EQ(apsp(g, 1), apsp(g, 4));
}

TEST(Metric, Unreachable) {
  const Graph split(4, {{0, 1}, {2, 3}});
  const DistanceMatrix m = apsp(split);
  EXPECT_FALSE(m.all_reachable());
  EXPECT_FALSE(m.at(0, 2).reachable());
  EXPECT_EQ(m.at(0, 2), Distance::unreachable());
  EXPECT_THROW(m.at(0, 2).scaled(), PreconditionError);
  try {
    wiener(m);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("graph not connected"), std::string::npos);
  }
  const Digraph one_way(2, {{0, 1}});
  EXPECT_TRUE(apsp(one_way).reachable(0, 1));
  EXPECT_FALSE(apsp(one_way).reachable(1, 0));
}
