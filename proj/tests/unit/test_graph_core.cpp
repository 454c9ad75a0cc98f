#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ktsp/enumerate.hpp"
#include "ktsp/errors.hpp"
#include "ktsp/families.hpp"
#include "ktsp/io.hpp"
#include "ktsp/random.hpp"
#include "support/oracles.hpp"

using namespace ktsp;

namespace {

std::vector<Edge> edges_of(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

int bfs_diameter(const Graph& g) {
  int out = 0;
  for (const auto& row : oracle::bfs_distances(g)) out = std::max(out, *std::max_element(row.begin(), row.end()));
  return out;
}

}  // namespace

TEST(Graph6, DecodesSmallStrings) {
  // '?' = 0 and '{' = 60 = 111100: bits (0,4),(1,4),(2,4),(3,4).
  const Graph star = parse_graph6("D?{");
  EXPECT_EQ(star.order(), 5);
  EXPECT_EQ(edges_of(star), (std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(parse_graph6("@").order(), 1);
  EXPECT_EQ(parse_graph6("@").size(), 0u);
  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(edges_of(k2), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), k2);
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6("?"), ParseError);
  EXPECT_THROW(parse_graph6("A"), ParseError);
  EXPECT_THROW(parse_graph6("A__"), ParseError);
  try {
    parse_graph6("D?\x01");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  // Padding bits must be zero: K_2 uses one bit of six.
  EXPECT_THROW(parse_graph6("A`"), ParseError);
}

TEST(Graph6, RoundTripsFamiliesAndRandomGraphs) {
  for (int n = 1; n <= 62; ++n) {
    EXPECT_EQ(parse_graph6(encode_graph6(path_graph(n))), path_graph(n));
    EXPECT_EQ(parse_graph6(encode_graph6(complete_graph(n))), complete_graph(n));
    EXPECT_EQ(parse_graph6(encode_graph6(star_graph(n))), star_graph(n));
    if (n >= 3) EXPECT_EQ(parse_graph6(encode_graph6(cycle_graph(n))), cycle_graph(n));
  }
  for (int d = 6; d <= 30; d += 6) {
    const Graph t = broom_tree(d).graph;
    EXPECT_EQ(parse_graph6(encode_graph6(t)), t);
  }
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    RandomGraphOptions o;
    o.order = 2 + static_cast<int>(uniform_below(rng, 80));
    const Graph g = random_connected_graph(rng, o);
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
  }
}

TEST(Graph6, AcceptsSparse6) {
  // Strings as written by networkx.
  EXPECT_EQ(parse_graph6(":An"), complete_graph(2));
  EXPECT_EQ(parse_graph6(">>sparse6<<:Bd"), path_graph(3));
  EXPECT_EQ(parse_graph6(":FaYnGV\n"), cycle_graph(7));
}

TEST(EdgeList, ParsesSpecExamples) {
  EXPECT_EQ(parse_edge_list_graph("0 1\n1 2"), path_graph(3));
  const Graph w = parse_edge_list_graph("0 1 2.5\n1 2 0.5");
  ASSERT_TRUE(w.weighted());
  EXPECT_EQ(w.weight(0), Rational(5, 2));
  EXPECT_EQ(w.weight(1), Rational(1, 2));
  const Digraph two = parse_edge_list_digraph("0 1\n1 0");
  EXPECT_EQ(two.size(), 2u);
  EXPECT_TRUE(two.has_edge(0, 1));
  EXPECT_TRUE(two.has_edge(1, 0));
  EXPECT_EQ(parse_edge_list_graph("n 4\n# comment\n0 1 1/3\n\n1 2 2\n2 3 0").weight(2), Rational(0));
}

TEST(EdgeList, RejectsBadLines) {
  EXPECT_THROW(parse_edge_list_graph("0 1 -1"), ParseError);
  EXPECT_THROW(parse_edge_list_graph("0 0"), ParseError);
  EXPECT_THROW(parse_edge_list_graph("0 1\n1 0"), ParseError);
  EXPECT_THROW(parse_edge_list_digraph("0 1\n0 1"), ParseError);
  EXPECT_THROW(parse_edge_list_graph("0 1 2\n1 2"), ParseError);
  EXPECT_THROW(parse_edge_list_graph("n 2\n0 5"), ParseError);
  EXPECT_THROW(parse_edge_list_graph("0 3"), ParseError);
  EXPECT_THROW(parse_edge_list_graph("0 x"), ParseError);
}

TEST(EdgeList, RoundTrips) {
  const Graph w = parse_edge_list_graph("0 1 5/2\n1 2 1/3\n0 2 4");
  EXPECT_EQ(parse_edge_list_graph(encode_edge_list(w)), w);
  const Digraph d = dp_digraph(9, 4).graph;
  EXPECT_EQ(parse_edge_list_digraph(encode_edge_list(d)), d);
}

TEST(Families, BroomTreeShape) {
  for (int d = 6; d <= 60; d += 6) {
    const BroomTree b = broom_tree(d);
    EXPECT_EQ(b.graph.order(), 2 * d + 1);
    EXPECT_TRUE(is_tree(b.graph));
    EXPECT_EQ(bfs_diameter(b.graph), d);
    EXPECT_EQ(b.handle_length, d / 2 - 1);
    EXPECT_EQ(b.leaves_per_tip, d / 6 + 1);
  }
  const BroomTree t6 = broom_tree(6);
  EXPECT_EQ(t6.graph.degree(t6.center), 3);
  for (Vertex tip : t6.tips) EXPECT_EQ(t6.graph.degree(tip), 3);
  EXPECT_THROW(broom_tree(8), PreconditionError);
  EXPECT_THROW(broom_tree(0), PreconditionError);
}

TEST(Families, DpDigraphShape) {
  for (int d = 3; d <= 9; ++d) {
    for (int n = d + 1; n <= d + 7; ++n) {
      const DpDigraph dp = dp_digraph(n, d);
      EXPECT_EQ(dp.graph.order(), n);
      EXPECT_EQ(dp.graph.size(), static_cast<std::size_t>((d - 2) + 2 * (n - d + 1)));
      EXPECT_TRUE(is_strongly_connected(dp.graph));
      const auto dist = oracle::bfs_distances(dp.graph);
      EXPECT_EQ(dist[dp.leaves[0]][dp.leaves[1]], d);
    }
  }
  EXPECT_THROW(dp_digraph(5, 5), PreconditionError);
  EXPECT_THROW(dp_digraph(5, 2), PreconditionError);
}

TEST(Families, NamedGraphs) {
  const Graph s5 = star_graph(5);
  EXPECT_EQ(s5.degree(0), 4);
  for (Vertex v = 1; v < 5; ++v) EXPECT_EQ(edges_of(s5)[v - 1], (Edge{0, v}));
  EXPECT_EQ(cycle_graph(3), complete_graph(3));
  EXPECT_EQ(complete_bipartite(2, 3).size(), 6u);
  EXPECT_TRUE(is_path_graph(path_graph(5)));
  EXPECT_TRUE(is_star_graph(star_graph(6)));
  EXPECT_FALSE(is_star_graph(path_graph(4)));
}

TEST(Families, SpecGrammar) {
  const FamilySpec c = FamilySpec::parse("cycle:101");
  EXPECT_EQ(c.id, FamilyId::Cycle);
  EXPECT_EQ(c.order(), 101);
  EXPECT_EQ(FamilySpec::parse("dp:20,6").to_string(), "dp:20,6");
  EXPECT_TRUE(FamilySpec::parse("dp:20,6").directed());
  EXPECT_EQ(FamilySpec::parse("broom:48").order(), 97);
  EXPECT_EQ(std::get<Graph>(make_family(FamilySpec::parse("kab:2,3"))), complete_bipartite(2, 3));
  EXPECT_THROW(FamilySpec::parse("wheel:5"), ParseError);
  EXPECT_THROW(FamilySpec::parse("cycle:x"), ParseError);
  EXPECT_THROW(FamilySpec::parse("cycle:2").validate(), PreconditionError);
  EXPECT_THROW(FamilySpec::parse("broom:7").validate(), PreconditionError);
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t brute = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      const auto d = oracle::bfs_distances(graph_from_edge_mask(n, mask));
      brute += std::none_of(d[0].begin(), d[0].end(), [](int x) { return x < 0; });
    }
    EXPECT_EQ(connected_graph_masks(n).size(), brute) << n;
  }
  EXPECT_EQ(connected_graph_masks(2).size(), 1u);
  EXPECT_EQ(connected_graph_masks(3).size(), 4u);
  EXPECT_EQ(connected_graph_masks(4).size(), 38u);
  EXPECT_EQ(connected_graph_masks(6).size(), 26704u);
}

TEST(Enumerate, StreamOrderAndRanges) {
  ConnectedGraphStream all(5);
  std::vector<std::uint64_t> seen;
  while (auto g = all.next()) {
    EXPECT_TRUE(is_connected(*g));
    EXPECT_EQ(edge_mask_of(*g), all.current_mask());
    seen.push_back(all.current_mask());
  }
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen, connected_graph_masks(5));
  // Splitting the mask range partitions the stream.
  std::size_t parts = 0;
  for (std::uint64_t b = 0; b < all.mask_limit(); b += 100) {
    ConnectedGraphStream piece(5, b, std::min(all.mask_limit(), b + 100));
    while (piece.next()) ++parts;
  }
  EXPECT_EQ(parts, seen.size());
  try {
    ConnectedGraphStream too_big(8);
    FAIL();
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("graph6"), std::string::npos);
  }
}

TEST(Enumerate, UnlabeledTrees) {
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) {
    const auto trees = enumerate_unlabeled_trees(n);
    EXPECT_EQ(trees.size(), counts[n - 1]) << n;
    std::set<std::string> classes;
    for (const Graph& t : trees) {
      EXPECT_TRUE(is_tree(t));
      if (n <= 11) classes.insert(canonical_graph6(t));
    }
    if (n <= 11) EXPECT_EQ(classes.size(), trees.size());
  }
}

TEST(Enumerate, CanonicalFormIsRelabelInvariant) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    RandomGraphOptions o;
    o.order = 2 + static_cast<int>(uniform_below(rng, 7));
    const Graph g = random_connected_graph(rng, o);
    const auto perm = random_permutation(rng, g.order());
    EXPECT_EQ(canonical_graph6(g), canonical_graph6(relabel(g, perm)));
  }
  EXPECT_NE(canonical_graph6(path_graph(4)), canonical_graph6(star_graph(4)));
}
