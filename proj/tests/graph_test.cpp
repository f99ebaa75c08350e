#include <algorithm>
#include <array>
#include <set>

#include <gtest/gtest.h>

#include "chromatic/errors.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/verify/generators.hpp"
#include "chromatic/verify/rng.hpp"
#include "oracles.hpp"

using namespace chromatic;

namespace {

auto c6() -> BipartiteGraph {
  return BipartiteGraph(cycle_graph(6), {Part::X, Part::Y, Part::X, Part::Y, Part::X, Part::Y});
}

auto random_graph(std::size_t n, double p, verify::SplitMix64& rng) -> Graph {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

TEST(Graph, RejectsLoopsAndOutOfRange) {
  std::vector<Edge> loop = {{1, 1}};
  EXPECT_THROW(Graph(3, loop), InputError);
  std::vector<Edge> far = {{0, 3}};
  EXPECT_THROW(Graph(3, far), InputError);
}

TEST(Graph, RejectsDuplicateEdges) {
  std::vector<Edge> edges = {{0, 1}, {1, 0}};
  EXPECT_THROW(Graph(2, edges), InputError);
  std::vector<Edge> one = {{1, 0}};
  EXPECT_TRUE(Graph(2, one).adjacent(0, 1));
}

TEST(Bipartition, TriangleHasNone) { EXPECT_FALSE(bipartition(cycle_graph(3)).has_value()); }

TEST(Bipartition, EvenCycleAlternates) {
  auto b = bipartition(cycle_graph(6));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->side(b->part(0)), (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(b->side(other(b->part(0))), (std::vector<Vertex>{1, 3, 5}));
}

TEST(Bipartition, AgreesWithOddCycleOracle) {
  verify::SplitMix64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng.uniform(1, 9), 0.3, rng);
    auto b = bipartition(g);
    EXPECT_EQ(b.has_value(), oracle::two_colorable(g));
    if (b)
      for (const auto& e : g.edges()) EXPECT_NE(b->part(e.u), b->part(e.v));
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(cycle_graph(6)), 3u);
  EXPECT_EQ(diameter(complete_bipartite(2, 3).graph()), 2u);
  EXPECT_EQ(diameter(Graph(1)), 0u);
  EXPECT_EQ(diameter(Graph(2)), kInfiniteDistance);
}

TEST(Diameter, MatchesFloydWarshall) {
  verify::SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng.uniform(1, 12), rng.uniform(1, 6) / 10.0, rng);
    EXPECT_EQ(diameter(g), oracle::floyd_warshall_diameter(g));
    EXPECT_EQ(is_connected(g), oracle::floyd_warshall_diameter(g) != kInfiniteDistance);
  }
}

TEST(Complement, Examples) {
  auto k33 = bipartite_complement(complete_bipartite(3, 3));
  EXPECT_EQ(k33.order(), 6u);
  EXPECT_EQ(k33.graph().size(), 0u);
  auto m = bipartite_complement(c6());
  EXPECT_EQ(m.graph().size(), 3u);
  for (Vertex i = 0; i < 3; ++i) EXPECT_TRUE(m.graph().adjacent(i, i + 3));
}

TEST(Complement, IsAnInvolution) {
  verify::SplitMix64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto b = verify::random_bipartite(rng.uniform(2, 12), 0.4, rng);
    auto cc = bipartite_complement(bipartite_complement(b));
    EXPECT_EQ(cc.parts(), b.parts());
    EXPECT_EQ(cc.graph().edges(), b.graph().edges());
    auto c = bipartite_complement(b);
    EXPECT_EQ(c.graph().size() + b.graph().size(), b.side(Part::X).size() * b.side(Part::Y).size());
  }
}

TEST(InducedC6, Examples) {
  EXPECT_EQ(enumerate_induced_c6(c6()).size(), 1u);
  EXPECT_EQ(enumerate_induced_c6(complete_bipartite(3, 3)).size(), 0u);
  EXPECT_EQ(enumerate_induced_c6(bipartite_complement(bipartite_complement(complete_bipartite(3, 3)))).size(), 0u);
  auto minus_matching = with_graph(complete_bipartite(3, 3),
                                   without_edge(without_edge(without_edge(complete_bipartite(3, 3).graph(), 0, 3), 1, 4), 2, 5));
  EXPECT_EQ(enumerate_induced_c6(minus_matching).size(), oracle::induced_c6_count(minus_matching));
  EXPECT_EQ(oracle::induced_c6_count(minus_matching), 1u);
}

TEST(InducedC6, MatchesSixSubsetOracle) {
  verify::SplitMix64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    auto b = verify::random_bipartite(rng.uniform(6, 13), rng.uniform(3, 7) / 10.0, rng);
    auto found = enumerate_induced_c6(b);
    EXPECT_EQ(found.size(), oracle::induced_c6_count(b));
    std::set<std::vector<Vertex>> distinct;
    for (const auto& c : found) {
      EXPECT_NO_THROW(check_c6_embedding(b, c));
      std::vector<Vertex> s(c.cycle.begin(), c.cycle.end());
      std::sort(s.begin(), s.end());
      distinct.insert(s);
    }
    EXPECT_EQ(distinct.size(), found.size());
  }
}

TEST(C6Embedding, RejectsChordsAndWrongParts) {
  auto k33 = complete_bipartite(3, 3);
  C6Embedding c{{0, 3, 1, 4, 2, 5}};
  EXPECT_THROW(check_c6_embedding(k33, c), InputError);
  C6Embedding ok{{0, 1, 2, 3, 4, 5}};
  EXPECT_NO_THROW(check_c6_embedding(c6(), ok));
  C6Embedding repeated{{0, 1, 2, 3, 4, 1}};
  EXPECT_THROW(check_c6_embedding(c6(), repeated), InputError);
}

TEST(Dominates, Examples) {
  auto g = complete_bipartite(1, 4).graph();
  std::vector<Vertex> center = {0}, leaves = {1, 2, 3, 4}, all = {0, 1, 2, 3, 4};
  EXPECT_TRUE(dominates(g, center, leaves));
  EXPECT_TRUE(dominates(g, all, all));
  EXPECT_FALSE(dominates(g, std::vector<Vertex>{1}, std::vector<Vertex>{2}));
}

TEST(Dominates, MatchesNeighborhoodOracle) {
  verify::SplitMix64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(8, 0.3, rng);
    std::vector<Vertex> s, t;
    for (Vertex v = 0; v < 8; ++v) {
      if (rng.chance(0.3)) s.push_back(v);
      if (rng.chance(0.5)) t.push_back(v);
    }
    bool expected = std::all_of(t.begin(), t.end(), [&](Vertex y) {
      return std::any_of(s.begin(), s.end(), [&](Vertex x) { return x == y || g.adjacent(x, y); });
    });
    EXPECT_EQ(dominates(g, s, t), expected);
  }
}

TEST(Hypergraph, SortsTriplesAndRejectsDuplicates) {
  Hypergraph3 h(4, {{3, 1, 0}, {2, 1, 0}});
  EXPECT_EQ(h.edges()[0], (Triple{0, 1, 3}));
  EXPECT_EQ(h.edges()[1], (Triple{0, 1, 2}));
  EXPECT_THROW(Hypergraph3(4, {{3, 1, 0}, {0, 1, 3}}), InputError);
  EXPECT_THROW(Hypergraph3(3, {{0, 0, 1}}), InputError);
  EXPECT_THROW(Hypergraph3(3, {{0, 1, 3}}), InputError);
}

TEST(Builders, Counts) {
  EXPECT_EQ(path_graph(6).size(), 5u);
  EXPECT_EQ(cycle_graph(6).size(), 6u);
  EXPECT_EQ(complete_graph(5).size(), 10u);
  EXPECT_EQ(complete_bipartite(2, 4).graph().size(), 8u);
  EXPECT_EQ(fano_plane().edges().size(), 7u);
}
