#include <gtest/gtest.h>

#include "chromatic/errors.hpp"
#include "chromatic/solvers.hpp"
#include "chromatic/two_sat.hpp"
#include "chromatic/validate.hpp"
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

auto random_lists(std::size_t n, Color k, std::size_t width, verify::SplitMix64& rng) -> ListAssignment {
  ListAssignment out;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Color> l;
    for (Color c = 1; c <= k; ++c)
      if (rng.chance(static_cast<double>(width) / k)) l.push_back(c);
    if (l.empty()) l.push_back(static_cast<Color>(rng.uniform(1, static_cast<std::uint64_t>(k))));
    out.lists.push_back(l);
  }
  return out;
}

auto edge_graph() -> Graph {
  std::vector<Edge> e = {{0, 1}};
  return Graph(2, e);
}

}  // namespace

TEST(ListHom, IdentityRetractionOfC6) {
  HomLists lists;
  for (Vertex v = 0; v < 6; ++v) lists.push_back({v});
  auto f = solve_list_hom(cycle_graph(6), cycle_graph(6), lists, HomMode::plain);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->image, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST(ListHom, PathOntoC6IsSurjectiveButNoCompaction) {
  auto vs = solve_list_hom(path_graph(6), cycle_graph(6), {}, HomMode::vertex_surjective);
  ASSERT_TRUE(vs);
  EXPECT_TRUE(validate_hom(path_graph(6), cycle_graph(6), *vs, HomMode::vertex_surjective));
  EXPECT_FALSE(solve_list_hom(path_graph(6), cycle_graph(6), {}, HomMode::edge_surjective));
  EXPECT_FALSE(oracle::hom_exists(path_graph(6), cycle_graph(6), oracle::Surjectivity::edge));
  EXPECT_TRUE(solve_surjective_c6(path_graph(6)));
  EXPECT_FALSE(solve_c6_compaction(path_graph(6)));
}

TEST(ListHom, RejectsListOutsideTarget) {
  HomLists lists = {{0}, {7}};
  EXPECT_THROW(solve_list_hom(edge_graph(), cycle_graph(6), lists, HomMode::plain), InputError);
}

TEST(ListHom, MatchesExhaustiveSearch) {
  verify::SplitMix64 rng(21);
  const Graph targets[] = {cycle_graph(6), cycle_graph(4), path_graph(4), complete_graph(3)};
  for (int trial = 0; trial < 240; ++trial) {
    const Graph& h = targets[trial % 4];
    auto g = random_graph(rng.uniform(1, 6), 0.35, rng);
    HomLists lists;
    if (rng.chance(0.5))
      for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<Vertex> l;
        for (Vertex t = 0; t < h.order(); ++t)
          if (rng.chance(0.6)) l.push_back(t);
        lists.push_back(l);
      }
    const std::pair<HomMode, oracle::Surjectivity> modes[] = {{HomMode::plain, oracle::Surjectivity::none},
                                                             {HomMode::vertex_surjective, oracle::Surjectivity::vertex},
                                                             {HomMode::edge_surjective, oracle::Surjectivity::edge}};
    for (auto [mode, s] : modes) {
      auto f = solve_list_hom(g, h, lists, mode);
      ASSERT_EQ(f.has_value(), oracle::hom_exists(g, h, s, lists)) << "trial " << trial;
      if (f) EXPECT_TRUE(validate_hom(g, h, *f, mode, lists));
    }
  }
}

TEST(C6Surjections, SymmetryBrokenSearchMatchesPlainSearch) {
  verify::SplitMix64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    auto b = verify::random_bipartite(rng.uniform(4, 10), 0.4, rng);
    const auto& g = b.graph();
    auto s = solve_surjective_c6(g);
    auto c = solve_c6_compaction(g);
    EXPECT_EQ(s.has_value(), solve_list_hom(g, cycle_graph(6), {}, HomMode::vertex_surjective).has_value());
    EXPECT_EQ(c.has_value(), solve_list_hom(g, cycle_graph(6), {}, HomMode::edge_surjective).has_value());
    if (s) EXPECT_TRUE(validate_hom(g, cycle_graph(6), *s, HomMode::vertex_surjective));
    if (c) EXPECT_TRUE(validate_hom(g, cycle_graph(6), *c, HomMode::edge_surjective));
  }
}

TEST(Retraction, C6OntoItself) {
  C6Embedding c{{0, 1, 2, 3, 4, 5}};
  auto r = solve_retraction(c6(), c);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->image, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST(ListColoring, Examples) {
  ListAssignment ones{{{1}, {1}}};
  EXPECT_FALSE(solve_list_coloring(edge_graph(), ones, 0));
  ListAssignment two{{{1, 2}, {1, 2}}};
  auto f = solve_list_coloring(edge_graph(), two, 2);
  ASSERT_TRUE(f);
  EXPECT_NE((*f)[0], (*f)[1]);
  ListAssignment c5(ListAssignment::full(5, 2));
  EXPECT_FALSE(solve_two_list_coloring(cycle_graph(5), c5));
  EXPECT_FALSE(oracle::list_colorable(cycle_graph(5), c5));
  EXPECT_TRUE(solve_two_list_coloring(cycle_graph(6), ListAssignment::full(6, 2)));
}

TEST(ListColoring, RejectsColorsAboveK) {
  ListAssignment lists{{{1, 3}, {1}}};
  EXPECT_THROW(solve_list_coloring(edge_graph(), lists, 2), InputError);
}

TEST(ListColoring, AllPathsMatchExhaustiveSearch) {
  verify::SplitMix64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = random_graph(rng.uniform(1, 8), 0.4, rng);
    Color k = static_cast<Color>(rng.uniform(1, 4));
    auto lists = random_lists(g.order(), k, 2, rng);
    bool expected = oracle::list_colorable(g, lists);
    auto f = solve_list_coloring(g, lists, k);
    ASSERT_EQ(f.has_value(), expected) << "trial " << trial;
    if (f) EXPECT_TRUE(validate_list_coloring(g, lists, *f));
    EXPECT_EQ(solve_list_coloring_backtracking(g, lists).has_value(), expected);
    bool narrow = std::all_of(lists.lists.begin(), lists.lists.end(), [](const auto& l) { return l.size() <= 2; });
    if (narrow) EXPECT_EQ(solve_two_list_coloring(g, lists).has_value(), expected);
  }
}

TEST(TwoSat, MatchesTruthTable) {
  verify::SplitMix64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = rng.uniform(1, 6);
    struct Clause {
      std::size_t a;
      bool va;
      std::size_t b;
      bool vb;
    };
    std::vector<Clause> clauses;
    for (std::size_t i = 0, m = rng.uniform(1, 10); i < m; ++i)
      clauses.push_back({rng.below(n), rng.chance(0.5), rng.below(n), rng.chance(0.5)});
    TwoSat sat(n);
    for (const auto& c : clauses) sat.add_clause(c.a, c.va, c.b, c.vb);
    auto holds = [&](const std::vector<bool>& x) {
      return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) { return x[c.a] == c.va || x[c.b] == c.vb; });
    };
    bool expected = oracle::odometer(n, 2, [&](const auto& a) { return holds(std::vector<bool>(a.begin(), a.end())); });
    auto x = sat.solve();
    ASSERT_EQ(x.has_value(), expected);
    if (x) EXPECT_TRUE(holds(*x));
  }
}

TEST(Preext, Examples) {
  PartialColoring p;
  p.assigned = {{0, 1}, {2, 2}, {4, 3}};
  auto f = solve_preext(cycle_graph(6), 3, p);
  ASSERT_TRUE(f);
  EXPECT_TRUE(validate_extension(cycle_graph(6), 3, p, *f));
  EXPECT_TRUE(oracle::preext(cycle_graph(6), 3, p));
  EXPECT_FALSE(solve_preext(complete_graph(4), 3, {}));
}

TEST(Preext, ImproperPrecoloringIsAnInputError) {
  PartialColoring p;
  p.assigned = {{0, 1}, {1, 1}};
  EXPECT_THROW(solve_preext(edge_graph(), 2, p), InputError);
}

TEST(Preext, MatchesExhaustiveSearch) {
  verify::SplitMix64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng.uniform(1, 8), 0.35, rng);
    Color k = static_cast<Color>(rng.uniform(2, 3));
    PartialColoring p;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng.chance(0.3)) p.assigned[v] = static_cast<Color>(rng.uniform(1, static_cast<std::uint64_t>(k)));
    bool proper = true;
    for (const auto& e : g.edges())
      if (p.assigned.count(e.u) && p.assigned.count(e.v) && p.assigned[e.u] == p.assigned[e.v]) proper = false;
    if (!proper) continue;
    auto f = solve_preext(g, k, p);
    ASSERT_EQ(f.has_value(), oracle::preext(g, k, p)) << "trial " << trial;
    if (f) EXPECT_TRUE(validate_extension(g, k, p, *f));
  }
}

TEST(Fall, Examples) {
  auto f = solve_fall_coloring(cycle_graph(6), 3);
  ASSERT_TRUE(f);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ((*f)[v], (*f)[v + 3]);
  EXPECT_FALSE(solve_fall_coloring(complete_bipartite(3, 3).graph(), 3));
  std::vector<Edge> e = {{0, 1}};
  EXPECT_FALSE(solve_fall_coloring(Graph(3, e), 2));
}

TEST(Fall, MatchesExhaustiveSearch) {
  verify::SplitMix64 rng(43);
  for (int trial = 0; trial < 250; ++trial) {
    auto g = random_graph(rng.uniform(2, 8), rng.uniform(3, 7) / 10.0, rng);
    Color k = static_cast<Color>(rng.uniform(2, 4));
    auto f = solve_fall_coloring(g, k);
    ASSERT_EQ(f.has_value(), oracle::fall_colorable(g, k)) << "trial " << trial;
    if (f) EXPECT_TRUE(validate_fall(g, k, *f));
  }
}

TEST(Fall, BipartiteCertificatesUseEveryColorOnBothSides) {
  verify::SplitMix64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    auto b = verify::random_bipartite(rng.uniform(4, 10), 0.5, rng);
    for (Color k = 3; k <= 4; ++k) {
      auto f = solve_fall_coloring(b.graph(), k);
      if (!f) continue;
      for (Part side : {Part::X, Part::Y}) {
        std::set<Color> seen;
        for (Vertex v : b.side(side)) seen.insert((*f)[v]);
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(k));
      }
    }
  }
}

TEST(Biclique, Examples) {
  BipartiteGraph edge(edge_graph(), {Part::X, Part::Y});
  auto p = solve_biclique_partition(edge, 1);
  ASSERT_TRUE(p);
  ASSERT_EQ(p->blocks.size(), 1u);
  EXPECT_EQ(p->blocks[0].size(), 2u);
  BipartiteGraph empty(Graph(2), {Part::X, Part::Y});
  EXPECT_FALSE(solve_biclique_partition(empty, 3));
}

TEST(Biclique, MatchesExhaustiveSearch) {
  verify::SplitMix64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    auto b = verify::random_bipartite(rng.uniform(2, 8), 0.55, rng);
    std::size_t k = rng.uniform(1, 3);
    for (bool exact : {false, true}) {
      auto p = solve_biclique_partition(b, k, exact);
      ASSERT_EQ(p.has_value(), oracle::biclique_partitionable(b, k, exact)) << "trial " << trial;
      if (p) {
        EXPECT_TRUE(validate_biclique_partition(b, k, *p));
        if (exact) EXPECT_EQ(p->blocks.size(), k);
      }
    }
  }
}

TEST(H2col, Examples) {
  auto one = solve_h2col(Hypergraph3(3, {{0, 1, 2}}));
  ASSERT_TRUE(one);
  EXPECT_TRUE(validate_h2col(Hypergraph3(3, {{0, 1, 2}}), *one));
  EXPECT_FALSE(solve_h2col(fano_plane()));
  auto empty = solve_h2col(Hypergraph3(4, {}));
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->colors, (std::vector<Color>{1, 1, 1, 1}));
}

TEST(H2col, MatchesExhaustiveSearch) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    verify::SplitMix64 rng(seed);
    std::size_t n = rng.uniform(3, 8);
    std::size_t m = std::min<std::size_t>(rng.uniform(1, 14), n * (n - 1) * (n - 2) / 6);
    auto h = verify::gen_h3(n, m, rng.next());
    auto f = solve_h2col(h);
    ASSERT_EQ(f.has_value(), oracle::h2colorable(h)) << "seed " << seed;
    if (f) EXPECT_TRUE(validate_h2col(h, *f));
  }
}
