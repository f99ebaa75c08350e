#include <algorithm>
#include <array>

#include "chromatic/reductions.hpp"
#include "chromatic/solvers.hpp"
#include "runner.hpp"

namespace chromatic::verify::detail {

namespace {

auto instance_seeds(std::uint64_t seed, std::uint64_t salt, std::size_t count) -> std::vector<std::uint64_t> {
  SplitMix64 rng(seed ^ salt);
  std::vector<std::uint64_t> out(count);
  for (auto& s : out) s = rng.next();
  return out;
}

auto random_precoloring(const Graph& g, Color k, SplitMix64& rng) -> PartialColoring {
  PartialColoring p;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!rng.chance(0.5)) continue;
    auto c = static_cast<Color>(rng.uniform(1, static_cast<std::uint64_t>(k)));
    auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) {
          auto it = p.assigned.find(w);
          return it != p.assigned.end() && it->second == c;
        }))
      p.assigned[v] = c;
  }
  return p;
}

auto describe_precoloring(const PartialColoring& p) -> std::string {
  std::string out = " p={";
  bool first = true;
  for (auto [v, c] : p.assigned) {
    out += (first ? "" : ",") + std::to_string(v + 1) + ":" + std::to_string(c);
    first = false;
  }
  return out + "}";
}

}  // namespace

auto suite_prop1(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "prop1");
  constexpr std::size_t kCount = 100;
  auto seeds = instance_seeds(ctx.options.seed, 0x70726f7031ULL, kCount);
  return run_indexed(ctx, "prop1", "100 random connected bipartite graphs, 2<=n<=10, k=3, random precoloring",
                     kCount, [&](std::size_t i, Outcome& o) {
    SplitMix64 rng(seeds[i]);
    auto g = gen_connected_bipartite(rng.uniform(2, 10), rng.next());
    auto p = random_precoloring(g.graph(), 3, rng);
    o.detail = " " + describe(g) + describe_precoloring(p);
    auto lift = lift_preext(g, p, 3);
    mark_used("lift_preext");
    if (mutation_is(ctx, "drop-x-y0")) lift.lift.graph = drop_edge(lift.lift.graph, lift.lift.x, g.side(Part::Y).front());
    if (mutation_is(ctx, "add-x-y")) lift.lift.graph = add_edge(lift.lift.graph, lift.lift.x, lift.lift.y);
    const auto& gp = lift.lift.graph.graph();
    o.require(gp.order() == g.order() + 2, "lift does not add exactly two vertices");
    o.require(diameter(gp) <= 3, "lift has diameter above 3");

    auto f = solve_preext(g.graph(), 3, p);
    auto F = solve_preext(gp, 4, lift.precoloring);
    o.compare(f.has_value(), F.has_value());
    if (f) o.check(validate_extension(gp, 4, lift.precoloring, extend_lift_coloring(lift.lift, *f, 3)), "extended certificate");
    if (F) {
      o.check(validate_extension(gp, 4, lift.precoloring, *F), "target certificate");
      o.check(validate_extension(g.graph(), 3, p, restrict_lift_coloring(lift.lift, *F, 3)), "restricted certificate");
    }
  });
}

auto suite_prop10(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "prop10");
  constexpr std::size_t kRandom = 60;
  auto seeds = instance_seeds(ctx.options.seed, 0x70726f703130ULL, kRandom);
  std::vector<BipartiteGraph> fixed = {
      BipartiteGraph(cycle_graph(6), {Part::X, Part::Y, Part::X, Part::Y, Part::X, Part::Y})};
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = 1; b <= 5; ++b) fixed.push_back(complete_bipartite(a, b));
  return run_indexed(
      ctx, "prop10", "60 random connected bipartite graphs 2<=n<=10 and C6 (k=3 to 4); K_{a,b} with a,b<=5 at k=3",
      kRandom + fixed.size(), [&](std::size_t i, Outcome& o) {
        BipartiteGraph g = i < kRandom ? [&] {
          SplitMix64 rng(seeds[i]);
          return gen_connected_bipartite(rng.uniform(2, 10), rng.next());
        }() : fixed[i - kRandom];
        o.detail = " " + describe(g);
        auto f = solve_fall_coloring(g.graph(), 3);
        mark_used("solve_fall_coloring");
        if (f) {
          o.check(validate_fall(g.graph(), 3, *f), "source certificate");
          o.check(check_both_parts_full(g, 3, *f), "both parts see every color");
        }
        if (i > kRandom) {
          // Complete bipartite graphs have no 3-fall coloring.
          o.compare(false, f.has_value());
          return;
        }
        auto lift = fall_lift(g, 3);
        mark_used("fall_lift");
        if (mutation_is(ctx, "drop-x-y0")) lift.graph = drop_edge(lift.graph, lift.x, g.side(Part::Y).front());
        const auto& gp = lift.graph.graph();
        o.require(diameter(gp) <= 3, "lift has diameter above 3");
        auto F = solve_fall_coloring(gp, 4);
        o.compare(f.has_value(), F.has_value());
        if (f) o.check(validate_fall(gp, 4, extend_lift_coloring(lift, *f, 3)), "extended certificate");
        if (F) {
          o.check(validate_fall(gp, 4, *F), "target certificate");
          o.check(check_both_parts_full(lift.graph, 4, *F), "both parts see every color");
          o.check(validate_fall(g.graph(), 3, restrict_lift_coloring(lift, *F, 3)), "restricted certificate");
        }
      });
}

auto suite_prop12(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "prop12");
  constexpr std::size_t kRandom = 80;
  auto seeds = instance_seeds(ctx.options.seed, 0x70726f703132ULL, kRandom);
  const std::vector<BipartiteGraph> fixed = {
      BipartiteGraph(cycle_graph(6), {Part::X, Part::Y, Part::X, Part::Y, Part::X, Part::Y}), complete_bipartite(3, 3)};
  return run_indexed(ctx, "prop12",
                     "80 random bipartite graphs of diameter 3 with 6<=n<=12 (half with a planted 3-fall coloring), C6, K_{3,3}",
                     kRandom + fixed.size(), [&](std::size_t i, Outcome& o) {
    BipartiteGraph g = i < kRandom ? [&] {
      SplitMix64 rng(seeds[i]);
      auto n = rng.uniform(6, 12);
      return i % 2 ? gen_fall_bipartite(n, 3, rng.next()) : gen_bipartite(n, 3, rng.next());
    }() : fixed[i - kRandom];
    o.detail = " " + describe(g);
    auto queries = fall3_queries(g);
    const bool mutated = !ctx.options.mutation.empty();
    for (auto& q : queries) {
      if (mutation_is(ctx, "relabel-123132"))
        for (int j = 0; j < 6; ++j) q.precoloring.assigned[q.cycle.at(j)] = std::array{1, 2, 3, 1, 3, 2}[static_cast<std::size_t>(j)];
      if (mutation_is(ctx, "drop-precolor")) q.precoloring.assigned.erase(q.cycle.at(5));
    }
    std::optional<Coloring> witness;
    for (const auto& q : queries)
      if ((witness = solve_preext(g.graph(), 3, q.precoloring))) break;
    if (!mutated) {
      auto driver = fall3_turing_queries(g);
      mark_used("fall3_turing_queries");
      o.require(driver.queries.size() == queries.size() && driver.answer == witness.has_value(),
                "driver disagrees with the query list");
      for (const auto& q : queries) {
        std::array<Color, 3> perm = {1, 2, 3};
        const bool base = solve_preext(g.graph(), 3, q.precoloring).has_value();
        while (std::next_permutation(perm.begin(), perm.end())) {
          PartialColoring relabeled;
          for (auto [v, c] : q.precoloring.assigned) relabeled.assigned[v] = perm[static_cast<std::size_t>(c - 1)];
          if (solve_preext(g.graph(), 3, relabeled).has_value() != base) o.fail("query answer depends on the color labeling");
        }
      }
    }
    auto direct = solve_fall_coloring(g.graph(), 3);
    o.compare(direct.has_value(), witness.has_value());
    o.counters.emplace_back("queries", queries.size());
    if (witness) {
      o.check(validate_fall(g.graph(), 3, *witness), "extension is a fall coloring");
      o.check(check_both_parts_full(g, 3, *witness), "both parts see every color");
    }
    if (direct) o.check(check_both_parts_full(g, 3, *direct), "both parts see every color");
  });
}

auto suite_faik(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "faik");
  constexpr std::size_t kRandom = 300;
  auto seeds = instance_seeds(ctx.options.seed, 0x6661696bULL, kRandom);
  const std::vector<BipartiteGraph> fixed = {
      BipartiteGraph(cycle_graph(6), {Part::X, Part::Y, Part::X, Part::Y, Part::X, Part::Y}), complete_bipartite(3, 3)};
  return run_indexed(ctx, "faik",
                     "300 random bipartite graphs of diameter 3 with 6<=n<=12 (half with a planted 3-fall coloring), C6, K_{3,3}",
                     kRandom + fixed.size(), [&](std::size_t i, Outcome& o) {
    BipartiteGraph g = i < kRandom ? [&] {
      SplitMix64 rng(seeds[i]);
      auto n = rng.uniform(6, 12);
      return i % 2 ? gen_fall_bipartite(n, 3, rng.next()) : gen_bipartite(n, 3, rng.next());
    }() : fixed[i - kRandom];
    o.detail = " " + describe(g);
    auto report = faik_check(g);
    o.counters.emplace_back("proper 3-colorings examined", report.colorings);
    o.counters.emplace_back("3-b-colorings", report.b_colorings);
    if (report.violations > 0) o.fail("b-coloring " + verify::describe(*report.witness) + " is not a fall coloring");
    if (i == kRandom + 1) o.require(report.b_colorings == 0, "K_{3,3} has a 3-b-coloring");
  });
}

auto suite_cor8(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "cor8");
  constexpr std::size_t kGated = 60, kFree = 20;
  auto seeds = instance_seeds(ctx.options.seed, 0x636f7238ULL, kGated + kFree);
  const BipartiteGraph p6(path_graph(6), {Part::X, Part::Y, Part::X, Part::Y, Part::X, Part::Y});
  const BipartiteGraph c6(cycle_graph(6), {Part::X, Part::Y, Part::X, Part::Y, Part::X, Part::Y});
  return run_indexed(ctx, "cor8",
                     "P6, C6, 60 random bipartite graphs with diameter 2..4 and 20 with diameter 5, 6<=n<=12",
                     kGated + kFree + 2, [&](std::size_t i, Outcome& o) {
    BipartiteGraph g;
    if (i == 0) g = p6;
    else if (i == 1) g = c6;
    else {
      SplitMix64 rng(seeds[i - 2]);
      auto n = rng.uniform(6, 12);
      auto d = i - 2 < kGated ? rng.uniform(2, 4) : 5;
      g = gen_bipartite(n, d, rng.next());
    }
    o.detail = " " + describe(g);
    auto record = cor8_check(g);
    mark_used("solve_surjective_c6");
    mark_used("solve_c6_compaction");
    auto plain_surjective = solve_list_hom(g.graph(), cycle_graph(6), {}, HomMode::vertex_surjective);
    auto plain_compaction = solve_list_hom(g.graph(), cycle_graph(6), {}, HomMode::edge_surjective);
    mark_used("solve_list_hom");
    o.require(plain_surjective.has_value() == record.surjective, "symmetry-broken surjective search disagrees");
    o.require(plain_compaction.has_value() == record.compaction, "symmetry-broken compaction search disagrees");
    if (plain_surjective)
      o.check(validate_hom(g.graph(), cycle_graph(6), *plain_surjective, HomMode::vertex_surjective), "surjective certificate");
    if (plain_compaction)
      o.check(validate_hom(g.graph(), cycle_graph(6), *plain_compaction, HomMode::edge_surjective), "compaction certificate");
    if (i == 0) o.require(record.surjective && !record.compaction && !record.gated, "P6 must be surjective YES, compaction NO, ungated");
    if (i == 1) o.require(record.surjective && record.compaction, "C6 must answer YES twice");
    if (record.gated) o.compare(record.surjective, record.compaction);
    else o.counters.emplace_back("ungated instances", 1);
  });
}

auto suite_cor9(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "cor9");
  constexpr std::size_t kRandom = 50;
  auto seeds = instance_seeds(ctx.options.seed, 0x636f7239ULL, kRandom);
  return run_indexed(ctx, "cor9", "50 bipartite complements of random connected bipartite graphs with 6<=n<=12, plus the 3+3 perfect matching",
                     kRandom + 1, [&](std::size_t i, Outcome& o) {
    BipartiteGraph b;
    if (i < kRandom) {
      SplitMix64 rng(seeds[i]);
      b = bipartite_complement(gen_connected_bipartite(rng.uniform(6, 12), rng.next()));
    } else {
      b = BipartiteGraph(Graph(6, std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}}),
                         {Part::X, Part::X, Part::X, Part::Y, Part::Y, Part::Y});
    }
    o.detail = " " + describe(b);
    auto complement = bipartite_complement(b);
    auto target_graph = complement;
    if (mutation_is(ctx, "drop-complement-edge")) {
      auto e = complement.graph().edges().front();
      target_graph = drop_edge(complement, e.u, e.v);
    }
    auto p = solve_biclique_partition(b, 3, true);
    auto f = solve_surjective_c6(target_graph.graph());
    mark_used("solve_biclique_partition");
    o.compare(p.has_value(), f.has_value());
    if (p) {
      o.check(validate_biclique_partition(b, 3, *p), "source certificate");
      auto g = biclique_to_surjective(b, *p);
      mark_used("biclique_to_surjective");
      o.check(validate_hom(complement.graph(), cycle_graph(6), g, HomMode::vertex_surjective), "forward conversion");
      auto back = surjective_to_biclique(b, g);
      auto sorted = *p;
      for (auto& block : sorted.blocks) std::sort(block.begin(), block.end());
      o.require(back == sorted, "forward then backward conversion is not the identity");
    }
    if (f) {
      o.check(validate_hom(complement.graph(), cycle_graph(6), *f, HomMode::vertex_surjective), "target certificate");
      auto q = surjective_to_biclique(b, *f);
      mark_used("surjective_to_biclique");
      o.check(validate_biclique_partition(b, 3, q), "backward conversion");
      auto again = biclique_to_surjective(b, q);
      o.check(validate_hom(complement.graph(), cycle_graph(6), again, HomMode::vertex_surjective), "round trip");
      Vertex shift = 0;
      for (Vertex v = 0; v < b.order(); ++v)
        if (b.part(v) == Part::X) shift = (*f)[v] % 2;
      bool same = true;
      for (Vertex v = 0; v < b.order(); ++v) same &= again[v] == ((*f)[v] + shift) % 6;
      o.require(same, "backward then forward conversion is not the identity up to rotation");
    }
  });
}

auto suite_flaw(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "flaw");
  constexpr std::size_t kRandom = 60;
  auto seeds = instance_seeds(ctx.options.seed, 0x666c6177ULL, kRandom);
  auto report = run_indexed(
      ctx, "flaw", "the edge uv with lists {1,2}, then 60 random connected bipartite graphs 2<=n<=8 with lists on X",
      kRandom + 1, [&](std::size_t i, Outcome& o) {
        if (i == 0) {
          BipartiteGraph g(Graph(2, std::vector<Edge>{{0, 1}}), {Part::X, Part::Y});
          ListAssignment lists{{{1, 2}, {1, 2}}};
          auto fc = fmps_flawed_instance(g, lists);
          mark_used("fmps_flawed_instance");
          o.detail = " " + describe(fc.graph);
          auto id = [&](const char* name) { return vertex_named(fc.names, name); };
          auto complement = bipartite_complement(fc.graph);
          BicliquePartition p{{{id("x1"), id("x2"), id("v2")}, {id("y1"), id("y2"), id("v1")}, {id("x3"), id("y3")}}};
          o.check(validate_biclique_partition(complement, 3, p), "the exhibited partition");
          auto block_of = [&](Vertex v) {
            for (std::size_t j = 0; j < 3; ++j)
              if (std::find(p.blocks[j].begin(), p.blocks[j].end(), v) != p.blocks[j].end()) return j;
            return std::size_t{3};
          };
          bool split = false;
          for (int j = 1; j <= 3; ++j)
            split |= block_of(id(("x" + std::to_string(j)).c_str())) != block_of(id(("y" + std::to_string(j)).c_str()));
          o.require(split, "every matching pair shares a block");
          o.require(solve_list_coloring(g.graph(), lists, 3).has_value(), "list coloring answer is NO");
          o.require(solve_biclique_partition(complement, 3).has_value(), "biclique answer is NO");
          o.require(solve_retraction(fc.graph, fc.cycle).has_value(), "retraction answer is NO");
          auto f = biclique_to_surjective(complement, p);
          o.check(validate_hom(fc.graph.graph(), cycle_graph(6), f, HomMode::vertex_surjective), "converted partition");
          std::array<bool, 6> hit{};
          bool injective = true;
          for (int j = 0; j < 6; ++j) {
            injective &= !hit[f[fc.cycle.at(j)]];
            hit[f[fc.cycle.at(j)]] = true;
          }
          o.require(!injective, "converted partition fixes the cycle");
          return;
        }
        SplitMix64 rng(seeds[i - 1]);
        auto g = gen_connected_bipartite(rng.uniform(2, 8), rng.next());
        ListAssignment lists;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (g.part(v) == Part::Y) {
            lists.lists.push_back({1, 2, 3});
            continue;
          }
          auto mask = rng.uniform(1, 7);
          std::vector<Color> l;
          for (Color c = 1; c <= 3; ++c)
            if (mask >> (c - 1) & 1) l.push_back(c);
          lists.lists.push_back(l);
        }
        auto fc = fmps_flawed_instance(g, lists);
        o.detail = " " + describe(g);
        if (mutation_is(ctx, "drop-u-y")) {
          for (Vertex u = 0; u < g.order(); ++u) {
            if (g.part(u) != Part::X || lists[u].size() == 3) continue;
            Color missing = 1;
            while (std::find(lists[u].begin(), lists[u].end(), missing) != lists[u].end()) ++missing;
            fc.graph = drop_edge(fc.graph, u, vertex_named(fc.names, "y" + std::to_string(missing)));
            break;
          }
        }
        auto f = solve_list_coloring(g.graph(), lists, 3);
        auto r = solve_retraction(fc.graph, fc.cycle);
        o.compare(f.has_value(), r.has_value());
        if (f) {
          VertexMapping m;
          for (Vertex v = 0; v < fc.graph.order(); ++v) {
            if (v >= g.order()) m.image.push_back(v);
            else m.image.push_back(fc.cycle.at(g.part(v) == Part::X ? pv_position((*f)[v]) : pe_position((*f)[v])));
          }
          o.check(validate_retraction(fc.graph, fc.cycle, m), "translated retraction");
        }
        if (r) {
          Coloring back;
          for (Vertex v = 0; v < g.order(); ++v) {
            auto pos = *fc.cycle.position((*r)[v]);
            Color c = 0;
            for (int j = 1; j <= 3; ++j)
              if (pv_position(j) == pos || pe_position(j) == pos) c = j;
            back.colors.push_back(c);
          }
          o.check(validate_list_coloring(g.graph(), lists, back), "translated list coloring");
        }
      });
  return report;
}

}  // namespace chromatic::verify::detail
