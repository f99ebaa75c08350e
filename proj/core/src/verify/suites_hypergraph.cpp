#include "chromatic/hitset.hpp"
#include "chromatic/reductions.hpp"
#include "chromatic/solvers.hpp"
#include "runner.hpp"

namespace chromatic::verify::detail {

auto suite_thm7(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "thm7");
  const auto& corpus = shared_hypergraph_corpus(ctx.options.seed);
  return run_indexed(ctx, "thm7", corpus.descriptor, corpus.items.size(), [&](std::size_t i, Outcome& o) {
    const auto& h = corpus.items[i];
    o.detail = " " + describe(h);
    auto rc = build_c6_retract(h);
    mark_used("build_c6_retract");
    if (mutation_is(ctx, "drop-g1a1-pV3"))
      rc.graph = drop_edge(rc.graph, vertex_named(rc.names, "g1:a1"), vertex_named(rc.names, "pV3"));
    if (mutation_is(ctx, "drop-v1-pE3"))
      rc.graph = drop_edge(rc.graph, vertex_named(rc.names, "v1"), vertex_named(rc.names, "pE3"));
    o.require(rc.graph.order() == h.order() + 13 * h.edges().size() + 6, "vertex count differs from n+13m+6");
    o.check(retract_guarantees(rc.graph, rc.cycle), "structural guarantees");

    auto two = solve_h2col(h);
    auto r = solve_retraction(rc.graph, rc.cycle);
    mark_used("solve_h2col");
    mark_used("solve_retraction");
    o.compare(two.has_value(), r.has_value());
    if (two) {
      o.check(validate_h2col(h, *two), "source certificate");
      auto m = complete_gadget_mapping(rc, *two);
      mark_used("complete_gadget_mapping");
      o.check(validate_retraction(rc.graph, rc.cycle, m), "completed gadget mapping");
    }
    if (r) {
      o.check(validate_retraction(rc.graph, rc.cycle, *r), "target certificate");
      o.check(validate_h2col(h, retraction_to_two_coloring(rc, *r)), "translated two-coloring");
    }
  });
}

auto suite_cor3(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "cor3");
  const auto& corpus = shared_hypergraph_corpus(ctx.options.seed);
  return run_indexed(ctx, "cor3", corpus.descriptor, corpus.items.size(), [&](std::size_t i, Outcome& o) {
    const auto& h = corpus.items[i];
    o.detail = " " + describe(h);
    auto rc = build_c6_retract(h);
    auto pe = retract_to_preext3(rc.graph, rc.cycle);
    mark_used("retract_to_preext3");
    if (mutation_is(ctx, "drop-pE3-precolor")) pe.precoloring.assigned.erase(rc.cycle.at(pe_position(3)));
    o.check(preext_guarantees(rc.graph, rc.cycle, pe), "structural guarantees");
    o.require(pe.precoloring.assigned.size() == 6, "precoloring does not cover the six cycle vertices");

    auto r = solve_retraction(rc.graph, rc.cycle);
    auto f = solve_preext(pe.graph, 3, pe.precoloring);
    mark_used("solve_preext");
    o.compare(r.has_value(), f.has_value());
    if (solve_h2col(h).has_value() != r.has_value()) o.fail("retraction answer differs from two-colorability");
    if (f) {
      o.check(validate_extension(pe.graph, 3, pe.precoloring, *f), "target certificate");
      o.check(validate_retraction(rc.graph, rc.cycle, extension_to_retraction(rc.graph, rc.cycle, *f)),
              "translated retraction");
    }
    if (r) o.check(validate_extension(pe.graph, 3, pe.precoloring, retraction_to_extension(rc.cycle, *r)),
                   "translated extension");
  });
}

auto suite_lem7(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "lem7");
  const auto& corpus = shared_hypergraph_corpus(ctx.options.seed);
  // The fixed instance: C6 plus one X vertex joined to the three Y vertices of the cycle.
  auto fixed = [] {
    std::vector<Edge> edges = cycle_graph(6).edges();
    for (Vertex y : {1u, 3u, 5u}) edges.push_back({6, y});
    return BipartiteGraph(Graph(7, edges), {Part::X, Part::Y, Part::X, Part::Y, Part::X, Part::Y, Part::X});
  }();
  const C6Embedding identity{{0, 1, 2, 3, 4, 5}};
  auto report = run_indexed(
      ctx, "lem7", corpus.descriptor + ", plus C6 with one extra vertex", corpus.items.size() + 1,
      [&](std::size_t i, Outcome& o) {
        BipartiteGraph b;
        C6Embedding c;
        if (i < corpus.items.size()) {
          const auto& h = corpus.items[i];
          o.detail = " " + describe(h);
          auto rc = build_c6_retract(h);
          b = rc.graph;
          c = rotate_embedding(rc.cycle, 1);
        } else {
          o.detail = " " + describe(fixed);
          b = fixed;
          c = identity;
        }
        o.check(compaction_hypotheses(b, c), "hypotheses");
        auto cc = build_compaction(b, c);
        mark_used("build_compaction");
        if (mutation_is(ctx, "drop-gadget-edge"))
          cc.graph = drop_edge(cc.graph, static_cast<Vertex>(cc.base_order), c.at(3));
        std::size_t outside = 0;
        for (Vertex v : b.side(b.part(c.at(0)))) outside += c.contains(v) ? 0 : 1;
        o.require(cc.graph.order() - b.order() == 18 * outside, "added vertex count differs from 18 per vertex");
        o.check(compaction_guarantees(cc.graph, c), "structural guarantees");

        auto r = solve_retraction(b, c);
        auto f = solve_c6_compaction(cc.graph.graph());
        mark_used("solve_c6_compaction");
        o.compare(r.has_value(), f.has_value());
        if (f) {
          o.check(validate_hom(cc.graph.graph(), cycle_graph(6), *f, HomMode::edge_surjective), "target certificate");
          auto normalized = normalize_compaction(cc.graph, c, *f);
          mark_used("normalize_compaction");
          o.check(validate_retraction(cc.graph, c, normalized), "normalized compaction");
          VertexMapping base{std::vector<Vertex>(normalized.image.begin(), normalized.image.begin() + b.order())};
          o.check(validate_retraction(b, c, base), "normalized compaction restricted to the base graph");
        }
        if (r) {
          auto extended = extend_retraction_to_compaction(cc, *r);
          o.check(validate_hom(cc.graph.graph(), cycle_graph(6), extended, HomMode::edge_surjective),
                  "extended retraction");
        }
        auto record = cor8_check(cc.graph);
        mark_used("solve_surjective_c6");
        if (!record.ok()) o.fail("surjective answer differs from compaction answer at diameter " +
                                 std::to_string(record.diameter));
      });
  return report;
}

auto suite_thm13(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "thm13");
  const auto& corpus = shared_hypergraph_corpus(ctx.options.seed);
  auto report = run_indexed(ctx, "thm13", corpus.descriptor + ", vertices in no hyperedge removed",
                            corpus.items.size(), [&](std::size_t i, Outcome& o) {
    auto h = drop_isolated(corpus.items[i]);
    o.detail = " " + describe(h);
    auto fc = build_fall3_diam4(h);
    mark_used("build_fall3_diam4");
    if (mutation_is(ctx, "drop-v1-v'1"))
      fc.graph = drop_edge(fc.graph, vertex_named(fc.names, "v1"), vertex_named(fc.names, "v'1"));
    const auto n = h.order(), m = h.edges().size();
    o.require(fc.graph.order() == 2 * n + m + 2, "vertex count differs from 2n+m+2");
    bool parts_ok = true;
    for (Vertex v = 0; v < fc.graph.order(); ++v)
      parts_ok &= fc.graph.part(v) == (v < n || v == fc.graph.order() - 1 ? Part::Y : Part::X);
    o.require(parts_ok, "bipartition differs from (V'+E+v, V+v')");
    o.require(diameter(fc.graph.graph()) <= 4, "diameter above 4");

    auto two = solve_h2col(h);
    auto f = solve_fall_coloring(fc.graph.graph(), 3);
    mark_used("solve_fall_coloring");
    o.compare(two.has_value(), f.has_value());
    if (two) {
      auto g = two_coloring_to_fall(fc, *two);
      o.check(validate_fall(fc.graph.graph(), 3, g), "translated fall coloring");
    }
    if (f) {
      o.check(validate_fall(fc.graph.graph(), 3, *f), "target certificate");
      o.check(check_both_parts_full(fc.graph, 3, *f), "both parts see every color");
      o.check(validate_h2col(h, fall_to_two_coloring(fc, *f)), "translated two-coloring");
    }
  });
  report.notes.push_back("removing vertices in no hyperedge keeps two-colorability unchanged");
  return report;
}

auto suite_appA(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "appA");
  const auto& corpus = shared_hypergraph_corpus(ctx.options.seed);
  return run_indexed(ctx, "appA", corpus.descriptor, corpus.items.size(), [&](std::size_t i, Outcome& o) {
    const auto& h = corpus.items[i];
    o.detail = " " + describe(h);
    auto lc = appendix_listcol3(h);
    mark_used("appendix_listcol3");
    const auto m = h.edges().size();
    bool mutated = mutation_is(ctx, "drop-a1-b1");
    if (mutated) lc.graph = drop_edge(lc.graph, 0, static_cast<Vertex>(m));
    o.require(lc.graph.graph().size() == m * m - (mutated ? 1 : 0), "graph is not K_{m,m}");

    auto two = solve_h2col(h);
    auto f = solve_list_coloring(lc.graph.graph(), lc.lists, lc.k);
    mark_used("solve_list_coloring");
    o.compare(two.has_value(), f.has_value());
    if (!mutated) {
      auto g = listcol_complete_bipartite(lc.graph, lc.lists, lc.k);
      mark_used("listcol_complete_bipartite");
      mark_used("complementary_hitting_sets");
      if (g.has_value() != f.has_value()) o.fail("hitting-set path disagrees with the generic solver");
      if (g) o.check(validate_list_coloring(lc.graph.graph(), lc.lists, *g), "hitting-set certificate");
    }
    if (two) o.check(validate_list_coloring(lc.graph.graph(), lc.lists, two_coloring_to_list_coloring(h, *two)),
                     "translated list coloring");
    if (f) {
      o.check(validate_list_coloring(lc.graph.graph(), lc.lists, *f), "target certificate");
      o.check(validate_h2col(h, list_coloring_to_two_coloring(h, *f)), "translated two-coloring");
    }
  });
}

}  // namespace chromatic::verify::detail
