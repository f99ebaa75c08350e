#include <algorithm>
#include <array>
#include <stdexcept>

#include "chromatic/errors.hpp"
#include "chromatic/reductions.hpp"
#include "chromatic/solvers.hpp"

namespace chromatic {

namespace {

constexpr std::array<const char*, 3> kPairs = {"14", "36", "52"};

auto x_h(const C6Embedding& c) -> std::array<Vertex, 3> { return {c.at(0), c.at(2), c.at(4)}; }

auto distance_check(const BipartiteGraph& b, const C6Embedding& c) -> Verdict {
  auto xs = b.side(b.part(c.at(0)));
  for (Vertex h : x_h(c)) {
    auto dist = bfs_distances(b.graph(), h);
    for (Vertex x : xs)
      if (dist[x] > 2)
        return Verdict::fail("distance: vertex " + std::to_string(x + 1) + " is farther than 2 from " + std::to_string(h + 1));
  }
  return Verdict::pass();
}

}  // namespace

auto rotate_embedding(const C6Embedding& c, int shift) -> C6Embedding {
  C6Embedding out;
  for (int i = 0; i < 6; ++i) out.cycle[static_cast<std::size_t>(i)] = c.at(((i + shift) % 6 + 6) % 6);
  return out;
}

auto compaction_hypotheses(const BipartiteGraph& b, const C6Embedding& c) -> Verdict {
  try {
    check_c6_embedding(b, c);
  } catch (const InputError& e) {
    return Verdict::fail(e.what());
  }
  auto hs = x_h(c);
  if (!dominates(b.graph(), hs, b.side(other(b.part(c.at(0))))))
    return Verdict::fail("domination: X_H does not dominate Y");
  return distance_check(b, c);
}

auto compaction_guarantees(const BipartiteGraph& gprime, const C6Embedding& c) -> Verdict {
  if (auto verdict = compaction_hypotheses(gprime, c); !verdict) return verdict;
  if (auto d = diameter(gprime.graph()); d > 4)
    return Verdict::fail("diameter: " + (d == kInfiniteDistance ? std::string("infinite") : std::to_string(d)) + " > 4");
  return Verdict::pass();
}

auto build_compaction(const BipartiteGraph& b, const C6Embedding& c, bool attach_to_cycle) -> CompactionConstruction {
  if (auto verdict = compaction_hypotheses(b, c); !verdict) throw PreconditionError(verdict.violation);
  NamedBipartiteBuilder nb;
  for (Vertex v = 0; v < b.order(); ++v) nb.add("v" + std::to_string(v + 1), b.part(v));
  for (const auto& e : b.graph().edges()) nb.connect(e.u, e.v);

  const Part xp = b.part(c.at(0));
  std::size_t attached = 0;
  for (Vertex u = 0; u < b.order(); ++u) {
    if (b.part(u) != xp || (c.contains(u) && !attach_to_cycle)) continue;
    ++attached;
    for (int t = 0; t < 3; ++t) {
      auto h = [&](int i) { return c.at((2 * t + i - 1) % 6); };
      auto prefix = "dg" + std::to_string(u + 1) + ":" + kPairs[static_cast<std::size_t>(t)] + ":";
      Vertex a1 = nb.add(prefix + "a1", xp), a2 = nb.add(prefix + "a2", xp);
      Vertex b1 = nb.add(prefix + "b1", other(xp)), b2 = nb.add(prefix + "b2", other(xp));
      Vertex c1 = nb.add(prefix + "c1", other(xp)), c2 = nb.add(prefix + "c2", other(xp));
      for (Vertex w : {b1, b2, c1, c2})
        if (!(w == c1 && u == h(3)) && !(w == c2 && u == h(5)) && !((w == b1 || w == b2) && u == h(1)))
          nb.connect(u, w);
      nb.connect(h(1), b1);
      nb.connect(h(1), b2);
      nb.connect(b1, a1);
      nb.connect(b2, a2);
      nb.connect(h(4), a1);
      nb.connect(h(4), a2);
      nb.connect(a1, c1);
      nb.connect(c1, h(3));
      nb.connect(a2, c2);
      nb.connect(c2, h(5));
    }
  }
  CompactionConstruction cc{nb.build(), c, nb.names(), b.order(), attached};
  if (auto verdict = compaction_guarantees(cc.graph, cc.cycle); !verdict)
    throw std::logic_error("compaction construction: " + verdict.violation);
  return cc;
}

auto normalize_compaction(const BipartiteGraph& gprime, const C6Embedding& c, const VertexMapping& f) -> VertexMapping {
  const Graph target = cycle_graph(6);
  if (f.size() != gprime.order()) throw InputError("mapping has the wrong length");
  if (auto verdict = validate_hom(gprime.graph(), target, f, HomMode::edge_surjective); !verdict)
    throw InputError("not a compaction: " + verdict.violation);
  std::array<int, 6> inverse{-1, -1, -1, -1, -1, -1};
  for (int i = 0; i < 6; ++i) {
    auto img = f[c.at(i)];
    if (inverse[img] != -1)
      throw FalsificationError("compaction is not injective on the cycle: vertices " + std::to_string(c.at(inverse[img]) + 1) +
                               " and " + std::to_string(c.at(i) + 1) + " share an image");
    inverse[img] = i;
  }
  VertexMapping r;
  r.image.reserve(f.size());
  for (Vertex img : f.image) r.image.push_back(c.at(inverse[img]));
  if (auto verdict = validate_retraction(gprime, c, r); !verdict)
    throw FalsificationError("relabeled compaction is not a retraction: " + verdict.violation);
  return r;
}

auto extend_retraction_to_compaction(const CompactionConstruction& cc, const VertexMapping& r) -> VertexMapping {
  if (r.size() != cc.base_order) throw InputError("retraction has the wrong length");
  HomLists lists(cc.graph.order(), {0, 1, 2, 3, 4, 5});
  for (Vertex v = 0; v < cc.base_order; ++v) {
    auto pos = cc.cycle.position(r[v]);
    if (!pos) throw InputError("retraction leaves the cycle at vertex " + std::to_string(v + 1));
    lists[v] = {static_cast<Vertex>(*pos)};
  }
  auto f = solve_list_hom(cc.graph.graph(), cycle_graph(6), lists, HomMode::plain);
  if (!f) throw FalsificationError("retraction does not extend over the diagonal gadgets");
  return *f;
}

}  // namespace chromatic
