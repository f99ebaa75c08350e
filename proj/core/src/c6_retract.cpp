#include <algorithm>
#include <array>
#include <stdexcept>

#include "chromatic/errors.hpp"
#include "chromatic/reductions.hpp"
#include "chromatic/solvers.hpp"

namespace chromatic {

namespace {

constexpr std::array<const char*, 12> kCells = {"vp1", "vpp1", "a1", "b1", "c1", "d1",
                                                "vp2", "vpp2", "a2", "b2", "c2", "d2"};

auto pv_name(int i) -> std::string { return "pV" + std::to_string(i); }
auto pe_name(int i) -> std::string { return "pE" + std::to_string(i); }

auto cell_index(const std::string& cell) -> std::size_t {
  for (std::size_t i = 0; i < kCells.size(); ++i)
    if (cell == kCells[i]) return i;
  throw InputError("unknown gadget cell " + cell);
}

auto y_c(const C6Embedding& c) -> std::array<Vertex, 3> { return {c.at(1), c.at(3), c.at(5)}; }

auto position_color(int position) -> Color {
  for (int i = 1; i <= 3; ++i)
    if (pv_position(i) == position || pe_position(i) == position) return i;
  throw std::logic_error("bad cycle position");
}

}  // namespace

auto pv_position(int i) -> int { return std::array{0, 4, 2}.at(static_cast<std::size_t>(i - 1)); }
auto pe_position(int i) -> int { return std::array{3, 1, 5}.at(static_cast<std::size_t>(i - 1)); }

auto build_c6_retract(const Hypergraph3& h) -> RetractConstruction {
  if (h.edges().empty()) throw PreconditionError("hypergraph has no hyperedge");
  NamedBipartiteBuilder nb;
  const std::array<std::string, 6> cycle = {pv_name(1), pe_name(2), pv_name(3), pe_name(1), pv_name(2), pe_name(3)};
  for (int i = 0; i < 6; ++i) nb.add(cycle[static_cast<std::size_t>(i)], i % 2 == 0 ? Part::X : Part::Y);
  for (std::size_t i = 0; i < 6; ++i) nb.connect(cycle[i], cycle[(i + 1) % 6]);
  for (std::size_t i = 1; i <= h.order(); ++i) nb.connect(nb.add("v" + std::to_string(i), Part::X), nb.id("pE3"));
  for (std::size_t j = 1; j <= h.edges().size(); ++j) nb.add("e" + std::to_string(j), Part::Y);
  for (std::size_t j = 1; j <= h.edges().size(); ++j) {
    auto prefix = "g" + std::to_string(j) + ":";
    for (const char* cell : kCells) nb.add(prefix + cell, cell[0] == 'v' ? Part::X : Part::Y);
    const auto& triple = h.edges()[j - 1];
    auto ej = "e" + std::to_string(j);
    for (int s = 1; s <= 2; ++s) {
      // Side 2 is side 1 with the indices 1 and 2 of pV and pE exchanged.
      int me = s, you = 3 - s;
      auto cell = [&](const char* base) { return prefix + base + std::to_string(s); };
      auto v = "v" + std::to_string(triple[static_cast<std::size_t>(s - 1)] + 1);
      nb.connect(ej, cell("vpp"));
      nb.connect(cell("vpp"), pe_name(you));
      nb.connect(cell("vpp"), cell("d"));
      nb.connect(cell("vpp"), cell("c"));
      nb.connect(cell("d"), pv_name(you));
      nb.connect(cell("c"), pv_name(me));
      nb.connect(cell("c"), cell("vp"));
      nb.connect(cell("vp"), cell("d"));
      nb.connect(cell("vp"), pe_name(me));
      nb.connect(cell("vp"), cell("b"));
      nb.connect(cell("vp"), cell("a"));
      nb.connect(cell("b"), v);
      nb.connect(cell("b"), pv_name(me));
      nb.connect(cell("a"), v);
      nb.connect(cell("a"), pv_name(3));
    }
    nb.connect(ej, "v" + std::to_string(triple[2] + 1));
  }
  RetractConstruction rc{h, nb.build(), C6Embedding{{0, 1, 2, 3, 4, 5}}, nb.names()};
  if (auto verdict = retract_guarantees(rc.graph, rc.cycle); !verdict)
    throw std::logic_error("retraction construction: " + verdict.violation);
  return rc;
}

auto retract_guarantees(const BipartiteGraph& b, const C6Embedding& c) -> Verdict {
  try {
    check_c6_embedding(b, c);
  } catch (const InputError& e) {
    return Verdict::fail(e.what());
  }
  const auto& g = b.graph();
  auto hs = y_c(c);
  auto xs = b.side(b.part(c.at(0)));
  if (!dominates(g, hs, xs)) return Verdict::fail("domination: Y_C does not dominate X");
  for (Vertex h : hs) {
    auto dist = bfs_distances(g, h);
    for (Vertex y : b.side(b.part(h)))
      if (dist[y] > 2)
        return Verdict::fail("distance: vertex " + std::to_string(y + 1) + " is farther than 2 from " + std::to_string(h + 1));
  }
  return Verdict::pass();
}

auto gadget_vertex(const RetractConstruction& rc, std::size_t j, const std::string& cell) -> Vertex {
  auto base = 6 + rc.source.order() + rc.source.edges().size() + 12 * j;
  return static_cast<Vertex>(base + cell_index(cell));
}

auto gadget_forced_cells(int side, int color) -> std::vector<ForcedCell> {
  if (side == 1 && color == 1) return {{"a1", pe_position(2)}, {"vp1", pv_position(3)}, {"d1", pe_position(1)}, {"vpp1", pv_position(3)}};
  if (side == 1 && color == 2) return {{"vpp1", pv_position(1)}, {"vp1", pv_position(2)}, {"c1", pe_position(3)}, {"b1", pe_position(3)}};
  if (side == 2 && color == 1) return {{"vpp2", pv_position(2)}, {"vp2", pv_position(1)}, {"c2", pe_position(3)}, {"b2", pe_position(3)}};
  if (side == 2 && color == 2) return {{"vpp2", pv_position(3)}, {"vp2", pv_position(3)}, {"d2", pe_position(2)}, {"a2", pe_position(1)}};
  throw InputError("gadget side and color must lie in {1,2}");
}

auto complete_gadget_mapping(const RetractConstruction& rc, const Coloring& two_coloring) -> VertexMapping {
  if (auto verdict = validate_h2col(rc.source, two_coloring); !verdict) throw InputError(verdict.violation);
  const auto& g = rc.graph.graph();
  const auto n = rc.source.order();
  const auto m = rc.source.edges().size();
  VertexMapping r{std::vector<Vertex>(g.order(), 0)};
  for (int i = 0; i < 6; ++i) r.image[rc.cycle.at(i)] = rc.cycle.at(i);
  for (Vertex v = 0; v < n; ++v) r.image[6 + v] = rc.cycle.at(pv_position(two_coloring[v]));

  const Graph target = cycle_graph(6);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& triple = rc.source.edges()[j];
    std::vector<Vertex> local = {0, 1, 2, 3, 4, 5};
    for (Vertex v : triple) local.push_back(static_cast<Vertex>(6 + v));
    local.push_back(static_cast<Vertex>(6 + n + j));
    for (const char* cell : kCells) local.push_back(gadget_vertex(rc, j, cell));
    std::vector<Vertex> where(g.order(), static_cast<Vertex>(local.size()));
    for (std::size_t i = 0; i < local.size(); ++i) where[local[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < local.size(); ++i)
      for (Vertex w : g.neighbors(local[i]))
        if (where[w] < local.size() && where[w] > i) edges.push_back({static_cast<Vertex>(i), where[w]});

    HomLists lists(local.size(), {0, 1, 2, 3, 4, 5});
    for (std::size_t i = 0; i < 6 + 3; ++i) lists[i] = {static_cast<Vertex>(*rc.cycle.position(r.image[local[i]]))};
    for (int side = 1; side <= 2; ++side)
      for (const auto& fc : gadget_forced_cells(side, two_coloring[triple[static_cast<std::size_t>(side - 1)]]))
        lists[where[gadget_vertex(rc, j, fc.cell)]] = {static_cast<Vertex>(fc.position)};
    auto f = solve_list_hom(Graph(local.size(), edges), target, lists, HomMode::plain);
    if (!f) throw std::logic_error("gadget " + std::to_string(j + 1) + " cannot be completed");
    for (std::size_t i = 6 + 3; i < local.size(); ++i) r.image[local[i]] = rc.cycle.at(static_cast<int>((*f)[static_cast<Vertex>(i)]));
  }
  return r;
}

auto retraction_to_two_coloring(const RetractConstruction& rc, const VertexMapping& r) -> Coloring {
  Coloring f;
  for (Vertex v = 0; v < rc.source.order(); ++v) {
    Vertex img = r[6 + v];
    if (img == rc.cycle.at(pv_position(1))) f.colors.push_back(1);
    else if (img == rc.cycle.at(pv_position(2))) f.colors.push_back(2);
    else throw InputError("vertex v" + std::to_string(v + 1) + " is not mapped to pV1 or pV2");
  }
  return f;
}

auto retract_to_preext3(const BipartiteGraph& b, const C6Embedding& c) -> PreextInstance3 {
  if (auto verdict = retract_guarantees(b, c); !verdict) throw InputError(verdict.violation);
  PreextInstance3 out{b.graph(), {}, 3};
  for (int i = 1; i <= 3; ++i) {
    out.precoloring.assigned[c.at(pv_position(i))] = i;
    out.precoloring.assigned[c.at(pe_position(i))] = i;
  }
  if (auto verdict = preext_guarantees(b, c, out); !verdict) throw InputError(verdict.violation);
  return out;
}

auto preext_guarantees(const BipartiteGraph& b, const C6Embedding& c, const PreextInstance3& inst) -> Verdict {
  if (auto d = diameter(inst.graph); d > 4)
    return Verdict::fail("diameter: " + (d == kInfiniteDistance ? std::string("infinite") : std::to_string(d)) + " > 4");
  for (Vertex x : b.side(b.part(c.at(0)))) {
    auto nbrs = inst.graph.neighbors(x);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return inst.precoloring.assigned.count(w) > 0; }))
      return Verdict::fail("precolored neighbor: vertex " + std::to_string(x + 1) + " has none");
  }
  return Verdict::pass();
}

auto extension_to_retraction(const BipartiteGraph& b, const C6Embedding& c, const Coloring& f) -> VertexMapping {
  VertexMapping r;
  Part x_part = b.part(c.at(0));
  for (Vertex v = 0; v < b.order(); ++v) {
    if (f[v] < 1 || f[v] > 3) throw InputError("extension uses color " + std::to_string(f[v]));
    r.image.push_back(c.at(b.part(v) == x_part ? pv_position(f[v]) : pe_position(f[v])));
  }
  return r;
}

auto retraction_to_extension(const C6Embedding& c, const VertexMapping& r) -> Coloring {
  Coloring f;
  for (Vertex img : r.image) {
    auto pos = c.position(img);
    if (!pos) throw InputError("mapping leaves the cycle");
    f.colors.push_back(position_color(*pos));
  }
  return f;
}

}  // namespace chromatic
