#include <array>
#include <stdexcept>

#include "chromatic/errors.hpp"
#include "chromatic/reductions.hpp"

namespace chromatic {

namespace {

constexpr std::array<Vertex, 3> kXImage = {0, 4, 2};
constexpr std::array<Vertex, 3> kYImage = {3, 1, 5};

}  // namespace

auto biclique_to_surjective(const BipartiteGraph& b, const BicliquePartition& p) -> VertexMapping {
  if (p.blocks.size() != 3) throw InputError("expected exactly 3 blocks, got " + std::to_string(p.blocks.size()));
  if (auto verdict = validate_biclique_partition(b, 3, p); !verdict) throw InputError(verdict.violation);
  for (std::size_t i = 0; i < 3; ++i) {
    bool has_x = false, has_y = false;
    for (Vertex v : p.blocks[i]) (b.part(v) == Part::X ? has_x : has_y) = true;
    if (!has_x || !has_y) throw InputError("block " + std::to_string(i + 1) + " misses a part");
  }
  VertexMapping f{std::vector<Vertex>(b.order(), 0)};
  for (std::size_t i = 0; i < 3; ++i)
    for (Vertex v : p.blocks[i]) f.image[v] = b.part(v) == Part::X ? kXImage[i] : kYImage[i];
  return f;
}

auto surjective_to_biclique(const BipartiteGraph& b, const VertexMapping& f) -> BicliquePartition {
  if (f.size() != b.order()) throw InputError("mapping has the wrong length");
  auto complement = bipartite_complement(b);
  if (auto verdict = validate_hom(complement.graph(), cycle_graph(6), f, HomMode::vertex_surjective); !verdict)
    throw InputError(verdict.violation);
  std::optional<Vertex> parity;
  for (Vertex v = 0; v < b.order(); ++v) {
    if (b.part(v) != Part::X) continue;
    if (!parity) parity = f[v] % 2;
    else if (*parity != f[v] % 2)
      throw InputError("X vertices " + std::to_string(v + 1) + " and an earlier one map to images of different parity");
  }
  Vertex shift = parity.value_or(0);
  BicliquePartition p{std::vector<std::vector<Vertex>>(3)};
  for (Vertex v = 0; v < b.order(); ++v) p.blocks[((f[v] + shift) % 6) % 3].push_back(v);
  if (auto verdict = validate_biclique_partition(b, 3, p); !verdict)
    throw FalsificationError("regrouped blocks are not a biclique partition: " + verdict.violation);
  return p;
}

auto fmps_flawed_instance(const BipartiteGraph& g, const ListAssignment& lists) -> FmpsConstruction {
  if (lists.size() != g.order()) throw InputError("list assignment has the wrong length");
  NamedBipartiteBuilder nb;
  for (Vertex v = 0; v < g.order(); ++v) nb.add("v" + std::to_string(v + 1), g.part(v));
  for (const auto& e : g.graph().edges()) nb.connect(e.u, e.v);
  const std::array<std::string, 6> cycle = {"x1", "y2", "x3", "y1", "x2", "y3"};
  C6Embedding c;
  for (std::size_t i = 0; i < 6; ++i) c.cycle[i] = nb.add(cycle[i], i % 2 == 0 ? Part::X : Part::Y);
  for (std::size_t i = 0; i < 6; ++i) nb.connect(cycle[i], cycle[(i + 1) % 6]);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.part(u) != Part::X) continue;
    for (Color col : lists[u])
      if (col < 1 || col > 3) throw InputError("list of vertex " + std::to_string(u + 1) + " leaves {1,2,3}");
    for (Color i = 1; i <= 3; ++i)
      if (std::find(lists[u].begin(), lists[u].end(), i) == lists[u].end()) nb.connect("v" + std::to_string(u + 1), "y" + std::to_string(i));
  }
  return {nb.build(), c, nb.names()};
}

}  // namespace chromatic
