#include "chromatic/validate.hpp"

#include <algorithm>
#include <set>

#include "chromatic/errors.hpp"

namespace chromatic {

namespace {

auto vtx(Vertex v) -> std::string { return std::to_string(v + 1); }
auto edge(Vertex u, Vertex v) -> std::string { return "(" + vtx(u) + "," + vtx(v) + ")"; }

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

auto validate_proper(const Graph& g, const Coloring& f, Color k) -> Verdict {
  if (f.size() != g.order()) return Verdict::fail("totality: coloring has " + std::to_string(f.size()) + " entries");
  for (Vertex v = 0; v < g.order(); ++v)
    if (f[v] < 1 || f[v] > k) return Verdict::fail("palette: vertex " + vtx(v) + " has color " + std::to_string(f[v]));
  for (const auto& e : g.edges())
    if (f[e.u] == f[e.v]) return Verdict::fail("properness: edge " + edge(e.u, e.v) + " is monochromatic");
  return Verdict::pass();
}

auto validate_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& f) -> Verdict {
  if (f.size() != g.order()) return Verdict::fail("totality: coloring has " + std::to_string(f.size()) + " entries");
  for (Vertex v = 0; v < g.order(); ++v)
    if (std::find(lists[v].begin(), lists[v].end(), f[v]) == lists[v].end())
      return Verdict::fail("list: vertex " + vtx(v) + " has color " + std::to_string(f[v]) + " outside its list");
  for (const auto& e : g.edges())
    if (f[e.u] == f[e.v]) return Verdict::fail("properness: edge " + edge(e.u, e.v) + " is monochromatic");
  return Verdict::pass();
}

auto validate_extension(const Graph& g, Color k, const PartialColoring& p, const Coloring& f) -> Verdict {
  if (auto v = validate_proper(g, f, k); !v) return v;
  for (auto [u, c] : p.assigned)
    if (f[u] != c) return Verdict::fail("extension: vertex " + vtx(u) + " precolored " + std::to_string(c));
  return Verdict::pass();
}

auto is_b_vertex(const Graph& g, Color k, const Coloring& f, Vertex v) -> bool {
  std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
  seen[static_cast<std::size_t>(f[v])] = 1;
  for (Vertex w : g.neighbors(v)) seen[static_cast<std::size_t>(f[w])] = 1;
  return std::count(seen.begin() + 1, seen.end(), 1) == k;
}

auto validate_fall(const Graph& g, Color k, const Coloring& f) -> Verdict {
  if (auto v = validate_proper(g, f, k); !v) return v;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!is_b_vertex(g, k, f, v)) return Verdict::fail("b-vertex: vertex " + vtx(v) + " does not see every color");
  return Verdict::pass();
}

auto validate_hom(const Graph& g, const Graph& h, const VertexMapping& f, HomMode mode, const HomLists& lists)
    -> Verdict {
  if (f.size() != g.order()) return Verdict::fail("totality: mapping has " + std::to_string(f.size()) + " entries");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] >= h.order()) return Verdict::fail("range: vertex " + vtx(v) + " maps outside the target");
    if (!lists.empty() && std::find(lists[v].begin(), lists[v].end(), f[v]) == lists[v].end())
      return Verdict::fail("list: vertex " + vtx(v) + " maps to " + vtx(f[v]) + " outside its list");
  }
  for (const auto& e : g.edges())
    if (!h.adjacent(f[e.u], f[e.v])) return Verdict::fail("homomorphism: edge " + edge(e.u, e.v) + " maps to a non-edge");
  if (mode == HomMode::vertex_surjective) {
    std::vector<char> hit(h.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) hit[f[v]] = 1;
    for (Vertex t = 0; t < h.order(); ++t)
      if (!hit[t]) return Verdict::fail("surjectivity: target vertex " + vtx(t) + " has no preimage");
  }
  if (mode == HomMode::edge_surjective) {
    std::set<std::pair<Vertex, Vertex>> hit;
    for (const auto& e : g.edges()) hit.insert(std::minmax(f[e.u], f[e.v]));
    for (const auto& e : h.edges())
      if (!hit.count({e.u, e.v})) return Verdict::fail("edge-surjectivity: target edge " + edge(e.u, e.v) + " has no preimage");
  }
  return Verdict::pass();
}

auto validate_retraction(const BipartiteGraph& b, const C6Embedding& c, const VertexMapping& r) -> Verdict {
  const auto& g = b.graph();
  if (r.size() != g.order()) return Verdict::fail("totality: mapping has " + std::to_string(r.size()) + " entries");
  for (Vertex v = 0; v < g.order(); ++v)
    if (!c.contains(r[v])) return Verdict::fail("range: vertex " + vtx(v) + " maps off the cycle");
  for (int i = 0; i < 6; ++i)
    if (r[c.at(i)] != c.at(i)) return Verdict::fail("retraction: cycle vertex " + vtx(c.at(i)) + " is moved");
  for (const auto& e : g.edges())
    if (!g.adjacent(r[e.u], r[e.v])) return Verdict::fail("homomorphism: edge " + edge(e.u, e.v) + " maps to a non-edge");
  return Verdict::pass();
}

auto validate_biclique_partition(const BipartiteGraph& b, std::size_t k, const BicliquePartition& p) -> Verdict {
  const auto& g = b.graph();
  if (p.blocks.size() > k) return Verdict::fail("block count: " + std::to_string(p.blocks.size()) + " > " + std::to_string(k));
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    for (Vertex v : p.blocks[i]) {
      if (v >= g.order()) return Verdict::fail("range: vertex " + vtx(v) + " out of range");
      if (owner[v] >= 0) return Verdict::fail("disjointness: vertex " + vtx(v) + " in two blocks");
      owner[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (owner[v] < 0) return Verdict::fail("cover: vertex " + vtx(v) + " in no block");
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    bool has_edge = false;
    for (Vertex u : p.blocks[i]) {
      for (Vertex v : p.blocks[i]) {
        if (b.part(u) != Part::X || b.part(v) != Part::Y) continue;
        if (!g.adjacent(u, v)) return Verdict::fail("biclique: block " + std::to_string(i + 1) + " misses edge " + edge(u, v));
        has_edge = true;
      }
    }
    if (!has_edge) return Verdict::fail("biclique: block " + std::to_string(i + 1) + " has no edge");
  }
  return Verdict::pass();
}

auto validate_h2col(const Hypergraph3& h, const Coloring& f) -> Verdict {
  if (f.size() != h.order()) return Verdict::fail("totality: coloring has " + std::to_string(f.size()) + " entries");
  for (Vertex v = 0; v < h.order(); ++v)
    if (f[v] != 1 && f[v] != 2) return Verdict::fail("palette: vertex " + vtx(v) + " has color " + std::to_string(f[v]));
  for (std::size_t j = 0; j < h.edges().size(); ++j) {
    const auto& e = h.edges()[j];
    if (f[e[0]] == f[e[1]] && f[e[1]] == f[e[2]])
      return Verdict::fail("bichromatic: hyperedge " + std::to_string(j + 1) + " is monochromatic");
  }
  return Verdict::pass();
}

auto validate(const Instance& instance, const Certificate& certificate) -> Verdict {
  auto mismatch = [](const char* want) -> Verdict {
    throw InputError(std::string("certificate kind mismatch: expected ") + want);
  };
  return std::visit(
      Overloaded{
          [&](const ListColoringInstance& i, const Coloring& f) { return validate_list_coloring(i.g, i.lists, f); },
          [&](const PreextInstance& i, const Coloring& f) { return validate_extension(i.g, i.k, i.p, f); },
          [&](const FallInstance& i, const Coloring& f) { return validate_fall(i.g, i.k, f); },
          [&](const HomInstance& i, const VertexMapping& f) { return validate_hom(i.g, i.h, f, i.mode, i.lists); },
          [&](const RetractionInstance& i, const VertexMapping& f) { return validate_retraction(i.b, i.c, f); },
          [&](const BicliqueInstance& i, const BicliquePartition& p) { return validate_biclique_partition(i.b, i.k, p); },
          [&](const H2colInstance& i, const Coloring& f) { return validate_h2col(i.h, f); },
          [&](const HomInstance&, const auto&) { return mismatch("mapping"); },
          [&](const RetractionInstance&, const auto&) { return mismatch("mapping"); },
          [&](const BicliqueInstance&, const auto&) { return mismatch("partition"); },
          [&](const auto&, const auto&) { return mismatch("coloring"); },
      },
      instance, certificate);
}

}  // namespace chromatic
