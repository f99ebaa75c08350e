#include "chromatic/graph.hpp"

#include <algorithm>
#include <queue>

#include "chromatic/errors.hpp"

namespace chromatic {

namespace {

auto edge_label(Vertex u, Vertex v) -> std::string {
  return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}

}  // namespace

Graph::Graph(std::size_t order) : adjacency_(order) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : adjacency_(order) {
  for (const auto& e : edges) {
    if (e.u >= order || e.v >= order) throw InputError("edge " + edge_label(e.u, e.v) + " out of range");
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u + 1));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
      auto u = static_cast<Vertex>(&list - adjacency_.data());
      throw InputError("duplicate edge " + edge_label(u, *dup));
    }
  }
  edge_count_ = edges.size();
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool {
  const auto& a = adjacency_[u];
  const auto& b = adjacency_[v];
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                              : std::binary_search(b.begin(), b.end(), u);
}

auto Graph::edges() const -> std::vector<Edge> {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

BipartiteGraph::BipartiteGraph(Graph graph, std::vector<Part> parts)
    : graph_(std::move(graph)), parts_(std::move(parts)) {
  if (parts_.size() != graph_.order()) throw InputError("part labeling does not cover every vertex");
  for (const auto& e : graph_.edges())
    if (parts_[e.u] == parts_[e.v]) throw InputError("edge " + edge_label(e.u, e.v) + " lies inside one part");
}

auto BipartiteGraph::side(Part p) const -> std::vector<Vertex> {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v)
    if (parts_[v] == p) out.push_back(v);
  return out;
}

Hypergraph3::Hypergraph3(std::size_t order, std::vector<Triple> edges) : order_(order), edges_(std::move(edges)) {
  std::vector<Triple> seen;
  for (auto& t : edges_) {
    std::sort(t.begin(), t.end());
    for (Vertex v : t)
      if (v >= order_) throw InputError("hyperedge vertex " + std::to_string(v + 1) + " out of range");
    if (t[0] == t[1] || t[1] == t[2]) throw InputError("hyperedge with repeated vertex " + std::to_string(t[1] + 1));
    seen.push_back(t);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw InputError("duplicate hyperedge");
}

auto C6Embedding::contains(Vertex v) const -> bool { return position(v).has_value(); }

auto C6Embedding::position(Vertex v) const -> std::optional<int> {
  for (int i = 0; i < 6; ++i)
    if (cycle[static_cast<std::size_t>(i)] == v) return i;
  return std::nullopt;
}

void check_c6_embedding(const BipartiteGraph& host, const C6Embedding& c) {
  const auto& g = host.graph();
  for (int i = 0; i < 6; ++i) {
    if (c.at(i) >= g.order()) throw InputError("cycle vertex " + std::to_string(c.at(i) + 1) + " out of range");
    for (int j = 0; j < i; ++j)
      if (c.at(i) == c.at(j)) throw InputError("cycle repeats vertex " + std::to_string(c.at(i) + 1));
  }
  for (int i = 0; i < 6; ++i) {
    Vertex u = c.at(i), v = c.at((i + 1) % 6);
    if (!g.adjacent(u, v)) throw InputError("cycle edge " + edge_label(u, v) + " missing from host");
    if (host.part(u) == host.part(c.at(0)) && i % 2 == 1)
      throw InputError("cycle vertex " + std::to_string(u + 1) + " in the wrong part");
  }
  for (int i = 0; i < 3; ++i)
    if (g.adjacent(c.at(i), c.at(i + 3))) throw InputError("cycle diagonal " + edge_label(c.at(i), c.at(i + 3)) + " present");
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= order_ || v >= order_) throw InputError("edge " + edge_label(u, v) + " out of range");
  edges_.push_back({u, v});
}

auto NamedBipartiteBuilder::add(const std::string& name, Part part) -> Vertex {
  auto v = static_cast<Vertex>(names_.size());
  if (!index_.emplace(name, v).second) throw InputError("duplicate vertex name " + name);
  names_.push_back(name);
  parts_.push_back(part);
  return v;
}

auto NamedBipartiteBuilder::id(const std::string& name) const -> Vertex {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown vertex name " + name);
  return it->second;
}

void NamedBipartiteBuilder::connect(Vertex u, Vertex v) { edges_.push_back({u, v}); }

auto NamedBipartiteBuilder::build() const -> BipartiteGraph {
  return BipartiteGraph(Graph(names_.size(), edges_), parts_);
}

auto bipartition(const Graph& g) -> std::optional<BipartiteGraph> {
  std::vector<int> side(g.order(), -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Part> parts(g.order());
  for (Vertex v = 0; v < g.order(); ++v) parts[v] = side[v] == 0 ? Part::X : Part::Y;
  return BipartiteGraph(g, std::move(parts));
}

auto bfs_distances(const Graph& g, Vertex source) -> std::vector<std::size_t> {
  std::vector<std::size_t> dist(g.order(), kInfiniteDistance);
  std::vector<Vertex> frontier{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Vertex u = frontier[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kInfiniteDistance) continue;
      dist[w] = dist[u] + 1;
      frontier.push_back(w);
    }
  }
  return dist;
}

auto diameter(const Graph& g) -> std::size_t {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    auto dist = bfs_distances(g, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    if (best == kInfiniteDistance) break;
  }
  return best;
}

auto is_connected(const Graph& g) -> bool {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kInfiniteDistance) == dist.end();
}

auto bipartite_complement(const BipartiteGraph& b) -> BipartiteGraph {
  const auto& g = b.graph();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (b.part(u) != Part::X) continue;
    for (Vertex v = 0; v < g.order(); ++v)
      if (b.part(v) == Part::Y && !g.adjacent(u, v)) edges.push_back({u, v});
  }
  return BipartiteGraph(Graph(g.order(), edges), b.parts());
}

auto enumerate_induced_c6(const BipartiteGraph& b) -> std::vector<C6Embedding> {
  const auto& g = b.graph();
  std::vector<C6Embedding> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex v1 : g.neighbors(a)) {
      if (v1 < a) continue;
      for (Vertex v2 : g.neighbors(v1)) {
        if (v2 <= a) continue;
        for (Vertex v3 : g.neighbors(v2)) {
          if (v3 <= a || v3 == v1 || g.adjacent(a, v3)) continue;
          for (Vertex v4 : g.neighbors(v3)) {
            if (v4 <= a || v4 == v2 || g.adjacent(v1, v4)) continue;
            for (Vertex v5 : g.neighbors(v4)) {
              if (v5 <= v1 || v5 == v3 || !g.adjacent(v5, a) || g.adjacent(v2, v5)) continue;
              out.push_back({{a, v1, v2, v3, v4, v5}});
            }
          }
        }
      }
    }
  }
  return out;
}

auto dominates(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> t) -> bool {
  std::vector<char> covered(g.order(), 0);
  for (Vertex u : s) {
    covered[u] = 1;
    for (Vertex w : g.neighbors(u)) covered[w] = 1;
  }
  return std::all_of(t.begin(), t.end(), [&](Vertex v) { return covered[v] != 0; });
}

auto without_edge(const Graph& g, Vertex u, Vertex v) -> Graph {
  auto edges = g.edges();
  std::erase_if(edges, [&](const Edge& e) { return (e.u == u && e.v == v) || (e.u == v && e.v == u); });
  return Graph(g.order(), edges);
}

auto with_edge(const Graph& g, Vertex u, Vertex v) -> Graph {
  auto edges = g.edges();
  edges.push_back({u, v});
  return Graph(g.order(), edges);
}

auto with_graph(const BipartiteGraph& b, Graph g) -> BipartiteGraph { return BipartiteGraph(std::move(g), b.parts()); }

auto path_graph(std::size_t n) -> Graph {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

auto cycle_graph(std::size_t n) -> Graph {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, edges);
}

auto complete_graph(std::size_t n) -> Graph {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

auto complete_bipartite(std::size_t a, std::size_t b) -> BipartiteGraph {
  std::vector<Edge> edges;
  std::vector<Part> parts(a + b, Part::Y);
  for (Vertex i = 0; i < a; ++i) {
    parts[i] = Part::X;
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, static_cast<Vertex>(a + j)});
  }
  return BipartiteGraph(Graph(a + b, edges), std::move(parts));
}

auto fano_plane() -> Hypergraph3 {
  return Hypergraph3(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

}  // namespace chromatic
