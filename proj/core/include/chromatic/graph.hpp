#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace chromatic {

using Vertex = std::uint32_t;

inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph with sorted adjacency lists. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::span<const Edge> edges);

  auto order() const noexcept -> std::size_t { return adjacency_.size(); }
  auto size() const noexcept -> std::size_t { return edge_count_; }
  auto neighbors(Vertex v) const -> std::span<const Vertex> { return adjacency_[v]; }
  auto degree(Vertex v) const -> std::size_t { return adjacency_[v].size(); }
  auto adjacent(Vertex u, Vertex v) const -> bool;
  // Edges with u < v in lexicographic order.
  auto edges() const -> std::vector<Edge>;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

enum class Part : std::uint8_t { X, Y };

inline auto other(Part p) -> Part { return p == Part::X ? Part::Y : Part::X; }

class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(Graph graph, std::vector<Part> parts);

  auto graph() const -> const Graph& { return graph_; }
  auto order() const -> std::size_t { return graph_.order(); }
  auto part(Vertex v) const -> Part { return parts_[v]; }
  auto parts() const -> const std::vector<Part>& { return parts_; }
  auto side(Part p) const -> std::vector<Vertex>;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  Graph graph_;
  std::vector<Part> parts_;
};

using Triple = std::array<Vertex, 3>;

// 3-uniform hypergraph; each triple is stored sorted, input order is kept.
class Hypergraph3 {
 public:
  Hypergraph3() = default;
  Hypergraph3(std::size_t order, std::vector<Triple> edges);

  auto order() const -> std::size_t { return order_; }
  auto edges() const -> const std::vector<Triple>& { return edges_; }

  friend bool operator==(const Hypergraph3&, const Hypergraph3&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Triple> edges_;
};

// An induced 6-cycle (h1..h6) of some host bipartite graph.
struct C6Embedding {
  std::array<Vertex, 6> cycle{};

  auto at(int i) const -> Vertex { return cycle[static_cast<std::size_t>(i)]; }
  auto contains(Vertex v) const -> bool;
  auto position(Vertex v) const -> std::optional<int>;
  friend bool operator==(const C6Embedding&, const C6Embedding&) = default;
};

// Throws InputError naming the first violated embedding condition.
void check_c6_embedding(const BipartiteGraph& host, const C6Embedding& c);

// Incrementally builds a graph; rejects loops and duplicate edges.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order = 0) : edges_(), order_(order) {}
  auto add_vertex() -> Vertex { return static_cast<Vertex>(order_++); }
  void add_edge(Vertex u, Vertex v);
  auto order() const -> std::size_t { return order_; }
  auto build() const -> Graph { return Graph(order_, edges_); }

 private:
  std::vector<Edge> edges_;
  std::size_t order_;
};

// Builder for constructions that name every vertex and fix its part up front.
class NamedBipartiteBuilder {
 public:
  auto add(const std::string& name, Part part) -> Vertex;
  auto id(const std::string& name) const -> Vertex;
  void connect(Vertex u, Vertex v);
  void connect(const std::string& a, const std::string& b) { connect(id(a), id(b)); }
  auto order() const -> std::size_t { return names_.size(); }
  auto build() const -> BipartiteGraph;
  auto names() const -> const std::vector<std::string>& { return names_; }

 private:
  std::vector<std::string> names_;
  std::vector<Part> parts_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

auto bipartition(const Graph& g) -> std::optional<BipartiteGraph>;
auto bfs_distances(const Graph& g, Vertex source) -> std::vector<std::size_t>;
auto diameter(const Graph& g) -> std::size_t;
auto is_connected(const Graph& g) -> bool;
auto bipartite_complement(const BipartiteGraph& b) -> BipartiteGraph;
auto enumerate_induced_c6(const BipartiteGraph& b) -> std::vector<C6Embedding>;
auto dominates(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> t) -> bool;

auto without_edge(const Graph& g, Vertex u, Vertex v) -> Graph;
auto with_edge(const Graph& g, Vertex u, Vertex v) -> Graph;
auto with_graph(const BipartiteGraph& b, Graph g) -> BipartiteGraph;

auto path_graph(std::size_t n) -> Graph;
auto cycle_graph(std::size_t n) -> Graph;
auto complete_graph(std::size_t n) -> Graph;
auto complete_bipartite(std::size_t a, std::size_t b) -> BipartiteGraph;
auto fano_plane() -> Hypergraph3;

}  // namespace chromatic
