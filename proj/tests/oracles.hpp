#pragma once

// Naive exhaustive deciders used as reference answers. Exponential; keep inputs tiny.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "chromatic/certificates.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/hitset.hpp"

namespace oracle {

using namespace chromatic;

// Calls visit on every vector in [0,base)^n until it returns true.
inline auto odometer(std::size_t n, std::size_t base, const std::function<bool(const std::vector<std::size_t>&)>& visit)
    -> bool {
  std::vector<std::size_t> a(n, 0);
  if (base == 0) return n == 0 && visit(a);
  while (true) {
    if (visit(a)) return true;
    std::size_t i = 0;
    while (i < n && ++a[i] == base) a[i++] = 0;
    if (i == n) return false;
  }
}

inline auto proper(const Graph& g, const std::vector<std::size_t>& a) -> bool {
  for (const auto& e : g.edges())
    if (a[e.u] == a[e.v]) return false;
  return true;
}

inline auto two_colorable(const Graph& g) -> bool {
  return odometer(g.order(), 2, [&](const auto& a) { return proper(g, a); });
}

inline auto floyd_warshall_diameter(const Graph& g) -> std::size_t {
  const auto n = g.order();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] >= inf) return kInfiniteDistance;
      best = std::max(best, d[i][j]);
    }
  return best;
}

// Vertex sets of size 6 whose induced subgraph is a 6-cycle.
inline auto induced_c6_count(const BipartiteGraph& b) -> std::size_t {
  const auto& g = b.graph();
  const auto n = g.order();
  std::size_t count = 0;
  std::vector<Vertex> s;
  std::function<void(Vertex)> rec = [&](Vertex from) {
    if (s.size() == 6) {
      for (Vertex u : s) {
        std::size_t deg = 0;
        for (Vertex v : s) deg += g.adjacent(u, v);
        if (deg != 2) return;
      }
      ++count;  // bipartite and 2-regular on six vertices
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      s.push_back(v);
      rec(v + 1);
      s.pop_back();
    }
  };
  rec(0);
  return count;
}

inline auto list_colorable(const Graph& g, const ListAssignment& lists) -> bool {
  std::size_t width = 0;
  for (const auto& l : lists.lists) width = std::max(width, l.size());
  return odometer(g.order(), width, [&](const auto& a) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (a[v] >= lists[v].size()) return false;
    for (const auto& e : g.edges())
      if (lists[e.u][a[e.u]] == lists[e.v][a[e.v]]) return false;
    return true;
  });
}

inline auto preext(const Graph& g, Color k, const PartialColoring& p) -> bool {
  return odometer(g.order(), static_cast<std::size_t>(k), [&](const auto& a) {
    for (auto [v, c] : p.assigned)
      if (a[v] + 1 != static_cast<std::size_t>(c)) return false;
    return proper(g, a);
  });
}

inline auto fall_colorable(const Graph& g, Color k) -> bool {
  return odometer(g.order(), static_cast<std::size_t>(k), [&](const auto& a) {
    if (!proper(g, a)) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
      std::set<std::size_t> seen{a[v]};
      for (Vertex w : g.neighbors(v)) seen.insert(a[w]);
      if (seen.size() != static_cast<std::size_t>(k)) return false;
    }
    return true;
  });
}

inline auto h2colorable(const Hypergraph3& h) -> bool {
  return odometer(h.order(), 2, [&](const auto& a) {
    for (const auto& t : h.edges())
      if (a[t[0]] == a[t[1]] && a[t[1]] == a[t[2]]) return false;
    return true;
  });
}

enum class Surjectivity { none, vertex, edge };

inline auto hom_exists(const Graph& g, const Graph& h, Surjectivity s, const HomLists& lists = {}) -> bool {
  return odometer(g.order(), h.order(), [&](const auto& a) {
    if (!lists.empty())
      for (Vertex v = 0; v < g.order(); ++v)
        if (std::find(lists[v].begin(), lists[v].end(), a[v]) == lists[v].end()) return false;
    std::set<std::pair<std::size_t, std::size_t>> image_edges;
    for (const auto& e : g.edges()) {
      if (!h.adjacent(static_cast<Vertex>(a[e.u]), static_cast<Vertex>(a[e.v]))) return false;
      image_edges.insert(std::minmax(a[e.u], a[e.v]));
    }
    if (s == Surjectivity::vertex) return std::set<std::size_t>(a.begin(), a.end()).size() == h.order();
    if (s == Surjectivity::edge) return image_edges.size() == h.size();
    return true;
  });
}

// Every block must contain an edge and be complete between its two sides.
inline auto biclique_partitionable(const BipartiteGraph& b, std::size_t k, bool exact) -> bool {
  const auto& g = b.graph();
  return odometer(g.order(), k, [&](const auto& a) {
    for (std::size_t i = 0; i < k; ++i) {
      bool used = false, edge = false;
      for (Vertex u = 0; u < g.order(); ++u) {
        if (a[u] != i) continue;
        used = true;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (a[v] != i || b.part(u) != Part::X || b.part(v) != Part::Y) continue;
          if (!g.adjacent(u, v)) return false;
          edge = true;
        }
      }
      if (used && !edge) return false;
      if (exact && !used) return false;
    }
    return true;
  });
}

// Smallest bitmask S with S hitting every member of a and its complement hitting every member of b.
inline auto smallest_hitting_mask(const SetFamily& a, const SetFamily& b, int k) -> std::optional<Subset> {
  const Subset all = full_subset(k);
  for (Subset s = 0; s <= all; ++s) {
    bool ok = std::all_of(a.members.begin(), a.members.end(), [&](Subset m) { return (m & s) != 0; }) &&
              std::all_of(b.members.begin(), b.members.end(), [&](Subset m) { return (m & ~s & all) != 0; });
    if (ok) return s;
  }
  return std::nullopt;
}

}  // namespace oracle
