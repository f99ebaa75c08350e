#include "chromatic/verify/generators.hpp"

#include <algorithm>
#include <sstream>

#include "chromatic/errors.hpp"

namespace chromatic::verify {

namespace {

auto all_triples(std::size_t n) -> std::vector<Triple> {
  std::vector<Triple> out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) out.push_back({a, b, c});
  return out;
}

void subsets(const std::vector<Triple>& pool, std::size_t m, std::size_t from, std::vector<Triple>& cur,
             std::size_t n, std::vector<Hypergraph3>& out) {
  if (cur.size() == m) {
    out.emplace_back(n, cur);
    return;
  }
  for (std::size_t i = from; i + (m - cur.size()) <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets(pool, m, i + 1, cur, n, out);
    cur.pop_back();
  }
}

}  // namespace

auto gen_h3(std::size_t n, std::size_t m, std::uint64_t seed) -> Hypergraph3 {
  if (n < 3) throw InputError("gen_h3 needs n >= 3");
  auto pool = all_triples(n);
  if (m > pool.size()) throw InputError("gen_h3: more hyperedges than triples");
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return Hypergraph3(n, pool);
}

auto random_bipartite(std::size_t n, double p, SplitMix64& rng) -> BipartiteGraph {
  if (n < 2) throw InputError("random bipartite graph needs n >= 2");
  std::vector<Part> parts(n);
  do {
    for (auto& part : parts) part = rng.chance(0.5) ? Part::X : Part::Y;
  } while (std::count(parts.begin(), parts.end(), Part::X) == 0 ||
           std::count(parts.begin(), parts.end(), Part::Y) == 0);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (parts[u] != parts[v] && rng.chance(p)) edges.push_back({u, v});
  return BipartiteGraph(Graph(n, edges), std::move(parts));
}

auto gen_bipartite(std::size_t n, std::size_t d, std::uint64_t seed) -> BipartiteGraph {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    double p = 0.1 + 0.8 * static_cast<double>(attempt % 17) / 16.0;
    auto b = random_bipartite(n, p, rng);
    if (diameter(b.graph()) == d) return b;
  }
  throw InputError("gen_bipartite: no graph with n=" + std::to_string(n) + " and diameter " + std::to_string(d) +
                   " within the retry budget");
}

auto gen_fall_bipartite(std::size_t n, std::size_t d, std::uint64_t seed) -> BipartiteGraph {
  if (n < 6) throw InputError("gen_fall_bipartite needs n >= 6");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<Part> parts(n);
    Coloring f{std::vector<Color>(n)};
    for (Vertex v = 0; v < n; ++v) {
      parts[v] = v < 6 ? (v % 2 ? Part::Y : Part::X) : (rng.chance(0.5) ? Part::X : Part::Y);
      f.colors[v] = v < 6 ? static_cast<Color>(v / 2 + 1) : static_cast<Color>(rng.uniform(1, 3));
    }
    double p = 0.3 + 0.6 * static_cast<double>(attempt % 13) / 12.0;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (parts[u] != parts[v] && f[u] != f[v] && rng.chance(p)) edges.push_back({u, v});
    Graph g(n, edges);
    bool fall = true;
    for (Vertex v = 0; v < n && fall; ++v) {
      unsigned seen = 1u << f[v];
      for (Vertex w : g.neighbors(v)) seen |= 1u << f[w];
      fall = seen == 0b1110;
    }
    if (fall && diameter(g) == d) return BipartiteGraph(std::move(g), std::move(parts));
  }
  throw InputError("gen_fall_bipartite: no graph with n=" + std::to_string(n) + " and diameter " + std::to_string(d) +
                   " within the retry budget");
}

auto gen_connected_bipartite(std::size_t n, std::uint64_t seed) -> BipartiteGraph {
  SplitMix64 rng(seed);
  for (;;) {
    auto b = random_bipartite(n, 0.25 + 0.45 * rng.unit(), rng);
    if (is_connected(b.graph())) return b;
  }
}

auto exhaustive_h3(std::size_t max_n, std::size_t max_m) -> std::vector<Hypergraph3> {
  std::vector<Hypergraph3> out;
  for (std::size_t n = 3; n <= max_n; ++n) {
    auto pool = all_triples(n);
    for (std::size_t m = 1; m <= max_m && m <= pool.size(); ++m) {
      std::vector<Triple> cur;
      subsets(pool, m, 0, cur, n, out);
    }
  }
  return out;
}

auto drop_isolated(const Hypergraph3& h) -> Hypergraph3 {
  std::vector<Vertex> renum(h.order(), 0);
  std::vector<bool> used(h.order(), false);
  for (const auto& t : h.edges())
    for (Vertex v : t) used[v] = true;
  Vertex next = 0;
  for (Vertex v = 0; v < h.order(); ++v)
    if (used[v]) renum[v] = next++;
  std::vector<Triple> edges;
  for (const auto& t : h.edges()) edges.push_back({renum[t[0]], renum[t[1]], renum[t[2]]});
  return Hypergraph3(next, edges);
}

auto hypergraph_corpus(std::uint64_t seed) -> Corpus<Hypergraph3> {
  Corpus<Hypergraph3> out;
  out.items = exhaustive_h3(5, 3);
  auto exhaustive = out.items.size();
  SplitMix64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    auto n = rng.uniform(3, 7);
    auto cap = n * (n - 1) * (n - 2) / 6;
    auto m = rng.uniform(1, std::min<std::uint64_t>(5, cap));
    out.items.push_back(gen_h3(n, m, rng.next()));
  }
  out.items.push_back(fano_plane());
  out.items.push_back(Hypergraph3(5, all_triples(5)));
  for (int i = 0; i < 30; ++i) {
    auto n = i < 20 ? 6 : 7;
    auto m = i < 20 ? rng.uniform(12, 18) : rng.uniform(16, 20);
    out.items.push_back(gen_h3(n, m, rng.next()));
  }
  out.descriptor = "exhaustive n<=5 m<=3 (" + std::to_string(exhaustive) + "), random n<=7 m<=5 (100, seed " +
                   std::to_string(seed) + "), dense (12)";
  return out;
}

auto describe(const Hypergraph3& h) -> std::string {
  std::ostringstream os;
  os << "n=" << h.order();
  for (const auto& t : h.edges()) os << " {" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << "}";
  return os.str();
}

auto describe(const BipartiteGraph& b) -> std::string {
  std::ostringstream os;
  os << "n=" << b.order() << " X={";
  bool first = true;
  for (Vertex v : b.side(Part::X)) {
    os << (first ? "" : ",") << v + 1;
    first = false;
  }
  os << "}";
  for (const auto& e : b.graph().edges()) os << " " << e.u + 1 << "-" << e.v + 1;
  return os.str();
}

auto describe(const Coloring& f) -> std::string {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f.colors[i];
  os << ")";
  return os.str();
}

}  // namespace chromatic::verify
