#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromatic/certificates.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/verify/rng.hpp"

namespace chromatic::verify {

// m distinct random triples over n vertices.
auto gen_h3(std::size_t n, std::size_t m, std::uint64_t seed) -> Hypergraph3;
// Connected bipartite graph on n vertices with diameter exactly d; throws InputError when
// the retry budget runs out.
auto gen_bipartite(std::size_t n, std::size_t d, std::uint64_t seed) -> BipartiteGraph;
// Like gen_bipartite, but built around a hidden 3-fall coloring, so the result is 3-fall-colorable.
auto gen_fall_bipartite(std::size_t n, std::size_t d, std::uint64_t seed) -> BipartiteGraph;
auto gen_connected_bipartite(std::size_t n, std::uint64_t seed) -> BipartiteGraph;
auto random_bipartite(std::size_t n, double p, SplitMix64& rng) -> BipartiteGraph;

// Every m-subset of triples over [n], sorted edge lists, for n in [3, max_n] and m in [1, max_m].
auto exhaustive_h3(std::size_t max_n, std::size_t max_m) -> std::vector<Hypergraph3>;
// Vertices in no hyperedge removed, the rest renumbered in order.
auto drop_isolated(const Hypergraph3& h) -> Hypergraph3;

template <class T>
struct Corpus {
  std::string descriptor;
  std::vector<T> items;
};

// Exhaustive n<=5 m<=3, 100 random n<=7 m<=5, and a dense block with the Fano plane,
// the complete 3-uniform hypergraph on 5 vertices and 30 random dense instances on 6 or 7 vertices.
auto hypergraph_corpus(std::uint64_t seed) -> Corpus<Hypergraph3>;

auto describe(const Hypergraph3& h) -> std::string;
auto describe(const BipartiteGraph& b) -> std::string;
auto describe(const Coloring& f) -> std::string;

}  // namespace chromatic::verify
