#pragma once

#include <cstdint>
#include <optional>

#include "chromatic/certificates.hpp"
#include "chromatic/graph.hpp"

namespace chromatic {

enum class HomMode { plain, vertex_surjective, edge_surjective };

struct SearchStats {
  std::uint64_t nodes = 0;
};

// Exact list-homomorphism search g -> h (h has at most 64 vertices).
auto solve_list_hom(const Graph& g, const Graph& h, const HomLists& lists, HomMode mode,
                    SearchStats* stats = nullptr) -> std::optional<VertexMapping>;

// Singleton lists pinning c.at(i) to abstract cycle vertex i, full lists elsewhere.
auto retraction_lists(std::size_t order, const C6Embedding& c) -> HomLists;
// Retraction of b onto c; images are host vertices of c.
auto solve_retraction(const BipartiteGraph& b, const C6Embedding& c) -> std::optional<VertexMapping>;
// Edge-surjective and vertex-surjective homomorphisms onto cycle_graph(6), with
// rotation/reflection symmetry broken on the first edge.
auto solve_c6_compaction(const Graph& g, SearchStats* stats = nullptr) -> std::optional<VertexMapping>;
auto solve_surjective_c6(const Graph& g, SearchStats* stats = nullptr) -> std::optional<VertexMapping>;

// Proper coloring respecting lists; every color must lie in [1, k] when k > 0.
auto solve_list_coloring(const Graph& g, const ListAssignment& lists, Color k) -> std::optional<Coloring>;
auto solve_list_coloring_backtracking(const Graph& g, const ListAssignment& lists) -> std::optional<Coloring>;
// Pre: every list has at most two colors.
auto solve_two_list_coloring(const Graph& g, const ListAssignment& lists) -> std::optional<Coloring>;

auto solve_preext(const Graph& g, Color k, const PartialColoring& p) -> std::optional<Coloring>;
auto solve_fall_coloring(const Graph& g, Color k) -> std::optional<Coloring>;
// At most k blocks, or exactly k blocks when exact is set.
auto solve_biclique_partition(const BipartiteGraph& b, std::size_t k, bool exact = false)
    -> std::optional<BicliquePartition>;
auto solve_h2col(const Hypergraph3& h) -> std::optional<Coloring>;

}  // namespace chromatic
