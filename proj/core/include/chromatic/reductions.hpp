#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromatic/certificates.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/validate.hpp"

namespace chromatic {

// x joins X and is complete to Y; y joins Y and is complete to X.
struct BipartiteLift {
  BipartiteGraph graph;
  Vertex x = 0;
  Vertex y = 0;
};

struct PreextLift {
  BipartiteLift lift;
  PartialColoring precoloring;
  Color k = 0;
};

auto lift_bipartite(const BipartiteGraph& g) -> BipartiteLift;
auto lift_preext(const BipartiteGraph& g, const PartialColoring& p, Color k) -> PreextLift;
auto fall_lift(const BipartiteGraph& g, Color k) -> BipartiteLift;
// Colors x and y with k+1.
auto extend_lift_coloring(const BipartiteLift& lift, const Coloring& f, Color k) -> Coloring;
// Restriction to the original vertices; for fall colorings the color of x is first swapped with k+1.
auto restrict_lift_coloring(const BipartiteLift& lift, const Coloring& f, Color k) -> Coloring;

// Cycle positions of the named cycle vertices: pV1=h1, pE2=h2, pV3=h3, pE1=h4, pV2=h5, pE3=h6.
auto pv_position(int i) -> int;
auto pe_position(int i) -> int;

struct RetractConstruction {
  Hypergraph3 source;
  BipartiteGraph graph;
  C6Embedding cycle;
  std::vector<std::string> names;
};

// Vertex layout: h1..h6, v1..vn, e1..em, then twelve gadget vertices per hyperedge.
auto build_c6_retract(const Hypergraph3& h) -> RetractConstruction;
// Y_C dominates X and every Y vertex is within distance two of each of pE1, pE2, pE3.
auto retract_guarantees(const BipartiteGraph& b, const C6Embedding& c) -> Verdict;
auto gadget_vertex(const RetractConstruction& rc, std::size_t j, const std::string& cell) -> Vertex;

struct ForcedCell {
  std::string cell;  // e.g. "vpp1"
  int position;      // cycle position of the forced image
};
// Gadget cells whose images are forced once the side's original vertex maps to pV<color>.
auto gadget_forced_cells(int side, int color) -> std::vector<ForcedCell>;
auto complete_gadget_mapping(const RetractConstruction& rc, const Coloring& two_coloring) -> VertexMapping;
auto retraction_to_two_coloring(const RetractConstruction& rc, const VertexMapping& r) -> Coloring;

struct PreextInstance3 {
  Graph graph;
  PartialColoring precoloring;
  Color k = 3;
};

auto retract_to_preext3(const BipartiteGraph& b, const C6Embedding& c) -> PreextInstance3;
auto preext_guarantees(const BipartiteGraph& b, const C6Embedding& c, const PreextInstance3& inst) -> Verdict;
auto extension_to_retraction(const BipartiteGraph& b, const C6Embedding& c, const Coloring& f) -> VertexMapping;
auto retraction_to_extension(const C6Embedding& c, const VertexMapping& r) -> Coloring;

// Embedding rotated so that position 0 holds c.at(shift).
auto rotate_embedding(const C6Embedding& c, int shift) -> C6Embedding;

struct CompactionConstruction {
  BipartiteGraph graph;
  C6Embedding cycle;
  std::vector<std::string> names;
  std::size_t base_order = 0;
  std::size_t attached = 0;  // vertices that received diagonal gadgets
};

// X is the part containing c.at(0). Gadgets go to every u in X outside the cycle,
// and also to c.at(0), c.at(2), c.at(4) when attach_to_cycle is set.
auto build_compaction(const BipartiteGraph& b, const C6Embedding& c, bool attach_to_cycle = false)
    -> CompactionConstruction;
auto compaction_hypotheses(const BipartiteGraph& b, const C6Embedding& c) -> Verdict;
auto compaction_guarantees(const BipartiteGraph& gprime, const C6Embedding& c) -> Verdict;
// Compaction onto cycle_graph(6) turned into a retraction of gprime onto c (host images).
auto normalize_compaction(const BipartiteGraph& gprime, const C6Embedding& c, const VertexMapping& f)
    -> VertexMapping;
// A retraction of the base graph extended over the gadgets, as a compaction onto cycle_graph(6).
auto extend_retraction_to_compaction(const CompactionConstruction& cc, const VertexMapping& r) -> VertexMapping;

// Exactly three blocks <-> surjective homomorphism of the bipartite complement onto cycle_graph(6).
auto biclique_to_surjective(const BipartiteGraph& b, const BicliquePartition& p) -> VertexMapping;
auto surjective_to_biclique(const BipartiteGraph& b, const VertexMapping& f) -> BicliquePartition;

struct FmpsConstruction {
  BipartiteGraph graph;
  C6Embedding cycle;  // (x1, y2, x3, y1, x2, y3)
  std::vector<std::string> names;
};

auto fmps_flawed_instance(const BipartiteGraph& g, const ListAssignment& lists) -> FmpsConstruction;

struct FallQuery {
  C6Embedding cycle;
  PartialColoring precoloring;
};

struct FallQueries {
  std::vector<FallQuery> queries;
  bool answer = false;
  std::optional<Coloring> witness;
};

auto fall3_queries(const BipartiteGraph& g) -> std::vector<FallQuery>;
auto fall3_turing_queries(const BipartiteGraph& g) -> FallQueries;

struct FallConstruction {
  Hypergraph3 source;
  BipartiteGraph graph;
  std::vector<std::string> names;
};

// Layout: v1..vn, v'1..v'n, e1..em, v, v'.
auto build_fall3_diam4(const Hypergraph3& h) -> FallConstruction;
auto two_coloring_to_fall(const FallConstruction& fc, const Coloring& two_coloring) -> Coloring;
auto fall_to_two_coloring(const FallConstruction& fc, const Coloring& f) -> Coloring;

struct ListConstruction {
  BipartiteGraph graph;
  ListAssignment lists;
  Color k = 0;
};

// Parts a1..am, b1..bm; colors are hypergraph vertices 1..n.
auto appendix_listcol3(const Hypergraph3& h) -> ListConstruction;
auto two_coloring_to_list_coloring(const Hypergraph3& h, const Coloring& two_coloring) -> Coloring;
auto list_coloring_to_two_coloring(const Hypergraph3& h, const Coloring& f) -> Coloring;

}  // namespace chromatic
