#pragma once

#include <string>
#include <variant>

#include "chromatic/certificates.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/solvers.hpp"

namespace chromatic {

struct Verdict {
  bool ok = true;
  std::string violation;

  explicit operator bool() const { return ok; }
  static auto pass() -> Verdict { return {}; }
  static auto fail(std::string why) -> Verdict { return {false, std::move(why)}; }
};

auto validate_proper(const Graph& g, const Coloring& f, Color k) -> Verdict;
auto validate_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& f) -> Verdict;
auto validate_extension(const Graph& g, Color k, const PartialColoring& p, const Coloring& f) -> Verdict;
auto is_b_vertex(const Graph& g, Color k, const Coloring& f, Vertex v) -> bool;
auto validate_fall(const Graph& g, Color k, const Coloring& f) -> Verdict;
auto validate_hom(const Graph& g, const Graph& h, const VertexMapping& f, HomMode mode, const HomLists& lists = {})
    -> Verdict;
// r maps into host vertices of c and fixes each of them.
auto validate_retraction(const BipartiteGraph& b, const C6Embedding& c, const VertexMapping& r) -> Verdict;
auto validate_biclique_partition(const BipartiteGraph& b, std::size_t k, const BicliquePartition& p) -> Verdict;
auto validate_h2col(const Hypergraph3& h, const Coloring& f) -> Verdict;

struct ListColoringInstance {
  Graph g;
  ListAssignment lists;
};
struct PreextInstance {
  Graph g;
  Color k;
  PartialColoring p;
};
struct FallInstance {
  Graph g;
  Color k;
};
struct HomInstance {
  Graph g;
  Graph h;
  HomLists lists;
  HomMode mode;
};
struct RetractionInstance {
  BipartiteGraph b;
  C6Embedding c;
};
struct BicliqueInstance {
  BipartiteGraph b;
  std::size_t k;
};
struct H2colInstance {
  Hypergraph3 h;
};

using Instance = std::variant<ListColoringInstance, PreextInstance, FallInstance, HomInstance, RetractionInstance,
                              BicliqueInstance, H2colInstance>;
using Certificate = std::variant<Coloring, VertexMapping, BicliquePartition>;

// Throws InputError when the certificate kind does not fit the instance kind.
auto validate(const Instance& instance, const Certificate& certificate) -> Verdict;

}  // namespace chromatic
