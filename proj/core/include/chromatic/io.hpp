#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "chromatic/certificates.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/hitset.hpp"

namespace chromatic::io {

enum class FileKind { graph, hypergraph, family };

// Kind named by the `p` header line of a file.
auto detect_kind(const std::filesystem::path& path) -> FileKind;

auto read_graph(std::istream& in) -> Graph;
// Uses `x` lines when present, otherwise the BFS bipartition.
auto read_bipartite(std::istream& in) -> BipartiteGraph;
auto read_hypergraph(std::istream& in) -> Hypergraph3;
auto read_lists(std::istream& in, std::size_t n) -> ListAssignment;
auto read_precoloring(std::istream& in, std::size_t n) -> PartialColoring;
auto read_coloring(std::istream& in, std::size_t n) -> Coloring;
auto read_mapping(std::istream& in, std::size_t n) -> VertexMapping;
auto read_partition(std::istream& in, std::size_t n) -> BicliquePartition;
auto read_c6(std::istream& in, std::size_t n) -> C6Embedding;
auto read_families(std::istream& in) -> std::pair<SetFamily, SetFamily>;

void write_graph(std::ostream& out, const Graph& g);
void write_bipartite(std::ostream& out, const BipartiteGraph& b);
void write_hypergraph(std::ostream& out, const Hypergraph3& h);
void write_lists(std::ostream& out, const ListAssignment& lists);
void write_precoloring(std::ostream& out, const PartialColoring& p);
void write_coloring(std::ostream& out, const Coloring& f);
void write_mapping(std::ostream& out, const VertexMapping& f);
void write_partition(std::ostream& out, const BicliquePartition& p);
void write_c6(std::ostream& out, const C6Embedding& c);
void write_families(std::ostream& out, const SetFamily& a, const SetFamily& b);
void write_names(std::ostream& out, const std::vector<std::string>& names);

// Opens a file for reading; throws InputError when it cannot be opened.
auto open(const std::filesystem::path& path) -> std::ifstream;

}  // namespace chromatic::io
