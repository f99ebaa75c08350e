#include "chromatic/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "chromatic/errors.hpp"

namespace chromatic::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

auto tokenize(std::istream& in) -> std::vector<Line> {
  std::vector<Line> out;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0] == "c" || line.tokens[0][0] == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

auto integer(const Line& line, std::size_t i) -> long long {
  if (i >= line.tokens.size()) fail(line, "missing field");
  const auto& tok = line.tokens[i];
  long long value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size()) fail(line, "not an integer: " + tok);
  return value;
}

auto vertex(const Line& line, std::size_t i, std::size_t n) -> Vertex {
  auto v = integer(line, i);
  if (v < 1 || static_cast<std::size_t>(v) > n) fail(line, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<Vertex>(v - 1);
}

void expect_fields(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) fail(line, "expected " + std::to_string(count - 1) + " fields after " + line.tokens[0]);
}

struct ParsedGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<Vertex> x_part;
};

auto parse_graph(std::istream& in) -> ParsedGraph {
  auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "p" || lines[0].tokens.size() != 4 || lines[0].tokens[1] != "edge")
    throw InputError("missing `p edge <n> <m>` header");
  ParsedGraph out;
  auto n = integer(lines[0], 2), m = integer(lines[0], 3);
  if (n < 0 || m < 0) fail(lines[0], "negative size");
  out.n = static_cast<std::size_t>(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] == "e") {
      expect_fields(line, 3);
      out.edges.push_back({vertex(line, 1, out.n), vertex(line, 2, out.n)});
    } else if (line.tokens[0] == "x") {
      for (std::size_t t = 1; t < line.tokens.size(); ++t) out.x_part.push_back(vertex(line, t, out.n));
    } else {
      fail(line, "unknown record " + line.tokens[0]);
    }
  }
  if (out.edges.size() != static_cast<std::size_t>(m))
    throw InputError("header declares " + std::to_string(m) + " edges, found " + std::to_string(out.edges.size()));
  return out;
}

}  // namespace

auto open(const std::filesystem::path& path) -> std::ifstream {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

auto detect_kind(const std::filesystem::path& path) -> FileKind {
  auto in = open(path);
  auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "p" || lines[0].tokens.size() < 2)
    throw InputError(path.string() + ": missing `p` header");
  const auto& kind = lines[0].tokens[1];
  if (kind == "edge") return FileKind::graph;
  if (kind == "h3") return FileKind::hypergraph;
  if (kind == "chs") return FileKind::family;
  throw InputError(path.string() + ": unknown file kind " + kind);
}

auto read_graph(std::istream& in) -> Graph {
  auto parsed = parse_graph(in);
  return Graph(parsed.n, parsed.edges);
}

auto read_bipartite(std::istream& in) -> BipartiteGraph {
  auto parsed = parse_graph(in);
  Graph g(parsed.n, parsed.edges);
  if (parsed.x_part.empty()) {
    auto b = bipartition(g);
    if (!b) throw InputError("graph is not bipartite");
    return *b;
  }
  std::vector<Part> parts(parsed.n, Part::Y);
  for (Vertex v : parsed.x_part) parts[v] = Part::X;
  return BipartiteGraph(std::move(g), std::move(parts));
}

auto read_hypergraph(std::istream& in) -> Hypergraph3 {
  auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "p" || lines[0].tokens.size() != 4 || lines[0].tokens[1] != "h3")
    throw InputError("missing `p h3 <n> <m>` header");
  auto n = integer(lines[0], 2), m = integer(lines[0], 3);
  if (n < 0 || m < 0) fail(lines[0], "negative size");
  std::vector<Triple> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "h") fail(line, "unknown record " + line.tokens[0]);
    expect_fields(line, 4);
    auto un = static_cast<std::size_t>(n);
    edges.push_back({vertex(line, 1, un), vertex(line, 2, un), vertex(line, 3, un)});
  }
  if (edges.size() != static_cast<std::size_t>(m))
    throw InputError("header declares " + std::to_string(m) + " hyperedges, found " + std::to_string(edges.size()));
  return Hypergraph3(static_cast<std::size_t>(n), std::move(edges));
}

auto read_lists(std::istream& in, std::size_t n) -> ListAssignment {
  ListAssignment out{std::vector<std::vector<Color>>(n)};
  for (const auto& line : tokenize(in)) {
    if (line.tokens[0] != "l") fail(line, "unknown record " + line.tokens[0]);
    Vertex v = vertex(line, 1, n);
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      auto c = integer(line, t);
      if (c < 1) fail(line, "colors are positive");
      out.lists[v].push_back(static_cast<Color>(c));
    }
  }
  return out;
}

auto read_precoloring(std::istream& in, std::size_t n) -> PartialColoring {
  PartialColoring out;
  for (const auto& line : tokenize(in)) {
    if (line.tokens[0] != "pc") fail(line, "unknown record " + line.tokens[0]);
    expect_fields(line, 3);
    auto c = integer(line, 2);
    if (c < 1) fail(line, "colors are positive");
    if (!out.assigned.emplace(vertex(line, 1, n), static_cast<Color>(c)).second) fail(line, "vertex precolored twice");
  }
  return out;
}

auto read_coloring(std::istream& in, std::size_t n) -> Coloring {
  Coloring out{std::vector<Color>(n, 0)};
  std::vector<char> seen(n, 0);
  for (const auto& line : tokenize(in)) {
    if (line.tokens[0] != "m") fail(line, "unknown record " + line.tokens[0]);
    expect_fields(line, 3);
    Vertex v = vertex(line, 1, n);
    if (seen[v]++) fail(line, "vertex assigned twice");
    out.colors[v] = static_cast<Color>(integer(line, 2));
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw InputError("vertex " + std::to_string(v + 1) + " has no color");
  return out;
}

auto read_mapping(std::istream& in, std::size_t n) -> VertexMapping {
  VertexMapping out{std::vector<Vertex>(n, 0)};
  std::vector<char> seen(n, 0);
  for (const auto& line : tokenize(in)) {
    if (line.tokens[0] != "m") fail(line, "unknown record " + line.tokens[0]);
    expect_fields(line, 3);
    Vertex v = vertex(line, 1, n);
    if (seen[v]++) fail(line, "vertex assigned twice");
    auto image = integer(line, 2);
    if (image < 1) fail(line, "images are 1-based");
    out.image[v] = static_cast<Vertex>(image - 1);
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw InputError("vertex " + std::to_string(v + 1) + " has no image");
  return out;
}

auto read_partition(std::istream& in, std::size_t n) -> BicliquePartition {
  BicliquePartition out;
  for (const auto& line : tokenize(in)) {
    if (line.tokens[0] != "blk") fail(line, "unknown record " + line.tokens[0]);
    auto index = integer(line, 1);
    if (index != static_cast<long long>(out.blocks.size()) + 1) fail(line, "blocks must be numbered 1,2,... in order");
    std::vector<Vertex> block;
    for (std::size_t t = 2; t < line.tokens.size(); ++t) block.push_back(vertex(line, t, n));
    out.blocks.push_back(std::move(block));
  }
  return out;
}

auto read_c6(std::istream& in, std::size_t n) -> C6Embedding {
  auto lines = tokenize(in);
  for (const auto& line : lines) {
    if (line.tokens[0] != "c6") continue;
    expect_fields(line, 7);
    C6Embedding c;
    for (std::size_t i = 0; i < 6; ++i) c.cycle[i] = vertex(line, i + 1, n);
    return c;
  }
  throw InputError("no `c6` record");
}

auto read_families(std::istream& in) -> std::pair<SetFamily, SetFamily> {
  auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "p" || lines[0].tokens.size() != 5 || lines[0].tokens[1] != "chs")
    throw InputError("missing `p chs <k> <|A|> <|B|>` header");
  auto k = integer(lines[0], 2), na = integer(lines[0], 3), nb = integer(lines[0], 4);
  if (k < 0 || k > 63) fail(lines[0], "k must lie in [0,63]");
  std::vector<std::vector<Color>> a, b;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "A" && line.tokens[0] != "B") fail(line, "unknown record " + line.tokens[0]);
    std::vector<Color> set;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      auto c = integer(line, t);
      if (c < 1 || c > k) fail(line, "member element " + std::to_string(c) + " outside [k]");
      set.push_back(static_cast<Color>(c));
    }
    (line.tokens[0] == "A" ? a : b).push_back(std::move(set));
  }
  if (static_cast<long long>(a.size()) != na || static_cast<long long>(b.size()) != nb)
    throw InputError("family sizes differ from the header");
  auto ik = static_cast<int>(k);
  return {SetFamily::from_lists(ik, a), SetFamily::from_lists(ik, b)};
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_bipartite(std::ostream& out, const BipartiteGraph& b) {
  out << "p edge " << b.order() << ' ' << b.graph().size() << '\n';
  for (Vertex v : b.side(Part::X)) out << "x " << v + 1 << '\n';
  for (const auto& e : b.graph().edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_hypergraph(std::ostream& out, const Hypergraph3& h) {
  out << "p h3 " << h.order() << ' ' << h.edges().size() << '\n';
  for (const auto& e : h.edges()) out << "h " << e[0] + 1 << ' ' << e[1] + 1 << ' ' << e[2] + 1 << '\n';
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
  for (Vertex v = 0; v < lists.size(); ++v) {
    out << "l " << v + 1;
    for (Color c : lists[v]) out << ' ' << c;
    out << '\n';
  }
}

void write_precoloring(std::ostream& out, const PartialColoring& p) {
  for (auto [v, c] : p.assigned) out << "pc " << v + 1 << ' ' << c << '\n';
}

void write_coloring(std::ostream& out, const Coloring& f) {
  for (Vertex v = 0; v < f.size(); ++v) out << "m " << v + 1 << ' ' << f[v] << '\n';
}

void write_mapping(std::ostream& out, const VertexMapping& f) {
  for (Vertex v = 0; v < f.size(); ++v) out << "m " << v + 1 << ' ' << f[v] + 1 << '\n';
}

void write_partition(std::ostream& out, const BicliquePartition& p) {
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    out << "blk " << i + 1;
    for (Vertex v : p.blocks[i]) out << ' ' << v + 1;
    out << '\n';
  }
}

void write_c6(std::ostream& out, const C6Embedding& c) {
  out << "c6";
  for (Vertex v : c.cycle) out << ' ' << v + 1;
  out << '\n';
}

void write_families(std::ostream& out, const SetFamily& a, const SetFamily& b) {
  out << "p chs " << a.k << ' ' << a.members.size() << ' ' << b.members.size() << '\n';
  for (auto [tag, fam] : {std::pair{'A', &a}, std::pair{'B', &b}}) {
    for (Subset s : fam->members) {
      out << tag;
      for (Color c : subset_colors(s)) out << ' ' << c;
      out << '\n';
    }
  }
}

void write_names(std::ostream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) out << "n " << i + 1 << ' ' << names[i] << '\n';
}

}  // namespace chromatic::io
