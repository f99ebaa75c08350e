#include <algorithm>
#include <stdexcept>

#include "chromatic/errors.hpp"
#include "chromatic/reductions.hpp"
#include "chromatic/solvers.hpp"

namespace chromatic {

auto fall3_queries(const BipartiteGraph& g) -> std::vector<FallQuery> {
  if (auto d = diameter(g.graph()); d > 3)
    throw InputError("diameter " + (d == kInfiniteDistance ? std::string("infinite") : std::to_string(d)) + " exceeds 3");
  std::vector<FallQuery> out;
  for (const auto& c : enumerate_induced_c6(g)) {
    FallQuery q{c, {}};
    for (int i = 0; i < 6; ++i) q.precoloring.assigned[c.at(i)] = i % 3 + 1;
    out.push_back(std::move(q));
  }
  return out;
}

auto fall3_turing_queries(const BipartiteGraph& g) -> FallQueries {
  FallQueries out{fall3_queries(g), false, std::nullopt};
  for (const auto& q : out.queries) {
    if (auto f = solve_preext(g.graph(), 3, q.precoloring)) {
      out.answer = true;
      out.witness = std::move(f);
      break;
    }
  }
  return out;
}

auto build_fall3_diam4(const Hypergraph3& h) -> FallConstruction {
  if (h.edges().empty()) throw PreconditionError("hypergraph has no hyperedge");
  std::vector<bool> covered(h.order(), false);
  for (const auto& t : h.edges())
    for (Vertex v : t) covered[v] = true;
  for (Vertex v = 0; v < h.order(); ++v)
    if (!covered[v]) throw PreconditionError("vertex " + std::to_string(v + 1) + " lies in no hyperedge");

  NamedBipartiteBuilder nb;
  const auto n = h.order();
  for (std::size_t i = 1; i <= n; ++i) nb.add("v" + std::to_string(i), Part::Y);
  for (std::size_t i = 1; i <= n; ++i) nb.add("v'" + std::to_string(i), Part::X);
  for (std::size_t j = 1; j <= h.edges().size(); ++j) nb.add("e" + std::to_string(j), Part::X);
  Vertex v = nb.add("v", Part::X);
  Vertex vp = nb.add("v'", Part::Y);
  for (Vertex i = 0; i < n; ++i) {
    nb.connect(v, i);
    nb.connect(vp, static_cast<Vertex>(n + i));
    nb.connect(i, static_cast<Vertex>(n + i));
  }
  for (std::size_t j = 0; j < h.edges().size(); ++j)
    for (Vertex w : h.edges()[j]) nb.connect(static_cast<Vertex>(2 * n + j), w);

  FallConstruction fc{h, nb.build(), nb.names()};
  if (auto d = diameter(fc.graph.graph()); d > 4) throw std::logic_error("fall construction has diameter above 4");
  return fc;
}

auto two_coloring_to_fall(const FallConstruction& fc, const Coloring& two_coloring) -> Coloring {
  if (auto verdict = validate_h2col(fc.source, two_coloring); !verdict) throw InputError(verdict.violation);
  const auto n = fc.source.order();
  Coloring f{std::vector<Color>(fc.graph.order(), 1)};
  for (Vertex i = 0; i < n; ++i) {
    f.colors[i] = two_coloring[i] + 1;
    f.colors[n + i] = 5 - f.colors[i];
  }
  return f;
}

auto fall_to_two_coloring(const FallConstruction& fc, const Coloring& f) -> Coloring {
  if (f.size() != fc.graph.order()) throw InputError("coloring has the wrong length");
  const auto n = fc.source.order();
  Color base = f[static_cast<Vertex>(fc.graph.order() - 2)];
  Color low = base == 1 ? 2 : 1;
  Coloring out;
  for (Vertex i = 0; i < n; ++i) {
    if (f[i] == base || f[i] < 1 || f[i] > 3) throw InputError("vertex v" + std::to_string(i + 1) + " has an unexpected color");
    out.colors.push_back(f[i] == low ? 1 : 2);
  }
  return out;
}

}  // namespace chromatic
