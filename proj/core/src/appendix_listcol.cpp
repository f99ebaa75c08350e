#include <algorithm>

#include "chromatic/errors.hpp"
#include "chromatic/reductions.hpp"

namespace chromatic {

auto appendix_listcol3(const Hypergraph3& h) -> ListConstruction {
  if (h.edges().empty()) throw PreconditionError("hypergraph has no hyperedge");
  const auto m = h.edges().size();
  ListConstruction out{complete_bipartite(m, m), {}, static_cast<Color>(h.order())};
  for (int side = 0; side < 2; ++side)
    for (const auto& t : h.edges())
      out.lists.lists.push_back({static_cast<Color>(t[0] + 1), static_cast<Color>(t[1] + 1), static_cast<Color>(t[2] + 1)});
  return out;
}

auto two_coloring_to_list_coloring(const Hypergraph3& h, const Coloring& two_coloring) -> Coloring {
  if (auto verdict = validate_h2col(h, two_coloring); !verdict) throw InputError(verdict.violation);
  Coloring f{std::vector<Color>(2 * h.edges().size(), 0)};
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    const auto& t = h.edges()[i];
    auto pick = [&](Color want) {
      return static_cast<Color>(*std::find_if(t.begin(), t.end(), [&](Vertex v) { return two_coloring[v] == want; }) + 1);
    };
    f.colors[i] = pick(1);
    f.colors[h.edges().size() + i] = pick(2);
  }
  return f;
}

auto list_coloring_to_two_coloring(const Hypergraph3& h, const Coloring& f) -> Coloring {
  const auto m = h.edges().size();
  if (f.size() != 2 * m) throw InputError("coloring has the wrong length");
  Coloring out{std::vector<Color>(h.order(), 2)};
  for (std::size_t i = 0; i < m; ++i) {
    Color c = f[static_cast<Vertex>(i)];
    if (c < 1 || static_cast<std::size_t>(c) > h.order()) throw InputError("color out of range at a" + std::to_string(i + 1));
    out.colors[static_cast<std::size_t>(c - 1)] = 1;
  }
  return out;
}

}  // namespace chromatic
