#include <algorithm>
#include <stdexcept>

#include "chromatic/errors.hpp"
#include "chromatic/reductions.hpp"

namespace chromatic {

auto lift_bipartite(const BipartiteGraph& g) -> BipartiteLift {
  const auto& base = g.graph();
  if (!is_connected(base)) throw PreconditionError("input graph is disconnected");
  for (Vertex v = 0; v < base.order(); ++v)
    if (base.degree(v) == 0) throw PreconditionError("vertex " + std::to_string(v + 1) + " is isolated");
  auto n = static_cast<Vertex>(base.order());
  auto edges = base.edges();
  auto parts = g.parts();
  Vertex x = n, y = n + 1;
  parts.push_back(Part::X);
  parts.push_back(Part::Y);
  for (Vertex v = 0; v < n; ++v) edges.push_back(g.part(v) == Part::Y ? Edge{x, v} : Edge{v, y});
  BipartiteLift lift{BipartiteGraph(Graph(n + 2, edges), std::move(parts)), x, y};
  if (diameter(lift.graph.graph()) > 3) throw std::logic_error("lifted graph has diameter above 3");
  return lift;
}

auto lift_preext(const BipartiteGraph& g, const PartialColoring& p, Color k) -> PreextLift {
  if (k < 1) throw PreconditionError("k must be positive");
  for (auto [v, c] : p.assigned) {
    if (v >= g.order() || c < 1 || c > k) throw PreconditionError("precoloring entry for vertex " + std::to_string(v + 1) + " is out of range");
    for (Vertex w : g.graph().neighbors(v))
      if (auto it = p.assigned.find(w); it != p.assigned.end() && it->second == c)
        throw PreconditionError("precoloring is improper at vertex " + std::to_string(v + 1));
  }
  PreextLift out{lift_bipartite(g), p, k + 1};
  out.precoloring.assigned[out.lift.x] = k + 1;
  out.precoloring.assigned[out.lift.y] = k + 1;
  return out;
}

auto fall_lift(const BipartiteGraph& g, Color k) -> BipartiteLift {
  if (k < 3) throw PreconditionError("fall lift needs k >= 3");
  return lift_bipartite(g);
}

auto extend_lift_coloring(const BipartiteLift& lift, const Coloring& f, Color k) -> Coloring {
  Coloring out = f;
  out.colors.resize(lift.graph.order(), k + 1);
  out.colors[lift.x] = out.colors[lift.y] = k + 1;
  return out;
}

auto restrict_lift_coloring(const BipartiteLift& lift, const Coloring& f, Color k) -> Coloring {
  Color cx = f[lift.x];
  Coloring out{std::vector<Color>(f.colors.begin(), f.colors.begin() + lift.x)};
  for (auto& c : out.colors) {
    if (c == cx) c = k + 1;
    else if (c == k + 1) c = cx;
  }
  return out;
}

}  // namespace chromatic
