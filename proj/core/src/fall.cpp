#include <bit>

#include "chromatic/errors.hpp"
#include "chromatic/solvers.hpp"

namespace chromatic {

namespace {

using Mask = std::uint64_t;

class FallSearch {
 public:
  FallSearch(const Graph& g, Color k)
      : g_(g), full_(k == 64 ? ~Mask{0} : (Mask{1} << k) - 1), k_(k), dom_(g.order(), full_), color_(g.order(), -1) {}

  auto run() -> std::optional<Coloring> {
    for (Vertex v = 0; v < g_.order(); ++v)
      if (g_.degree(v) + 1 < static_cast<std::size_t>(k_)) return std::nullopt;
    if (!search(0, 0)) return std::nullopt;
    Coloring out;
    for (int c : color_) out.colors.push_back(c + 1);
    return out;
  }

 private:
  auto sees_all(Vertex w) const -> bool {
    Mask reach = dom_[w];
    for (Vertex u : g_.neighbors(w)) reach |= dom_[u];
    return reach == full_;
  }

  auto search(Vertex v, int used) -> bool {
    if (v == g_.order()) return true;
    Mask allowed = dom_[v];
    if (used < k_) allowed &= (Mask{1} << (used + 1)) - 1;
    for (; allowed; allowed &= allowed - 1) {
      int c = std::countr_zero(allowed);
      Mask b = Mask{1} << c;
      std::size_t mark = trail_.size();
      trail_.push_back({v, dom_[v]});
      dom_[v] = b;
      color_[v] = c;
      bool ok = true;
      for (Vertex w : g_.neighbors(v)) {
        if (color_[w] >= 0 || !(dom_[w] & b)) continue;
        trail_.push_back({w, dom_[w]});
        dom_[w] &= ~b;
        if (dom_[w] == 0) ok = false;
      }
      if (ok) ok = local_reach_ok(v);
      if (ok && search(v + 1, std::max(used, c + 1))) return true;
      color_[v] = -1;
      while (trail_.size() > mark) {
        dom_[trail_.back().first] = trail_.back().second;
        trail_.pop_back();
      }
    }
    return false;
  }

  // Re-check vertices within distance two of v.
  auto local_reach_ok(Vertex v) const -> bool {
    if (!sees_all(v)) return false;
    for (Vertex u : g_.neighbors(v)) {
      if (!sees_all(u)) return false;
      for (Vertex w : g_.neighbors(u))
        if (!sees_all(w)) return false;
    }
    return true;
  }

  const Graph& g_;
  Mask full_;
  int k_;
  std::vector<Mask> dom_;
  std::vector<int> color_;
  std::vector<std::pair<Vertex, Mask>> trail_;
};

}  // namespace

auto solve_fall_coloring(const Graph& g, Color k) -> std::optional<Coloring> {
  if (k < 1 || k > 64) throw InputError("fall coloring needs 1 <= k <= 64");
  return FallSearch(g, k).run();
}

}  // namespace chromatic
