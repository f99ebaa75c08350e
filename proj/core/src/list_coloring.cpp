#include <algorithm>
#include <bit>

#include "chromatic/errors.hpp"
#include "chromatic/solvers.hpp"
#include "chromatic/two_sat.hpp"

namespace chromatic {

namespace {

using Mask = std::uint64_t;

void check_lists(const Graph& g, const ListAssignment& lists, Color k) {
  if (lists.size() != g.order()) throw InputError("list assignment does not cover the graph");
  for (Vertex v = 0; v < g.order(); ++v)
    for (Color c : lists[v])
      if (c < 1 || (k > 0 && c > k))
        throw InputError("color " + std::to_string(c) + " of vertex " + std::to_string(v + 1) + " outside the palette");
}

// MRV backtracking with forward checking over compacted color indices.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const ListAssignment& lists) : g_(g) {
    for (const auto& list : lists.lists) palette_.insert(palette_.end(), list.begin(), list.end());
    std::sort(palette_.begin(), palette_.end());
    palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
    if (palette_.size() > 64) throw InputError("more than 64 distinct colors in the lists");
    for (const auto& list : lists.lists) {
      Mask d = 0;
      for (Color c : list) d |= Mask{1} << index_of(c);
      dom_.push_back(d);
    }
    color_.assign(g.order(), -1);
  }

  auto run() -> std::optional<Coloring> {
    if (std::find(dom_.begin(), dom_.end(), Mask{0}) != dom_.end() || !search()) return std::nullopt;
    Coloring out;
    for (int c : color_) out.colors.push_back(palette_[static_cast<std::size_t>(c)]);
    return out;
  }

 private:
  auto index_of(Color c) const -> unsigned {
    return static_cast<unsigned>(std::lower_bound(palette_.begin(), palette_.end(), c) - palette_.begin());
  }

  auto search() -> bool {
    Vertex best = static_cast<Vertex>(g_.order());
    int best_size = 65;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      int size = std::popcount(dom_[v]);
      if (size < best_size) {
        best = v;
        best_size = size;
      }
    }
    if (best == g_.order()) return true;
    for (Mask values = dom_[best]; values; values &= values - 1) {
      int c = std::countr_zero(values);
      Mask b = Mask{1} << c;
      std::size_t mark = trail_.size();
      bool ok = true;
      color_[best] = c;
      for (Vertex w : g_.neighbors(best)) {
        if (color_[w] >= 0 || !(dom_[w] & b)) continue;
        trail_.push_back({w, dom_[w]});
        dom_[w] &= ~b;
        if (dom_[w] == 0) {
          ok = false;
          break;
        }
      }
      if (ok && search()) return true;
      color_[best] = -1;
      while (trail_.size() > mark) {
        dom_[trail_.back().first] = trail_.back().second;
        trail_.pop_back();
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<Color> palette_;
  std::vector<Mask> dom_;
  std::vector<int> color_;
  std::vector<std::pair<Vertex, Mask>> trail_;
};

}  // namespace

auto solve_list_coloring_backtracking(const Graph& g, const ListAssignment& lists) -> std::optional<Coloring> {
  check_lists(g, lists, 0);
  return ColoringSearch(g, lists).run();
}

auto solve_two_list_coloring(const Graph& g, const ListAssignment& lists) -> std::optional<Coloring> {
  check_lists(g, lists, 0);
  std::vector<std::vector<Color>> options(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    options[v] = lists[v];
    std::sort(options[v].begin(), options[v].end());
    options[v].erase(std::unique(options[v].begin(), options[v].end()), options[v].end());
    if (options[v].empty()) return std::nullopt;
    if (options[v].size() > 2) throw InputError("list of vertex " + std::to_string(v + 1) + " has more than two colors");
  }
  // x_v true selects options[v][0], false selects options[v][1].
  TwoSat sat(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (options[v].size() == 1) sat.add_clause(v, true, v, true);
  for (const auto& e : g.edges())
    for (std::size_t i = 0; i < options[e.u].size(); ++i)
      for (std::size_t j = 0; j < options[e.v].size(); ++j)
        if (options[e.u][i] == options[e.v][j]) sat.add_clause(e.u, i != 0, e.v, j != 0);
  auto model = sat.solve();
  if (!model) return std::nullopt;
  Coloring out;
  for (Vertex v = 0; v < g.order(); ++v) out.colors.push_back(options[v][(*model)[v] ? 0 : 1]);
  return out;
}

auto solve_list_coloring(const Graph& g, const ListAssignment& lists, Color k) -> std::optional<Coloring> {
  check_lists(g, lists, k);
  bool small = std::all_of(lists.lists.begin(), lists.lists.end(), [](const auto& l) {
    auto copy = l;
    std::sort(copy.begin(), copy.end());
    return std::unique(copy.begin(), copy.end()) - copy.begin() <= 2;
  });
  return small ? solve_two_list_coloring(g, lists) : ColoringSearch(g, lists).run();
}

auto solve_preext(const Graph& g, Color k, const PartialColoring& p) -> std::optional<Coloring> {
  auto lists = ListAssignment::full(g.order(), k);
  for (auto [v, c] : p.assigned) {
    if (v >= g.order()) throw InputError("precolored vertex " + std::to_string(v + 1) + " out of range");
    if (c < 1 || c > k) throw InputError("precolor " + std::to_string(c) + " outside [1," + std::to_string(k) + "]");
    lists.lists[v] = {c};
  }
  for (auto [v, c] : p.assigned)
    for (Vertex w : g.neighbors(v))
      if (auto it = p.assigned.find(w); it != p.assigned.end() && it->second == c)
        throw InputError("precoloring is improper on edge (" + std::to_string(v + 1) + "," + std::to_string(w + 1) + ")");
  return solve_list_coloring(g, lists, k);
}

auto ListAssignment::full(std::size_t n, Color k) -> ListAssignment {
  std::vector<Color> all;
  for (Color c = 1; c <= k; ++c) all.push_back(c);
  return ListAssignment{std::vector<std::vector<Color>>(n, all)};
}

}  // namespace chromatic
