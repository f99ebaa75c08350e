#include "chromatic/solvers.hpp"

namespace chromatic {

namespace {

class TwoColorSearch {
 public:
  explicit TwoColorSearch(const Hypergraph3& h) : h_(h), color_(h.order(), 0), incident_(h.order()) {
    for (std::size_t j = 0; j < h.edges().size(); ++j)
      for (Vertex v : h.edges()[j]) incident_[v].push_back(j);
  }

  auto run() -> std::optional<Coloring> {
    if (!search(0)) return std::nullopt;
    return Coloring{color_};
  }

 private:
  auto set(Vertex v, Color c) -> bool {
    std::vector<Vertex> pending{v};
    color_[v] = c;
    trail_.push_back(v);
    while (!pending.empty()) {
      Vertex u = pending.back();
      pending.pop_back();
      for (std::size_t j : incident_[u]) {
        const auto& e = h_.edges()[j];
        int same = 0;
        Vertex free = 0;
        bool has_free = false;
        for (Vertex w : e) {
          if (color_[w] == color_[u]) ++same;
          else if (color_[w] == 0) free = w, has_free = true;
        }
        if (same == 3) return false;
        if (same == 2 && has_free) {
          color_[free] = 3 - color_[u];
          trail_.push_back(free);
          pending.push_back(free);
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      color_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  auto search(Vertex v) -> bool {
    while (v < h_.order() && color_[v] != 0) ++v;
    if (v == h_.order()) return true;
    for (Color c : {1, 2}) {
      std::size_t mark = trail_.size();
      if (set(v, c) && search(v + 1)) return true;
      undo(mark);
    }
    return false;
  }

  const Hypergraph3& h_;
  std::vector<Color> color_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<Vertex> trail_;
};

}  // namespace

auto solve_h2col(const Hypergraph3& h) -> std::optional<Coloring> { return TwoColorSearch(h).run(); }

}  // namespace chromatic
