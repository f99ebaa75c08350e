#include <algorithm>
#include <bit>

#include "chromatic/errors.hpp"
#include "chromatic/solvers.hpp"

namespace chromatic {

namespace {

using Mask = std::uint64_t;

constexpr auto bit(unsigned i) -> Mask { return Mask{1} << i; }
constexpr auto singleton(Mask m) -> bool { return m != 0 && (m & (m - 1)) == 0; }

// Arc-consistent backtracking over bitmask domains. Surjective modes branch on
// covering an uncovered target first; full assignments are re-checked at the leaf.
class HomSearch {
 public:
  HomSearch(const Graph& g, const Graph& h, HomMode mode, std::vector<Mask> domains, SearchStats* stats)
      : g_(g), mode_(mode), dom_(std::move(domains)), stats_(stats), queued_(g.order(), 0) {
    targets_ = static_cast<unsigned>(h.order());
    for (Vertex t = 0; t < targets_; ++t) {
      Mask m = 0;
      for (Vertex s : h.neighbors(t)) m |= bit(s);
      target_nbrs_.push_back(m);
    }
    if (targets_ <= 16) {
      union_table_.assign(std::size_t{1} << targets_, 0);
      for (std::size_t m = 1; m < union_table_.size(); ++m) {
        auto low = static_cast<unsigned>(std::countr_zero(m));
        union_table_[m] = union_table_[m & (m - 1)] | target_nbrs_[low];
      }
    }
    for (const auto& e : h.edges()) target_edges_.push_back(e);
    if (mode_ == HomMode::vertex_surjective) required_ = targets_ == 64 ? ~Mask{0} : bit(targets_) - 1;
    if (mode_ == HomMode::edge_surjective)
      for (Vertex t = 0; t < targets_; ++t)
        if (h.degree(t) > 0) required_ |= bit(t);
    support_.assign(targets_, 0);
    covered_.assign(targets_, 0);
    for (Mask d : dom_) {
      for (Mask m = d; m; m &= m - 1) ++support_[static_cast<std::size_t>(std::countr_zero(m))];
      if (singleton(d)) ++covered_[static_cast<std::size_t>(std::countr_zero(d))];
    }
  }

  auto run() -> std::optional<VertexMapping> {
    for (Vertex t = 0; t < targets_; ++t)
      if ((required_ & bit(t)) && support_[t] == 0) return std::nullopt;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (dom_[v] == 0) return std::nullopt;
      enqueue(v);
    }
    if (!propagate() || !search()) return std::nullopt;
    VertexMapping f;
    for (Mask d : dom_) f.image.push_back(static_cast<Vertex>(std::countr_zero(d)));
    return f;
  }

 private:
  auto image_union(Mask m) const -> Mask {
    if (!union_table_.empty()) return union_table_[m];
    Mask out = 0;
    for (; m; m &= m - 1) out |= target_nbrs_[static_cast<std::size_t>(std::countr_zero(m))];
    return out;
  }

  void enqueue(Vertex v) {
    if (queued_[v]) return;
    queued_[v] = 1;
    queue_.push_back(v);
  }

  void clear_queue() {
    for (Vertex v : queue_) queued_[v] = 0;
    queue_.clear();
  }

  auto restrict(Vertex v, Mask allowed) -> bool {
    Mask old = dom_[v];
    Mask now = old & allowed;
    if (now == old) return true;
    trail_.push_back({v, old});
    dom_[v] = now;
    bool ok = now != 0;
    for (Mask gone = old & ~now; gone; gone &= gone - 1) {
      auto t = static_cast<std::size_t>(std::countr_zero(gone));
      if (--support_[t] == 0 && (required_ & bit(static_cast<unsigned>(t)))) ok = false;
    }
    if (singleton(now)) ++covered_[static_cast<std::size_t>(std::countr_zero(now))];
    if (ok) enqueue(v);
    return ok;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [v, old] = trail_.back();
      trail_.pop_back();
      Mask now = dom_[v];
      if (singleton(now)) --covered_[static_cast<std::size_t>(std::countr_zero(now))];
      for (Mask back = old & ~now; back; back &= back - 1) ++support_[static_cast<std::size_t>(std::countr_zero(back))];
      dom_[v] = old;
    }
  }

  auto propagate() -> bool {
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex v = queue_[head];
      queued_[v] = 0;
      Mask allowed = image_union(dom_[v]);
      for (Vertex w : g_.neighbors(v)) {
        if ((dom_[w] & ~allowed) == 0) continue;
        if (!restrict(w, allowed)) {
          clear_queue();
          return false;
        }
      }
    }
    queue_.clear();
    return true;
  }

  auto assign(Vertex v, unsigned t) -> bool { return restrict(v, bit(t)) && propagate(); }

  auto refute(Vertex v, unsigned t) -> bool {
    if (!restrict(v, ~bit(t))) {
      clear_queue();
      return false;
    }
    return propagate();
  }

  auto search() -> bool {
    if (stats_) ++stats_->nodes;
    if (mode_ != HomMode::plain) {
      int best = -1;
      for (unsigned t = 0; t < targets_; ++t)
        if ((required_ & bit(t)) && covered_[t] == 0 && (best < 0 || support_[t] < support_[static_cast<unsigned>(best)]))
          best = static_cast<int>(t);
      if (best >= 0) return cover_vertex(static_cast<unsigned>(best));
      if (mode_ == HomMode::edge_surjective) {
        for (const auto& e : target_edges_) {
          bool covered = false, possible = false;
          edge_status(e.u, e.v, covered, possible);
          if (covered) continue;
          if (!possible) return false;
          return cover_edge(e.u, e.v);
        }
      }
    }
    Vertex best = static_cast<Vertex>(g_.order());
    int best_size = 65;
    for (Vertex v = 0; v < g_.order(); ++v) {
      int size = std::popcount(dom_[v]);
      if (size > 1 && size < best_size) {
        best = v;
        best_size = size;
        if (size == 2) break;
      }
    }
    if (best == g_.order()) return leaf_ok();
    for (Mask values = dom_[best]; values; values &= values - 1) {
      auto t = static_cast<unsigned>(std::countr_zero(values));
      if (!(dom_[best] & bit(t))) continue;
      std::size_t mark = trail_.size();
      if (assign(best, t) && search()) return true;
      undo(mark);
      if (!refute(best, t)) return false;
    }
    return false;
  }

  auto cover_vertex(unsigned t) -> bool {
    for (;;) {
      Vertex u = 0;
      while (u < g_.order() && !(dom_[u] & bit(t) && !singleton(dom_[u]))) ++u;
      if (u == g_.order()) return false;
      std::size_t mark = trail_.size();
      if (assign(u, t) && search()) return true;
      undo(mark);
      if (!refute(u, t)) return false;
      if (covered_[t] > 0) return search();
    }
  }

  void edge_status(Vertex s, Vertex t, bool& covered, bool& possible) const {
    for (Vertex u = 0; u < g_.order(); ++u) {
      for (Vertex w : g_.neighbors(u)) {
        if ((dom_[u] & bit(s)) && (dom_[w] & bit(t))) {
          possible = true;
          if (singleton(dom_[u]) && singleton(dom_[w])) {
            covered = true;
            return;
          }
        }
      }
    }
  }

  auto cover_edge(Vertex s, Vertex t) -> bool {
    for (Vertex u = 0; u < g_.order(); ++u) {
      if (!(dom_[u] & bit(s))) continue;
      for (Vertex w : g_.neighbors(u)) {
        if (!(dom_[w] & bit(t))) continue;
        std::size_t mark = trail_.size();
        if (assign(u, s) && assign(w, t) && search()) return true;
        undo(mark);
      }
    }
    return false;
  }

  auto leaf_ok() const -> bool {
    for (unsigned t = 0; t < targets_; ++t)
      if ((required_ & bit(t)) && covered_[t] == 0) return false;
    if (mode_ != HomMode::edge_surjective) return true;
    for (const auto& e : target_edges_) {
      bool covered = false, possible = false;
      edge_status(e.u, e.v, covered, possible);
      if (!covered) return false;
    }
    return true;
  }

  const Graph& g_;
  HomMode mode_;
  std::vector<Mask> dom_;
  SearchStats* stats_;
  std::vector<char> queued_;
  std::vector<Vertex> queue_;
  std::vector<std::pair<Vertex, Mask>> trail_;
  unsigned targets_ = 0;
  std::vector<Mask> target_nbrs_;
  std::vector<Mask> union_table_;
  std::vector<Edge> target_edges_;
  Mask required_ = 0;
  std::vector<std::size_t> support_;
  std::vector<std::size_t> covered_;
};

auto c6_symmetry_lists(const Graph& g) -> HomLists {
  HomLists lists(g.order(), {0, 1, 2, 3, 4, 5});
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    lists[v] = {0};
    lists[g.neighbors(v)[0]] = {1};
    return lists;
  }
  if (g.order() > 0) lists[0] = {0};
  return lists;
}

}  // namespace

auto solve_list_hom(const Graph& g, const Graph& h, const HomLists& lists, HomMode mode, SearchStats* stats)
    -> std::optional<VertexMapping> {
  if (h.order() > 64) throw InputError("target graph has more than 64 vertices");
  if (!lists.empty() && lists.size() != g.order()) throw InputError("list assignment does not cover the source graph");
  Mask all = h.order() == 64 ? ~Mask{0} : bit(static_cast<unsigned>(h.order())) - 1;
  std::vector<Mask> domains(g.order(), all);
  for (std::size_t v = 0; v < lists.size(); ++v) {
    Mask d = 0;
    for (Vertex t : lists[v]) {
      if (t >= h.order()) throw InputError("list of vertex " + std::to_string(v + 1) + " names non-vertex " + std::to_string(t + 1));
      d |= bit(t);
    }
    domains[v] = d;
  }
  return HomSearch(g, h, mode, std::move(domains), stats).run();
}

auto retraction_lists(std::size_t order, const C6Embedding& c) -> HomLists {
  HomLists lists(order, {0, 1, 2, 3, 4, 5});
  for (int i = 0; i < 6; ++i) lists[c.at(i)] = {static_cast<Vertex>(i)};
  return lists;
}

auto solve_retraction(const BipartiteGraph& b, const C6Embedding& c) -> std::optional<VertexMapping> {
  check_c6_embedding(b, c);
  auto f = solve_list_hom(b.graph(), cycle_graph(6), retraction_lists(b.order(), c), HomMode::plain);
  if (!f) return std::nullopt;
  for (auto& img : f->image) img = c.at(static_cast<int>(img));
  return f;
}

auto solve_c6_compaction(const Graph& g, SearchStats* stats) -> std::optional<VertexMapping> {
  if (g.size() == 0) return std::nullopt;
  return solve_list_hom(g, cycle_graph(6), c6_symmetry_lists(g), HomMode::edge_surjective, stats);
}

auto solve_surjective_c6(const Graph& g, SearchStats* stats) -> std::optional<VertexMapping> {
  return solve_list_hom(g, cycle_graph(6), c6_symmetry_lists(g), HomMode::vertex_surjective, stats);
}

}  // namespace chromatic
