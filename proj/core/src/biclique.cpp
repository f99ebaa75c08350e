#include <algorithm>

#include "chromatic/solvers.hpp"

namespace chromatic {

namespace {

class BicliqueSearch {
 public:
  BicliqueSearch(const BipartiteGraph& b, std::size_t k, bool exact) : b_(b), k_(k), exact_(exact) {
    remaining_[0] = b.side(Part::X).size();
    remaining_[1] = b.side(Part::Y).size();
  }

  auto run() -> std::optional<BicliquePartition> {
    if (!search(0)) return std::nullopt;
    BicliquePartition out;
    for (const auto& blk : blocks_) {
      std::vector<Vertex> all = blk.side[0];
      all.insert(all.end(), blk.side[1].begin(), blk.side[1].end());
      std::sort(all.begin(), all.end());
      out.blocks.push_back(std::move(all));
    }
    return out;
  }

 private:
  struct Block {
    std::vector<Vertex> side[2];
  };

  auto feasible() const -> bool {
    std::size_t lacking[2] = {0, 0};
    for (const auto& blk : blocks_)
      for (int s = 0; s < 2; ++s)
        if (blk.side[s].empty()) ++lacking[s];
    std::size_t missing_blocks = exact_ && blocks_.size() < k_ ? k_ - blocks_.size() : 0;
    return lacking[0] + missing_blocks <= remaining_[0] && lacking[1] + missing_blocks <= remaining_[1];
  }

  auto search(Vertex v) -> bool {
    if (!feasible()) return false;
    if (v == b_.order()) return !exact_ || blocks_.size() == k_;
    int s = b_.part(v) == Part::X ? 0 : 1;
    --remaining_[s];
    for (std::size_t i = 0; i <= blocks_.size() && i < k_; ++i) {
      if (i == blocks_.size()) blocks_.emplace_back();
      auto& blk = blocks_[i];
      const auto& opposite = blk.side[1 - s];
      bool complete = std::all_of(opposite.begin(), opposite.end(), [&](Vertex w) { return b_.graph().adjacent(v, w); });
      if (complete) {
        blk.side[s].push_back(v);
        if (search(v + 1)) return true;
        blocks_[i].side[s].pop_back();
      }
      if (blocks_[i].side[0].empty() && blocks_[i].side[1].empty()) blocks_.pop_back();
    }
    ++remaining_[s];
    return false;
  }

  const BipartiteGraph& b_;
  std::size_t k_;
  bool exact_;
  std::vector<Block> blocks_;
  std::size_t remaining_[2];
};

}  // namespace

auto solve_biclique_partition(const BipartiteGraph& b, std::size_t k, bool exact) -> std::optional<BicliquePartition> {
  if (exact && k > b.order()) return std::nullopt;
  return BicliqueSearch(b, k, exact).run();
}

}  // namespace chromatic
