#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chromatic/certificates.hpp"
#include "chromatic/graph.hpp"

namespace chromatic {

using Subset = std::uint64_t;  // bit c-1 stands for color c

struct SetFamily {
  int k = 0;
  std::vector<Subset> members;

  static auto from_lists(int k, const std::vector<std::vector<Color>>& sets) -> SetFamily;
  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

inline auto full_subset(int k) -> Subset { return k >= 64 ? ~Subset{0} : (Subset{1} << k) - 1; }
auto subset_colors(Subset s) -> std::vector<Color>;

// Smallest S (as a bitmask) that hits every member of a while [k]\S hits every member of b.
auto complementary_hitting_sets(const SetFamily& a, const SetFamily& b, int k) -> std::optional<Subset>;

// List coloring of a complete bipartite graph through complementary hitting sets.
auto listcol_complete_bipartite(const BipartiteGraph& b, const ListAssignment& lists, Color k)
    -> std::optional<Coloring>;

}  // namespace chromatic
