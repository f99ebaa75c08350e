#include "chromatic/hitset.hpp"

#include <bit>

#include "chromatic/errors.hpp"

namespace chromatic {

namespace {

constexpr std::size_t kBlock = 64;

// Branch-free within each block of 64 members.
auto hits_all(const std::vector<Subset>& members, Subset s) -> bool {
  const Subset* m = members.data();
  const std::size_t n = members.size();
  std::size_t i = 0;
  for (; i + kBlock <= n; i += kBlock) {
    unsigned missed = 0;
    for (std::size_t j = 0; j < kBlock; ++j) missed |= (m[i + j] & s) == 0;
    if (missed) return false;
  }
  for (; i < n; ++i)
    if ((m[i] & s) == 0) return false;
  return true;
}

void check_family(const SetFamily& f, int k, const char* name) {
  if (f.k != k) throw InputError(std::string("family ") + name + " declares k=" + std::to_string(f.k));
  for (Subset s : f.members)
    if (s & ~full_subset(k)) throw InputError(std::string("family ") + name + " has a member outside [k]");
}

}  // namespace

auto SetFamily::from_lists(int k, const std::vector<std::vector<Color>>& sets) -> SetFamily {
  SetFamily f{k, {}};
  for (const auto& set : sets) {
    Subset s = 0;
    for (Color c : set) {
      if (c < 1 || c > k) throw InputError("color " + std::to_string(c) + " outside [1," + std::to_string(k) + "]");
      s |= Subset{1} << (c - 1);
    }
    f.members.push_back(s);
  }
  return f;
}

auto subset_colors(Subset s) -> std::vector<Color> {
  std::vector<Color> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s) + 1);
  return out;
}

auto complementary_hitting_sets(const SetFamily& a, const SetFamily& b, int k) -> std::optional<Subset> {
  if (k < 0 || k > 63) throw InputError("k must lie in [0,63]");
  check_family(a, k, "A");
  check_family(b, k, "B");
  const Subset full = full_subset(k);
  for (Subset s = 0;; ++s) {
    if (hits_all(a.members, s) && hits_all(b.members, full & ~s)) return s;
    if (s == full) return std::nullopt;
  }
}

auto listcol_complete_bipartite(const BipartiteGraph& b, const ListAssignment& lists, Color k)
    -> std::optional<Coloring> {
  auto xs = b.side(Part::X);
  auto ys = b.side(Part::Y);
  if (xs.empty() || ys.empty()) throw InputError("complete bipartite input needs two nonempty parts");
  if (b.graph().size() != xs.size() * ys.size()) throw InputError("input graph is not complete bipartite");
  if (lists.size() != b.order()) throw InputError("list assignment does not cover the graph");
  std::vector<std::vector<Color>> a_sets, b_sets;
  for (Vertex v : xs) a_sets.push_back(lists[v]);
  for (Vertex v : ys) b_sets.push_back(lists[v]);
  auto s = complementary_hitting_sets(SetFamily::from_lists(k, a_sets), SetFamily::from_lists(k, b_sets), k);
  if (!s) return std::nullopt;
  Coloring f{std::vector<Color>(b.order(), 0)};
  for (Vertex v = 0; v < b.order(); ++v) {
    Subset allowed = b.part(v) == Part::X ? *s : full_subset(k) & ~*s;
    Color best = 0;
    for (Color c : lists[v])
      if ((allowed >> (c - 1) & 1) && (best == 0 || c < best)) best = c;
    f.colors[v] = best;
  }
  return f;
}

}  // namespace chromatic
