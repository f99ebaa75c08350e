#include <algorithm>
#include <bit>
#include <map>

#include "chromatic/hitset.hpp"
#include "chromatic/solvers.hpp"
#include "runner.hpp"

namespace chromatic::verify::detail {

namespace {

struct Work {
  int k;
  std::size_t a, b;
  std::size_t first;  // index of the A multiset; 0 for random work
  std::uint64_t seed;
};

// Nondecreasing index sequences of the given length over [0, symbols).
auto multisets(std::size_t symbols, std::size_t length) -> std::vector<std::vector<std::size_t>> {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(length, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = length;
    while (i > 0 && cur[i - 1] == symbols - 1) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end(), cur[i - 1]);
  }
}

void check_instance(const BipartiteGraph& kab, int k, const std::vector<Subset>& masks, std::size_t a, Outcome& o) {
  ListAssignment lists;
  for (Subset m : masks) lists.lists.push_back(subset_colors(m));
  auto generic = solve_list_coloring(kab.graph(), lists, k);
  auto hitting = listcol_complete_bipartite(kab, lists, k);
  if (generic.has_value() != hitting.has_value() && o.mismatches == 0) {
    o.detail = " k=" + std::to_string(k) + " A-lists";
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (i == a) o.detail += " B-lists";
      o.detail += " " + std::to_string(masks[i]);
    }
  }
  o.compare(generic.has_value(), hitting.has_value());

  SetFamily fa{k, std::vector<Subset>(masks.begin(), masks.begin() + static_cast<std::ptrdiff_t>(a))};
  SetFamily fb{k, std::vector<Subset>(masks.begin() + static_cast<std::ptrdiff_t>(a), masks.end())};
  auto s = complementary_hitting_sets(fa, fb, k);
  if (s.has_value() != hitting.has_value()) o.fail("hitting set existence disagrees with the coloring path");
  if (s) {
    const Subset rest = full_subset(k) & ~*s;
    bool hits = std::all_of(fa.members.begin(), fa.members.end(), [&](Subset m) { return (m & *s) != 0; }) &&
                std::all_of(fb.members.begin(), fb.members.end(), [&](Subset m) { return (m & rest) != 0; });
    if (!hits) o.fail("returned set does not hit both families");
  }
  if (hitting) o.check(validate_list_coloring(kab.graph(), lists, *hitting), "hitting-set certificate");

  if (std::all_of(masks.begin(), masks.end(), [](Subset m) { return std::popcount(m) <= 2; })) {
    auto two = solve_two_list_coloring(kab.graph(), lists);
    auto back = solve_list_coloring_backtracking(kab.graph(), lists);
    if (two.has_value() != back.has_value()) o.fail("2-SAT path disagrees with backtracking");
    o.counters.emplace_back("two-list cross-checks", 1);
  }
}

}  // namespace

auto suite_hitset(const Context& ctx) -> EquivalenceReport {
  require_known_mutation(ctx, "hitset");
  mark_used("complementary_hitting_sets");
  mark_used("listcol_complete_bipartite");
  mark_used("solve_two_list_coloring");
  mark_used("solve_list_coloring_backtracking");
  constexpr std::size_t kRandom = 500;
  std::vector<Work> work;
  std::map<std::pair<int, std::size_t>, std::vector<std::vector<std::size_t>>> tables;
  for (int k = 1; k <= 4; ++k)
    for (std::size_t s = 1; s <= 4; ++s) tables[{k, s}] = multisets((std::size_t{1} << k) - 1, s);
  for (int k = 1; k <= 4; ++k)
    for (std::size_t a = 1; a <= 4; ++a)
      for (std::size_t b = a; b <= 4; ++b)
        for (std::size_t i = 0; i < tables[{k, a}].size(); ++i) work.push_back({k, a, b, i, 0});
  const auto exhaustive = work.size();
  SplitMix64 rng(ctx.options.seed ^ 0x686974736574ULL);
  for (std::size_t i = 0; i < kRandom; ++i) work.push_back({5, 0, 0, 0, rng.next()});

  return run_indexed(ctx, "hitset",
                     "K_{a,b} with 1<=a<=b<=4, k<=4, every multiset of nonempty lists per part; 500 random k=5 instances "
                     "with parts up to 6",
                     work.size(), [&](std::size_t w, Outcome& o) {
    const auto& job = work[w];
    o.instances = 0;
    if (w >= exhaustive) {
      SplitMix64 r(job.seed);
      auto a = r.uniform(1, 6), b = r.uniform(1, 6);
      std::vector<Subset> masks;
      for (std::size_t i = 0; i < a + b; ++i) masks.push_back(r.uniform(1, 31));
      ++o.instances;
      check_instance(complete_bipartite(a, b), 5, masks, a, o);
      return;
    }
    const auto& as = tables.at({job.k, job.a})[job.first];
    const auto& bs = tables.at({job.k, job.b});
    auto kab = complete_bipartite(job.a, job.b);
    std::vector<Subset> masks(job.a + job.b);
    for (std::size_t i = 0; i < job.a; ++i) masks[i] = as[i] + 1;
    for (std::size_t j = job.a == job.b ? job.first : 0; j < bs.size(); ++j) {
      for (std::size_t i = 0; i < job.b; ++i) masks[job.a + i] = bs[j][i] + 1;
      ++o.instances;
      check_instance(kab, job.k, masks, job.a, o);
    }
  });
}

}  // namespace chromatic::verify::detail
