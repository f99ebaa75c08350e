#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromatic/errors.hpp"
#include "chromatic/validate.hpp"
#include "chromatic/verify/generators.hpp"
#include "chromatic/verify/harness.hpp"

namespace chromatic::verify::detail {

using Clock = std::chrono::steady_clock;

struct Context {
  SuiteOptions options;
  std::optional<Clock::time_point> deadline;
  unsigned threads = 1;
};

struct Outcome {
  std::size_t instances = 1;
  std::size_t mismatches = 0;
  std::size_t yes = 0;
  std::vector<std::string> failures;
  std::size_t certificates = 0;
  std::string detail;
  std::vector<std::pair<std::string, std::size_t>> counters;

  void fail(std::string what) { failures.push_back(std::move(what)); }
  void require(bool cond, std::string_view what) {
    if (!cond) fail(std::string(what));
  }
  void check(const Verdict& v, std::string_view what) {
    ++certificates;
    if (!v) fail(std::string(what) + ": " + v.violation);
  }
  void compare(bool source, bool target) {
    if (source != target) {
      if (mismatches++ == 0)
        detail += std::string(" source=") + (source ? "YES" : "NO") + " target=" + (target ? "YES" : "NO");
    }
    if (source) ++yes;
  }
};

// Runs fn(i, outcome) for i in [0, count) across ctx.threads workers; outcomes are merged in index order.
auto run_indexed(const Context& ctx, const std::string& id, const std::string& corpus, std::size_t count,
                 const std::function<void(std::size_t, Outcome&)>& fn) -> EquivalenceReport;

// Throws InputError unless the requested mutation is empty or registered for this suite.
void require_known_mutation(const Context& ctx, std::string_view suite);
auto mutation_is(const Context& ctx, std::string_view name) -> bool;

auto vertex_named(const std::vector<std::string>& names, const std::string& name) -> Vertex;
auto drop_edge(const BipartiteGraph& b, Vertex u, Vertex v) -> BipartiteGraph;
auto add_edge(const BipartiteGraph& b, Vertex u, Vertex v) -> BipartiteGraph;

// Every bipartite fall certificate with k >= 3 uses all k colors on both parts.
auto check_both_parts_full(const BipartiteGraph& b, Color k, const Coloring& f) -> Verdict;

auto shared_hypergraph_corpus(std::uint64_t seed) -> const Corpus<Hypergraph3>&;

auto suite_prop1(const Context& ctx) -> EquivalenceReport;
auto suite_thm7(const Context& ctx) -> EquivalenceReport;
auto suite_cor3(const Context& ctx) -> EquivalenceReport;
auto suite_lem7(const Context& ctx) -> EquivalenceReport;
auto suite_cor8(const Context& ctx) -> EquivalenceReport;
auto suite_cor9(const Context& ctx) -> EquivalenceReport;
auto suite_flaw(const Context& ctx) -> EquivalenceReport;
auto suite_prop10(const Context& ctx) -> EquivalenceReport;
auto suite_prop12(const Context& ctx) -> EquivalenceReport;
auto suite_thm13(const Context& ctx) -> EquivalenceReport;
auto suite_appA(const Context& ctx) -> EquivalenceReport;
auto suite_faik(const Context& ctx) -> EquivalenceReport;
auto suite_hitset(const Context& ctx) -> EquivalenceReport;

}  // namespace chromatic::verify::detail
