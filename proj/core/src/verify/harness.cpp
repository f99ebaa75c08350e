#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "chromatic/solvers.hpp"
#include "runner.hpp"

namespace chromatic::verify {

namespace {

const std::vector<std::string> kComponents = {
    "solve_list_hom", "solve_retraction", "solve_c6_compaction", "solve_surjective_c6", "solve_list_coloring",
    "solve_list_coloring_backtracking", "solve_two_list_coloring", "solve_preext", "solve_fall_coloring",
    "solve_biclique_partition", "solve_h2col", "complementary_hitting_sets", "listcol_complete_bipartite",
    "lift_preext", "build_c6_retract", "complete_gadget_mapping", "retract_to_preext3", "build_compaction",
    "normalize_compaction", "biclique_to_surjective", "surjective_to_biclique", "fmps_flawed_instance", "fall_lift",
    "fall3_turing_queries", "build_fall3_diam4", "appendix_listcol3"};

std::mutex coverage_mutex;
std::set<std::string, std::less<>> coverage;

}  // namespace

auto EquivalenceReport::summary() const -> std::string {
  return "suite " + id + " " + (pass() ? "pass" : "fail") + " " + std::to_string(instances) + " " +
         std::to_string(mismatches + assertion_failures);
}

void print_report(std::ostream& out, const EquivalenceReport& r) {
  out << "corpus " << r.id << ": " << r.corpus << "\n";
  out << "checked " << r.id << ": instances " << r.instances << ", mismatches " << r.mismatches
      << ", assertion failures " << r.assertion_failures << ", certificates " << r.certificates
      << ", source YES " << r.yes << "\n";
  for (const auto& note : r.notes) out << "note " << r.id << ": " << note << "\n";
  if (r.counterexample) out << "counterexample " << r.id << ": " << *r.counterexample << "\n";
  if (r.incomplete)
    out << "incomplete " << r.id << ": budget exhausted after " << r.completed << " of " << r.planned << " work items\n";
  out << r.summary() << "\n";
}

auto suite_ids() -> const std::vector<std::string>& {
  static const std::vector<std::string> ids = {"prop1",  "thm7",   "cor3",  "lem7", "cor8", "cor9",  "flaw",
                                               "prop10", "prop12", "thm13", "appA", "faik", "hitset"};
  return ids;
}

auto registered_mutations() -> const std::vector<MutationInfo>& {
  static const std::vector<MutationInfo> list = {
      {"prop1", "prop1", "drop-x-y0", "remove the edge between x and the first Y vertex"},
      {"prop1", "prop1", "add-x-y", "join the two lift vertices x and y"},
      {"thm7", "thm7", "drop-g1a1-pV3", "remove the edge g1:a1 - pV3"},
      {"thm7", "thm7", "drop-v1-pE3", "remove the edge v1 - pE3"},
      {"cor3", "cor3", "drop-pE3-precolor", "leave pE3 uncolored"},
      {"lem7", "lem7", "drop-gadget-edge", "remove the edge a1 - h'4 of the first diagonal gadget"},
      {"cor9", "cor9", "drop-complement-edge", "remove the first edge of the bipartite complement"},
      {"prop10", "prop10", "drop-x-y0", "remove the edge between x and the first Y vertex"},
      {"prop12", "prop12", "relabel-123132", "precolor each cycle 1,2,3,1,3,2"},
      {"prop12", "prop12", "drop-precolor", "leave the last cycle vertex uncolored"},
      {"thm13", "thm13", "drop-v1-v'1", "remove the matching edge v1 - v'1"},
      {"appA", "appA", "drop-a1-b1", "remove the edge a1 - b1"},
      {"fmps", "flaw", "drop-u-y", "remove the first list edge u - y_i"},
  };
  return list;
}

void reset_coverage() {
  std::lock_guard lock(coverage_mutex);
  coverage.clear();
}

void mark_used(std::string_view component) {
  std::lock_guard lock(coverage_mutex);
  if (coverage.find(component) == coverage.end()) coverage.emplace(component);
}

auto missing_coverage() -> std::vector<std::string> {
  std::lock_guard lock(coverage_mutex);
  std::vector<std::string> out;
  for (const auto& c : kComponents)
    if (!coverage.count(c)) out.push_back(c);
  return out;
}

auto threads_from_env() -> unsigned {
  const char* value = std::getenv("CHROMATIC_THREADS");
  if (!value || !*value) return 0;
  char* end = nullptr;
  auto n = std::strtoul(value, &end, 10);
  if (*end != '\0') throw InputError(std::string("CHROMATIC_THREADS is not a number: ") + value);
  return static_cast<unsigned>(n);
}

auto faik_check(const BipartiteGraph& b) -> FaikReport {
  const auto& g = b.graph();
  if (auto d = diameter(g); d > 3) throw InputError("faik check needs diameter at most 3");
  FaikReport report;
  const auto n = g.order();
  Coloring f{std::vector<Color>(n, 0)};
  auto visit = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      ++report.colorings;
      std::array<bool, 4> has_b{};
      for (Vertex w = 0; w < n; ++w)
        if (is_b_vertex(g, 3, f, w)) has_b[static_cast<std::size_t>(f[w])] = true;
      if (!(has_b[1] && has_b[2] && has_b[3])) return;
      ++report.b_colorings;
      if (!validate_fall(g, 3, f)) {
        if (!report.witness) report.witness = f;
        ++report.violations;
      }
      return;
    }
    for (Color c = 1; c <= 3; ++c) {
      auto nbrs = g.neighbors(v);
      if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return w < v && f[w] == c; })) continue;
      f.colors[v] = c;
      self(self, v + 1);
    }
    f.colors[v] = 0;
  };
  visit(visit, 0);
  return report;
}

auto cor8_check(const BipartiteGraph& b) -> Cor8Record {
  Cor8Record r;
  r.diameter = diameter(b.graph());
  r.gated = r.diameter <= 4;
  r.surjective = solve_surjective_c6(b.graph()).has_value();
  r.compaction = solve_c6_compaction(b.graph()).has_value();
  return r;
}

auto run_suite(const std::string& id, const SuiteOptions& options) -> std::vector<EquivalenceReport> {
  detail::Context ctx{options, std::nullopt, options.threads};
  if (ctx.threads == 0) ctx.threads = std::max(1u, std::thread::hardware_concurrency());
  if (options.budget_seconds > 0)
    ctx.deadline = detail::Clock::now() + std::chrono::duration_cast<detail::Clock::duration>(
                                              std::chrono::duration<double>(options.budget_seconds));
  using Fn = EquivalenceReport (*)(const detail::Context&);
  static const std::map<std::string, Fn> suites = {
      {"prop1", detail::suite_prop1},   {"thm7", detail::suite_thm7},     {"cor3", detail::suite_cor3},
      {"lem7", detail::suite_lem7},     {"cor8", detail::suite_cor8},     {"cor9", detail::suite_cor9},
      {"flaw", detail::suite_flaw},     {"prop10", detail::suite_prop10}, {"prop12", detail::suite_prop12},
      {"thm13", detail::suite_thm13},   {"appA", detail::suite_appA},     {"faik", detail::suite_faik},
      {"hitset", detail::suite_hitset}};
  if (id != "all") {
    auto it = suites.find(id);
    if (it == suites.end()) throw InputError("unknown suite " + id);
    return {it->second(ctx)};
  }
  if (!options.mutation.empty()) throw InputError("mutations apply to a single suite");
  reset_coverage();
  std::vector<EquivalenceReport> out;
  for (const auto& sid : suite_ids()) out.push_back(suites.at(sid)(ctx));
  EquivalenceReport cov;
  cov.id = "coverage";
  cov.corpus = "every solver and builder exercised by the suites above";
  auto missing = missing_coverage();
  cov.planned = cov.completed = kComponents.size();
  cov.instances = kComponents.size() - missing.size();
  cov.assertion_failures = missing.size();
  for (const auto& m : missing) cov.notes.push_back("not exercised: " + m);
  cov.incomplete = std::any_of(out.begin(), out.end(), [](const auto& r) { return r.incomplete; });
  out.push_back(std::move(cov));
  return out;
}

namespace detail {

auto run_indexed(const Context& ctx, const std::string& id, const std::string& corpus, std::size_t count,
                 const std::function<void(std::size_t, Outcome&)>& fn) -> EquivalenceReport {
  std::vector<std::optional<Outcome>> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      if (ctx.deadline && Clock::now() > *ctx.deadline) return;
      auto i = next.fetch_add(1);
      if (i >= count) return;
      Outcome o;
      try {
        fn(i, o);
      } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
      }
      results[i] = std::move(o);
    }
  };
  auto workers = std::min<std::size_t>(ctx.threads, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  EquivalenceReport r;
  r.id = id;
  r.corpus = corpus;
  std::map<std::string, std::size_t> counters;
  for (std::size_t i = 0; i < count; ++i) {
    if (!results[i]) {
      r.incomplete = true;
      continue;
    }
    const auto& o = *results[i];
    ++r.completed;
    r.instances += o.instances;
    r.yes += o.yes;
    r.certificates += o.certificates;
    r.mismatches += o.mismatches;
    r.assertion_failures += o.failures.size();
    for (const auto& [name, value] : o.counters) counters[name] += value;
    if ((o.mismatches > 0 || !o.failures.empty()) && !r.counterexample) {
      std::string text = "instance " + std::to_string(i + 1) + ":" + o.detail;
      for (const auto& f : o.failures) text += "; " + f;
      r.counterexample = text;
    }
  }
  r.planned = count;
  for (const auto& [name, value] : counters) r.notes.push_back(name + " " + std::to_string(value));
  return r;
}

void require_known_mutation(const Context& ctx, std::string_view suite) {
  if (ctx.options.mutation.empty()) return;
  for (const auto& m : registered_mutations())
    if (m.suite == suite && m.name == ctx.options.mutation) return;
  throw InputError("suite " + std::string(suite) + " has no mutation " + ctx.options.mutation);
}

auto mutation_is(const Context& ctx, std::string_view name) -> bool { return ctx.options.mutation == name; }

auto vertex_named(const std::vector<std::string>& names, const std::string& name) -> Vertex {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::logic_error("no vertex named " + name);
  return static_cast<Vertex>(it - names.begin());
}

auto drop_edge(const BipartiteGraph& b, Vertex u, Vertex v) -> BipartiteGraph {
  if (!b.graph().adjacent(u, v)) throw std::logic_error("mutation target is not an edge");
  return with_graph(b, without_edge(b.graph(), u, v));
}

auto add_edge(const BipartiteGraph& b, Vertex u, Vertex v) -> BipartiteGraph {
  return BipartiteGraph(with_edge(b.graph(), u, v), b.parts());
}

auto check_both_parts_full(const BipartiteGraph& b, Color k, const Coloring& f) -> Verdict {
  for (Part p : {Part::X, Part::Y}) {
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (Vertex v : b.side(p))
      if (f[v] >= 1 && f[v] <= k) seen[static_cast<std::size_t>(f[v])] = true;
    for (Color c = 1; c <= k; ++c)
      if (!seen[static_cast<std::size_t>(c)])
        return Verdict::fail(std::string("part ") + (p == Part::X ? "X" : "Y") + " misses color " + std::to_string(c));
  }
  return Verdict::pass();
}

auto shared_hypergraph_corpus(std::uint64_t seed) -> const Corpus<Hypergraph3>& {
  static std::mutex m;
  static std::map<std::uint64_t, Corpus<Hypergraph3>> cache;
  std::lock_guard lock(m);
  auto it = cache.find(seed);
  if (it == cache.end()) it = cache.emplace(seed, hypergraph_corpus(seed)).first;
  return it->second;
}

}  // namespace detail

}  // namespace chromatic::verify
