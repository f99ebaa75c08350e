#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "chromatic/errors.hpp"
#include "chromatic/hitset.hpp"
#include "chromatic/io.hpp"
#include "chromatic/reductions.hpp"
#include "chromatic/solvers.hpp"
#include "chromatic/validate.hpp"
#include "chromatic/verify/generators.hpp"
#include "chromatic/verify/harness.hpp"

namespace fs = std::filesystem;
using namespace chromatic;

namespace {

constexpr int kExitInput = 10;
constexpr int kExitPrecondition = 11;

struct Args {
  std::string problem, rule, suite, kind, mutation;
  fs::path in, out, lists, pre, c6, cert;
  std::optional<int> k;
  std::uint64_t seed = 1;
  double budget = 0;
  std::size_t n = 0, m = 0, diameter = 0;
};

auto need(const fs::path& p, const char* flag) -> fs::path {
  if (p.empty()) throw InputError(std::string("missing ") + flag);
  return p;
}

auto need_k(const Args& a) -> Color {
  if (!a.k) throw InputError("missing --k");
  if (*a.k < 1) throw InputError("--k must be positive");
  return *a.k;
}

template <class Fn>
auto load(const fs::path& p, Fn fn) {
  auto in = io::open(p);
  return fn(in);
}

auto graph_in(const Args& a) -> Graph {
  return load(need(a.in, "--in"), [](std::istream& s) { return io::read_graph(s); });
}
auto bipartite_in(const Args& a) -> BipartiteGraph {
  return load(need(a.in, "--in"), [](std::istream& s) { return io::read_bipartite(s); });
}
auto hypergraph_in(const Args& a) -> Hypergraph3 {
  return load(need(a.in, "--in"), [](std::istream& s) { return io::read_hypergraph(s); });
}
auto lists_in(const Args& a, std::size_t n) -> ListAssignment {
  return load(need(a.lists, "--lists"), [n](std::istream& s) { return io::read_lists(s, n); });
}
auto pre_in(const Args& a, std::size_t n) -> PartialColoring {
  if (a.pre.empty()) return {};
  return load(a.pre, [n](std::istream& s) { return io::read_precoloring(s, n); });
}
auto c6_in(const Args& a, std::size_t n) -> C6Embedding {
  return load(need(a.c6, "--c6"), [n](std::istream& s) { return io::read_c6(s, n); });
}

void print_answer(bool yes) { std::cout << (yes ? "YES" : "NO") << "\n"; }

auto run_solve(const Args& a) -> int {
  const auto& p = a.problem;
  if (p == "listcol") {
    auto g = graph_in(a);
    auto f = solve_list_coloring(g, lists_in(a, g.order()), a.k.value_or(0));
    print_answer(f.has_value());
    if (f) io::write_coloring(std::cout, *f);
  } else if (p == "preext") {
    auto g = graph_in(a);
    auto f = solve_preext(g, need_k(a), pre_in(a, g.order()));
    print_answer(f.has_value());
    if (f) io::write_coloring(std::cout, *f);
  } else if (p == "fall") {
    auto f = solve_fall_coloring(graph_in(a), need_k(a));
    print_answer(f.has_value());
    if (f) io::write_coloring(std::cout, *f);
  } else if (p == "biclique") {
    auto part = solve_biclique_partition(bipartite_in(a), static_cast<std::size_t>(need_k(a)));
    print_answer(part.has_value());
    if (part) io::write_partition(std::cout, *part);
  } else if (p == "retract") {
    auto b = bipartite_in(a);
    auto r = solve_retraction(b, c6_in(a, b.order()));
    print_answer(r.has_value());
    if (r) io::write_mapping(std::cout, *r);
  } else if (p == "compact" || p == "surjhom") {
    auto g = graph_in(a);
    auto f = p == "compact" ? solve_c6_compaction(g) : solve_surjective_c6(g);
    print_answer(f.has_value());
    if (f) io::write_mapping(std::cout, *f);
  } else if (p == "h2col") {
    auto f = solve_h2col(hypergraph_in(a));
    print_answer(f.has_value());
    if (f) io::write_coloring(std::cout, *f);
  } else if (p == "chs") {
    auto [fa, fb] = load(need(a.in, "--in"), [](std::istream& s) { return io::read_families(s); });
    auto s = complementary_hitting_sets(fa, fb, fa.k);
    print_answer(s.has_value());
    if (s) {
      std::cout << "S";
      for (Color c : subset_colors(*s)) std::cout << ' ' << c;
      std::cout << "\n";
    }
  } else {
    throw InputError("unknown problem " + p);
  }
  return 0;
}

auto writer(const Args& a, const std::string& suffix) -> std::ofstream {
  auto path = need(a.out, "--out").string() + suffix;
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  std::cout << "wrote " << path << "\n";
  return out;
}

void report_graph(const Graph& g) {
  auto d = diameter(g);
  std::cout << "vertices " << g.order() << "\nedges " << g.size() << "\ndiameter "
            << (d == kInfiniteDistance ? std::string("infinite") : std::to_string(d)) << "\n";
}

void emit_bipartite(const Args& a, const BipartiteGraph& b, const std::vector<std::string>& names = {}) {
  {
    auto out = writer(a, ".gr");
    io::write_bipartite(out, b);
  }
  if (!names.empty()) {
    auto out = writer(a, ".names");
    io::write_names(out, names);
  }
}

auto run_reduce(const Args& a) -> int {
  const auto& r = a.rule;
  if (r == "prop1") {
    auto b = bipartite_in(a);
    auto lift = lift_preext(b, pre_in(a, b.order()), need_k(a));
    emit_bipartite(a, lift.lift.graph);
    auto out = writer(a, ".pc");
    io::write_precoloring(out, lift.precoloring);
    report_graph(lift.lift.graph.graph());
    std::cout << "k " << lift.k << "\n";
  } else if (r == "prop10") {
    auto b = bipartite_in(a);
    auto k = need_k(a);
    auto lift = fall_lift(b, k);
    emit_bipartite(a, lift.graph);
    report_graph(lift.graph.graph());
    std::cout << "k " << k + 1 << "\n";
  } else if (r == "thm7" || r == "cor3" || r == "lem7") {
    auto h = hypergraph_in(a);
    auto rc = build_c6_retract(h);
    if (r == "thm7") {
      emit_bipartite(a, rc.graph, rc.names);
      auto out = writer(a, ".c6");
      io::write_c6(out, rc.cycle);
      report_graph(rc.graph.graph());
    } else if (r == "cor3") {
      auto pe = retract_to_preext3(rc.graph, rc.cycle);
      emit_bipartite(a, rc.graph, rc.names);
      auto out = writer(a, ".pc");
      io::write_precoloring(out, pe.precoloring);
      report_graph(pe.graph);
      std::cout << "k 3\n";
    } else {
      auto cc = build_compaction(rc.graph, rotate_embedding(rc.cycle, 1));
      std::vector<std::string> names = cc.names;
      for (std::size_t v = 0; v < rc.names.size(); ++v) names[v] = rc.names[v];
      emit_bipartite(a, cc.graph, names);
      auto out = writer(a, ".c6");
      io::write_c6(out, cc.cycle);
      report_graph(cc.graph.graph());
      std::cout << "added " << cc.graph.order() - cc.base_order << "\n";
    }
  } else if (r == "cor9") {
    auto b = bipartite_in(a);
    emit_bipartite(a, bipartite_complement(b));
    std::cout << "k 3\n";
  } else if (r == "prop12") {
    auto b = bipartite_in(a);
    auto queries = fall3_queries(b);
    for (std::size_t i = 0; i < queries.size(); ++i) {
      auto out = writer(a, ".q" + std::to_string(i + 1) + ".pc");
      io::write_precoloring(out, queries[i].precoloring);
    }
    std::cout << "queries " << queries.size() << "\nk 3\n";
  } else if (r == "thm13") {
    auto fc = build_fall3_diam4(hypergraph_in(a));
    emit_bipartite(a, fc.graph, fc.names);
    report_graph(fc.graph.graph());
    std::cout << "k 3\n";
  } else if (r == "appA") {
    auto lc = appendix_listcol3(hypergraph_in(a));
    emit_bipartite(a, lc.graph);
    auto out = writer(a, ".lists");
    io::write_lists(out, lc.lists);
    report_graph(lc.graph.graph());
    std::cout << "k " << lc.k << "\n";
  } else if (r == "fmps") {
    auto b = bipartite_in(a);
    auto fc = fmps_flawed_instance(b, lists_in(a, b.order()));
    emit_bipartite(a, fc.graph, fc.names);
    auto out = writer(a, ".c6");
    io::write_c6(out, fc.cycle);
    report_graph(fc.graph.graph());
  } else {
    throw InputError("unknown rule " + r);
  }
  return 0;
}

auto run_verify(const Args& a) -> int {
  verify::SuiteOptions options;
  options.seed = a.seed;
  options.budget_seconds = a.budget;
  options.threads = verify::threads_from_env();
  options.mutation = a.mutation;
  auto reports = verify::run_suite(a.suite, options);
  bool incomplete = false, failed = false;
  for (const auto& r : reports) {
    verify::print_report(std::cout, r);
    incomplete |= r.incomplete;
    failed |= !r.incomplete && !r.pass();
  }
  return failed ? 1 : incomplete ? 2 : 0;
}

auto run_validate(const Args& a) -> int {
  const auto& p = a.problem;
  auto cert_stream = [&] { return io::open(need(a.cert, "--cert")); };
  Verdict v;
  if (p == "h2col") {
    auto h = hypergraph_in(a);
    auto s = cert_stream();
    v = validate(H2colInstance{h}, io::read_coloring(s, h.order()));
  } else if (p == "biclique") {
    auto b = bipartite_in(a);
    auto s = cert_stream();
    v = validate(BicliqueInstance{b, static_cast<std::size_t>(need_k(a))}, io::read_partition(s, b.order()));
  } else if (p == "retract") {
    auto b = bipartite_in(a);
    auto s = cert_stream();
    v = validate(RetractionInstance{b, c6_in(a, b.order())}, io::read_mapping(s, b.order()));
  } else {
    auto g = graph_in(a);
    auto s = cert_stream();
    if (p == "listcol") {
      v = validate(ListColoringInstance{g, lists_in(a, g.order())}, io::read_coloring(s, g.order()));
    } else if (p == "preext") {
      v = validate(PreextInstance{g, need_k(a), pre_in(a, g.order())}, io::read_coloring(s, g.order()));
    } else if (p == "fall") {
      v = validate(FallInstance{g, need_k(a)}, io::read_coloring(s, g.order()));
    } else if (p == "compact" || p == "surjhom") {
      auto mode = p == "compact" ? HomMode::edge_surjective : HomMode::vertex_surjective;
      v = validate(HomInstance{g, cycle_graph(6), {}, mode}, io::read_mapping(s, g.order()));
    } else {
      throw InputError("unknown problem " + p);
    }
  }
  if (v) std::cout << "ok\n";
  else std::cout << "violation: " << v.violation << "\n";
  return v ? 0 : 1;
}

auto run_generate(const Args& a) -> int {
  if (a.kind == "h3") {
    io::write_hypergraph(std::cout, verify::gen_h3(a.n, a.m, a.seed));
  } else if (a.kind == "bipartite") {
    io::write_bipartite(std::cout, verify::gen_bipartite(a.n, a.diameter, a.seed));
  } else {
    throw InputError("unknown kind " + a.kind);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers, reduction builders and verification suites for bipartite coloring problems"};
  app.require_subcommand(1);
  Args a;

  auto* solve = app.add_subcommand("solve", "Decide an instance and print a certificate");
  solve->add_option("--problem", a.problem)
      ->required()
      ->check(CLI::IsMember({"listcol", "preext", "fall", "biclique", "retract", "compact", "surjhom", "h2col", "chs"}));
  solve->add_option("--in", a.in)->required();
  solve->add_option("--k", a.k);
  solve->add_option("--lists", a.lists);
  solve->add_option("--pre", a.pre);
  solve->add_option("--c6", a.c6);

  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  reduce->add_option("--rule", a.rule)
      ->required()
      ->check(CLI::IsMember({"prop1", "thm7", "cor3", "lem7", "cor9", "prop10", "prop12", "thm13", "appA", "fmps"}));
  reduce->add_option("--in", a.in)->required();
  reduce->add_option("--out", a.out)->required();
  reduce->add_option("--k", a.k);
  reduce->add_option("--lists", a.lists);
  reduce->add_option("--pre", a.pre);

  auto* ver = app.add_subcommand("verify", "Run an equivalence suite");
  std::vector<std::string> suites = verify::suite_ids();
  suites.push_back("all");
  ver->add_option("--suite", a.suite)->check(CLI::IsMember(suites));
  ver->add_option("--seed", a.seed);
  ver->add_option("--budget", a.budget, "Seconds; 0 means unlimited");
  ver->add_option("--mutation", a.mutation, "Apply a registered mutation to the suite's builder");
  auto* list_mutations = ver->add_flag("--list-mutations", "Print registered mutations and exit");

  auto* val = app.add_subcommand("validate", "Check a certificate against an instance");
  val->add_option("--problem", a.problem)
      ->required()
      ->check(CLI::IsMember({"listcol", "preext", "fall", "biclique", "retract", "compact", "surjhom", "h2col"}));
  val->add_option("--in", a.in)->required();
  val->add_option("--cert", a.cert)->required();
  val->add_option("--k", a.k);
  val->add_option("--lists", a.lists);
  val->add_option("--pre", a.pre);
  val->add_option("--c6", a.c6);

  auto* gen = app.add_subcommand("generate", "Print a seeded random instance");
  gen->add_option("--kind", a.kind)->required()->check(CLI::IsMember({"h3", "bipartite"}));
  gen->add_option("--n", a.n)->required();
  gen->add_option("--m", a.m, "Hyperedges (h3)");
  gen->add_option("--diameter", a.diameter, "Exact diameter (bipartite)");
  gen->add_option("--seed", a.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    auto code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve) return run_solve(a);
    if (*reduce) return run_reduce(a);
    if (*ver) {
      if (*list_mutations) {
        for (const auto& m : verify::registered_mutations())
          std::cout << m.reduction << " " << m.suite << " " << m.name << "  " << m.description << "\n";
        return 0;
      }
      if (a.suite.empty()) throw InputError("missing --suite");
      return run_verify(a);
    }
    if (*val) return run_validate(a);
    if (*gen) return run_generate(a);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const FalsificationError& e) {
    std::cerr << "FALSIFICATION: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
