#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromatic/certificates.hpp"
#include "chromatic/graph.hpp"

namespace chromatic::verify {

struct SuiteOptions {
  std::uint64_t seed = 1;
  double budget_seconds = 0;  // 0: unlimited
  unsigned threads = 0;       // 0: hardware concurrency
  std::string mutation;       // empty: unmutated builders
};

struct EquivalenceReport {
  std::string id;
  std::string corpus;
  std::size_t instances = 0;
  std::size_t planned = 0;    // work items
  std::size_t completed = 0;  // work items finished before the budget ran out
  std::size_t yes = 0;      // instances whose source answer is YES
  std::size_t mismatches = 0;
  std::size_t assertion_failures = 0;
  std::size_t certificates = 0;
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;
  bool incomplete = false;

  auto pass() const -> bool { return !incomplete && mismatches == 0 && assertion_failures == 0; }
  // `suite <id> pass|fail <instances> <mismatches>`, with assertion failures counted as mismatches.
  auto summary() const -> std::string;
};

void print_report(std::ostream& out, const EquivalenceReport& r);

// prop1 thm7 cor3 lem7 cor8 cor9 flaw prop10 prop12 thm13 appA faik hitset
auto suite_ids() -> const std::vector<std::string>&;
// Runs one suite, or every suite for "all" (followed by a coverage report).
auto run_suite(const std::string& id, const SuiteOptions& options) -> std::vector<EquivalenceReport>;

struct MutationInfo {
  std::string reduction;  // prop1 thm7 cor3 lem7 cor9 prop10 prop12 thm13 appA fmps
  std::string suite;
  std::string name;
  std::string description;
};
auto registered_mutations() -> const std::vector<MutationInfo>&;

void reset_coverage();
void mark_used(std::string_view component);
// Solvers and builders that no suite has touched since the last reset.
auto missing_coverage() -> std::vector<std::string>;

struct FaikReport {
  std::size_t colorings = 0;  // proper 3-colorings examined
  std::size_t b_colorings = 0;
  std::size_t violations = 0;
  std::optional<Coloring> witness;
};
// Pre: b has diameter at most 3 (InputError otherwise).
auto faik_check(const BipartiteGraph& b) -> FaikReport;

struct Cor8Record {
  std::size_t diameter = 0;
  bool surjective = false;
  bool compaction = false;
  bool gated = false;  // diameter <= 4, so agreement is required
  auto ok() const -> bool { return !gated || surjective == compaction; }
};
auto cor8_check(const BipartiteGraph& b) -> Cor8Record;

// Threads requested through CHROMATIC_THREADS (0 when unset).
auto threads_from_env() -> unsigned;

}  // namespace chromatic::verify
