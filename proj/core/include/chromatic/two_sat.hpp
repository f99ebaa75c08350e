#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace chromatic {

// 2-CNF satisfiability through the implication graph and its strongly connected components.
class TwoSat {
 public:
  explicit TwoSat(std::size_t variables) : graph_(2 * variables) {}

  // Adds the clause (x_a == va) or (x_b == vb).
  void add_clause(std::size_t a, bool va, std::size_t b, bool vb);
  auto solve() const -> std::optional<std::vector<bool>>;

 private:
  static auto node(std::size_t var, bool value) -> std::size_t { return 2 * var + (value ? 0 : 1); }

  std::vector<std::vector<std::size_t>> graph_;
};

}  // namespace chromatic
