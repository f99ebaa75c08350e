#include "chromatic/two_sat.hpp"

#include <algorithm>
#include <limits>

namespace chromatic {

void TwoSat::add_clause(std::size_t a, bool va, std::size_t b, bool vb) {
  graph_[node(a, !va)].push_back(node(b, vb));
  graph_[node(b, !vb)].push_back(node(a, va));
}

auto TwoSat::solve() const -> std::optional<std::vector<bool>> {
  constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = graph_.size();
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> calls;
  std::size_t counter = 0, components = 0;

  // Iterative Tarjan; components are numbered in reverse topological order.
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    calls.push_back({root, 0});
    while (!calls.empty()) {
      auto& [v, next] = calls.back();
      if (next == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (next < graph_[v].size()) {
        std::size_t w = graph_[v][next++];
        if (index[w] == unvisited) {
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      std::size_t done = v;
      calls.pop_back();
      if (!calls.empty()) low[calls.back().first] = std::min(low[calls.back().first], low[done]);
    }
  }

  std::vector<bool> value(n / 2);
  for (std::size_t var = 0; var < n / 2; ++var) {
    if (comp[node(var, true)] == comp[node(var, false)]) return std::nullopt;
    value[var] = comp[node(var, true)] < comp[node(var, false)];
  }
  return value;
}

}  // namespace chromatic
