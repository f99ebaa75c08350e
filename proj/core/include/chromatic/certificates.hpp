#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chromatic/graph.hpp"

namespace chromatic {

using Color = std::int32_t;

struct ListAssignment {
  std::vector<std::vector<Color>> lists;

  auto operator[](Vertex v) const -> const std::vector<Color>& { return lists[v]; }
  auto size() const -> std::size_t { return lists.size(); }
  static auto full(std::size_t n, Color k) -> ListAssignment;
  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

struct PartialColoring {
  std::map<Vertex, Color> assigned;

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;
};

struct Coloring {
  std::vector<Color> colors;

  auto operator[](Vertex v) const -> Color { return colors[v]; }
  auto size() const -> std::size_t { return colors.size(); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct VertexMapping {
  std::vector<Vertex> image;

  auto operator[](Vertex v) const -> Vertex { return image[v]; }
  auto size() const -> std::size_t { return image.size(); }
  friend bool operator==(const VertexMapping&, const VertexMapping&) = default;
};

struct BicliquePartition {
  std::vector<std::vector<Vertex>> blocks;

  friend bool operator==(const BicliquePartition&, const BicliquePartition&) = default;
};

// Allowed target vertices per source vertex; an empty outer vector means unrestricted.
using HomLists = std::vector<std::vector<Vertex>>;

}  // namespace chromatic
