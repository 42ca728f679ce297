#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace flood {

using VertexId = std::int32_t;

/// Dense 0-based colour index. External formats use 1-based labels.
struct ColourId {
  int value = 0;

  constexpr ColourId() = default;
  constexpr explicit ColourId(int v) : value(v) {}

  friend constexpr auto operator<=>(ColourId, ColourId) = default;
};

inline constexpr int kMaxColours = 255;

using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple graph with a colour per vertex.
///
/// Edges are stored normalised (u < v) and sorted; adjacency lists are
/// sorted ascending. Construction rejects self-loops, duplicate edges,
/// out-of-range endpoints and colours outside [0, colour_count).
class ColouredGraph {
 public:
  ColouredGraph() = default;
  ColouredGraph(int colour_count, std::vector<ColourId> colours, std::vector<Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(colours_.size()); }
  int colour_count() const noexcept { return colour_count_; }
  ColourId colour(VertexId v) const { return colours_.at(static_cast<std::size_t>(v)); }
  std::span<const ColourId> colours() const noexcept { return colours_; }
  std::span<const VertexId> neighbours(VertexId v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool contains(VertexId v) const noexcept { return v >= 0 && v < vertex_count(); }
  bool valid_colour(ColourId c) const noexcept { return c.value >= 0 && c.value < colour_count_; }

  bool is_connected() const;
  /// No edge joins two vertices of the same colour.
  bool is_proper() const;
  /// Number of distinct colours actually used.
  int colours_present() const;

  /// Breadth-first hop distances from `source`; -1 for unreachable vertices.
  std::vector<int> distances_from(VertexId source) const;

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  int colour_count_ = 1;
  std::vector<ColourId> colours_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// k x n grid of colours, row-major. Cell id = row * width + col.
class Board {
 public:
  Board() = default;
  Board(int height, int width, int colour_count, std::vector<ColourId> cells);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  int colour_count() const noexcept { return colour_count_; }
  int cell_count() const noexcept { return height_ * width_; }
  std::span<const ColourId> cells() const noexcept { return cells_; }

  VertexId cell_id(int row, int col) const noexcept { return row * width_ + col; }
  int row_of(VertexId cell) const noexcept { return cell / width_; }
  int col_of(VertexId cell) const noexcept { return cell % width_; }
  ColourId at(int row, int col) const { return cells_.at(static_cast<std::size_t>(cell_id(row, col))); }

  /// Cell graph under 4-adjacency, before any contraction.
  ColouredGraph cell_graph() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  int height_ = 1;
  int width_ = 1;
  int colour_count_ = 1;
  std::vector<ColourId> cells_{ColourId{0}};
};

/// A flooding move. `vertex` names an original vertex (a board cell for
/// board games) and is absent for fixed-variant moves.
struct Move {
  std::optional<VertexId> vertex;
  ColourId colour;

  static Move at(VertexId v, ColourId c) { return Move{v, c}; }
  static Move pivot(ColourId c) { return Move{std::nullopt, c}; }

  friend bool operator==(const Move&, const Move&) = default;
};

}  // namespace flood

template <>
struct std::hash<flood::ColourId> {
  std::size_t operator()(flood::ColourId c) const noexcept { return std::hash<int>{}(c.value); }
};
