#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flood/graph.hpp"

namespace flood {

/// Monochromatic components of a colouring, ordered by their smallest
/// member. `owner[x]` is the component index holding original vertex x.
struct RegionPartition {
  struct Region {
    ColourId colour;
    std::vector<VertexId> members;  // sorted; members.front() is the representative
  };

  std::vector<Region> regions;
  std::vector<VertexId> owner;

  std::size_t size() const noexcept { return regions.size(); }
  VertexId representative(std::size_t region) const { return regions.at(region).members.front(); }

  friend bool operator==(const RegionPartition&, const RegionPartition&) = default;
};

/// Contract every monochromatic component to one vertex. The result is
/// properly coloured; vertex i of the result is partition.regions[i].
std::pair<ColouredGraph, RegionPartition> contract_monochromatic(const ColouredGraph& graph);

/// Regions of a board under 4-adjacency and the contracted region graph.
std::pair<ColouredGraph, RegionPartition> board_to_graph(const Board& board);

/// A game position: the original arena, its current contracted graph and
/// the map from original vertices (board cells) to current vertices.
///
/// Current vertices are numbered by ascending representative, where a
/// representative is the smallest original id in the component. States are
/// immutable values; moves return new states.
class FloodState {
 public:
  /// Start a game on `graph`; improper colourings are contracted here.
  static FloodState from_graph(ColouredGraph graph);
  static FloodState from_board(const Board& board);

  const ColouredGraph& original() const noexcept { return *original_; }
  const ColouredGraph& graph() const noexcept { return current_; }
  std::span<const VertexId> region_map() const noexcept { return region_map_; }
  int moves_played() const noexcept { return moves_played_; }

  int original_count() const noexcept { return original_->vertex_count(); }
  int region_count() const noexcept { return current_.vertex_count(); }
  bool is_flooded() const noexcept { return current_.vertex_count() <= 1; }

  /// Current vertex holding original vertex `x`; throws on a bad id.
  VertexId region_of(VertexId x) const;
  /// Smallest original id inside current vertex `v`.
  VertexId representative(VertexId v) const { return representatives_.at(static_cast<std::size_t>(v)); }
  ColourId colour_of_original(VertexId x) const { return current_.colour(region_of(x)); }
  /// Current colour of every original vertex.
  std::vector<ColourId> original_colouring() const;

  /// Recolour `region` (a current vertex) and re-contract. Validation is
  /// the caller's job; the public entry points are the free functions below.
  FloodState recoloured(VertexId region, ColourId colour) const;

  friend bool operator==(const FloodState& a, const FloodState& b);

 private:
  FloodState() = default;

  std::shared_ptr<const ColouredGraph> original_;
  ColouredGraph current_;
  std::vector<VertexId> region_map_;
  std::vector<VertexId> representatives_;
  int moves_played_ = 0;
};

/// Play `move` anywhere. Throws InvalidArgument on a missing or bad vertex
/// or a colour outside the colour set.
FloodState apply_free_move(const FloodState& state, const Move& move);

/// Play `colour` at the component currently holding original vertex `pivot`.
FloodState apply_fixed_move(const FloodState& state, VertexId pivot, ColourId colour);

/// Fold of single moves. Moves without a vertex are played at `pivot`;
/// the first invalid move throws InvalidMove carrying its index.
FloodState apply_sequence(const FloodState& state, std::span<const Move> moves,
                          std::optional<VertexId> pivot = std::nullopt);

/// True iff every listed original vertex sits in one monochromatic component.
bool is_linked(const FloodState& state, std::span<const VertexId> originals);

}  // namespace flood
