#pragma once

#include <optional>
#include <span>
#include <vector>

#include "flood/graph.hpp"

namespace flood {

struct TwoColourResult {
  int optimum = 0;
  /// Input vertex of minimum eccentricity (smallest id on ties).
  VertexId centre = 0;
  /// `optimum` moves, all played at `centre`.
  std::vector<Move> witness;
};

/// Free flooding with at most two colours present: the optimum is the
/// radius of the contracted graph, reached by always playing at a centre.
/// Throws DisconnectedGraph, or InvalidArgument when more than two colours
/// are present.
TwoColourResult solve_two_colour(const ColouredGraph& graph);

/// m(P) for the path coloured `colours` (or m(P, target)). Adjacent equal
/// colours are contracted first. `colour_count` widens the colour set
/// beyond the largest colour seen. Throws InvalidArgument on empty input.
int solve_path(std::span<const ColourId> colours, std::optional<ColourId> target = std::nullopt,
               int colour_count = 0);

struct ApproxResult {
  /// m(u, v) for u the region of the top-left cell and v the region of the
  /// top-right cell.
  int lower = 0;
  /// lower + c(k - 1)
  int upper = 0;
  /// Links u and v optimally, then cycles the colours at that component.
  /// Replays to a flooded board in at most `upper` moves.
  std::vector<Move> witness;
};

/// Additive approximation for a k x n board: lower <= m(B) <= upper.
ApproxResult approx_board(const Board& board);

}  // namespace flood
