#pragma once

#include "flood/flood_state.hpp"
#include "flood/graph.hpp"

namespace flood {

/// Fewest monochromatic regions met by any path of cells from the left
/// edge to the right edge of the board.
int min_crossing_regions(const Board& board);

/// Same count for a position reached from `board` (the state's originals
/// must be the board's cells).
int min_crossing_regions(const FloodState& state, const Board& board);

}  // namespace flood
