#include "flood/board_paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "flood/error.hpp"

namespace flood {

int min_crossing_regions(const FloodState& state, const Board& board) {
  if (state.original_count() != board.cell_count()) throw InvalidArgument("state does not belong to this board");
  const ColouredGraph& g = state.graph();
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<VertexId> queue;
  for (int r = 0; r < board.height(); ++r) {
    const VertexId v = state.region_of(board.cell_id(r, 0));
    if (dist[static_cast<std::size_t>(v)] < 0) {
      dist[static_cast<std::size_t>(v)] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbours(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  int best = std::numeric_limits<int>::max();
  for (int r = 0; r < board.height(); ++r)
    best = std::min(best, dist[static_cast<std::size_t>(state.region_of(board.cell_id(r, board.width() - 1)))]);
  return best;
}

int min_crossing_regions(const Board& board) { return min_crossing_regions(FloodState::from_board(board), board); }

}  // namespace flood
