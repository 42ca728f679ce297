#include "flood/poly_solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "flood/connection_table.hpp"
#include "flood/error.hpp"
#include "flood/flood_state.hpp"

namespace flood {

TwoColourResult solve_two_colour(const ColouredGraph& graph) {
  if (graph.vertex_count() == 0) throw InvalidArgument("graph has no vertices");
  if (!graph.is_connected()) throw DisconnectedGraph();
  if (graph.colours_present() > 2) throw InvalidArgument("more than two colours present");

  const auto [contracted, partition] = contract_monochromatic(graph);
  TwoColourResult result;
  result.optimum = contracted.vertex_count();
  VertexId centre = 0;
  for (VertexId v = 0; v < contracted.vertex_count(); ++v) {
    const auto dist = contracted.distances_from(v);
    const int eccentricity = *std::max_element(dist.begin(), dist.end());
    if (eccentricity < result.optimum) {
      result.optimum = eccentricity;
      centre = v;
    }
  }
  result.centre = partition.representative(static_cast<std::size_t>(centre));

  if (result.optimum > 0) {
    // Two colours are present, so each move flips the centre to the other one.
    const ColourId own = contracted.colour(centre);
    const ColourId other = contracted.colour(contracted.neighbours(centre).front());
    for (int i = 0; i < result.optimum; ++i)
      result.witness.push_back(Move::at(result.centre, i % 2 == 0 ? other : own));
  }
  return result;
}

int solve_path(std::span<const ColourId> colours, std::optional<ColourId> target, int colour_count) {
  if (colours.empty()) throw InvalidArgument("path has no vertices");
  int width = colour_count;
  for (ColourId c : colours) {
    if (c.value < 0) throw InvalidArgument("negative colour");
    width = std::max(width, c.value + 1);
  }
  if (target) width = std::max(width, target->value + 1);

  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < static_cast<VertexId>(colours.size()); ++v) edges.emplace_back(v, v + 1);
  const auto [path, partition] =
      contract_monochromatic(ColouredGraph(width, {colours.begin(), colours.end()}, std::move(edges)));

  // Flooding a path is the same as linking its two ends.
  const ConnectionTable table = compute_table(path);
  const VertexId first = partition.owner.front();
  const VertexId last = partition.owner.back();
  return target ? query_link(table, first, last, *target) : query_link_any(table, first, last).first;
}

namespace {

// A first move that lowers m(u, v) by one always exists: the first move of
// any optimal linking sequence does. Only regions x with m(u,x,d) and
// m(x,v,d) both within the current cost for an optimal colour d can host it,
// since every move of an optimal sequence lands on the final linking path.
std::vector<Move> link_witness(FloodState& state, VertexId cell_u, VertexId cell_v) {
  std::vector<Move> moves;
  while (state.region_of(cell_u) != state.region_of(cell_v)) {
    const ColouredGraph& g = state.graph();
    const ConnectionTable table = compute_table(g);
    const VertexId u = state.region_of(cell_u);
    const VertexId v = state.region_of(cell_v);
    const int cost = query_link_any(table, u, v).first;

    auto on_some_optimal_path = [&](VertexId x) {
      for (int d = 0; d < g.colour_count(); ++d) {
        const ColourId colour{d};
        if (table.at(u, v, colour) == cost && table.at(u, x, colour) <= cost && table.at(x, v, colour) <= cost)
          return true;
      }
      return false;
    };

    bool advanced = false;
    for (VertexId x = 0; !advanced && x < g.vertex_count(); ++x) {
      if (!on_some_optimal_path(x)) continue;
      for (int d = 0; !advanced && d < g.colour_count(); ++d) {
        if (g.colour(x).value == d) continue;
        FloodState next = state.recoloured(x, ColourId{d});
        const VertexId nu = next.region_of(cell_u);
        const VertexId nv = next.region_of(cell_v);
        const int next_cost = nu == nv ? 0 : query_link_any(compute_table(next.graph()), nu, nv).first;
        if (next_cost == cost - 1) {
          moves.push_back(Move::at(state.representative(x), ColourId{d}));
          state = std::move(next);
          advanced = true;
        }
      }
    }
    if (!advanced) throw std::logic_error("no move lowers the link cost");
  }
  return moves;
}

}  // namespace

ApproxResult approx_board(const Board& board) {
  const VertexId cell_u = board.cell_id(0, 0);
  const VertexId cell_v = board.cell_id(0, board.width() - 1);

  FloodState state = FloodState::from_board(board);
  ApproxResult result;
  {
    const ConnectionTable table = compute_table(state.graph());
    result.lower = query_link_any(table, state.region_of(cell_u), state.region_of(cell_v)).first;
  }
  result.upper = result.lower + board.colour_count() * (board.height() - 1);
  result.witness = link_witness(state, cell_u, cell_v);

  // The linked component meets every column, so each pass through the
  // colours absorbs at least one more cell of every column. Colours that
  // would absorb nothing are skipped; the bound only needs the absorbing ones.
  for (int pass = 0; pass < board.height() - 1 && !state.is_flooded(); ++pass) {
    for (int d = 0; d < board.colour_count() && !state.is_flooded(); ++d) {
      const VertexId home = state.region_of(cell_u);
      const auto around = state.graph().neighbours(home);
      const bool absorbs = std::any_of(around.begin(), around.end(),
                                       [&](VertexId w) { return state.graph().colour(w).value == d; });
      if (!absorbs) continue;
      result.witness.push_back(Move::at(cell_u, ColourId{d}));
      state = state.recoloured(home, ColourId{d});
    }
  }
  if (!state.is_flooded()) throw std::logic_error("colour cycling left the board unflooded");
  return result;
}

}  // namespace flood
