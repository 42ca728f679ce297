#include "flood/flood_state.hpp"

#include <algorithm>
#include <string>

#include "flood/error.hpp"

namespace flood {

std::pair<ColouredGraph, RegionPartition> contract_monochromatic(const ColouredGraph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  RegionPartition partition;
  partition.owner.assign(n, -1);

  // Scanning originals in ascending order makes each region's discovery
  // vertex its smallest member, so regions come out sorted by representative.
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < graph.vertex_count(); ++start) {
    if (partition.owner[static_cast<std::size_t>(start)] >= 0) continue;
    const auto index = static_cast<VertexId>(partition.regions.size());
    RegionPartition::Region region{graph.colour(start), {}};
    partition.owner[static_cast<std::size_t>(start)] = index;
    stack.assign(1, start);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      region.members.push_back(u);
      for (VertexId w : graph.neighbours(u)) {
        if (partition.owner[static_cast<std::size_t>(w)] < 0 && graph.colour(w) == region.colour) {
          partition.owner[static_cast<std::size_t>(w)] = index;
          stack.push_back(w);
        }
      }
    }
    std::sort(region.members.begin(), region.members.end());
    partition.regions.push_back(std::move(region));
  }

  std::vector<Edge> edges;
  for (const auto& [u, v] : graph.edges()) {
    VertexId a = partition.owner[static_cast<std::size_t>(u)];
    VertexId b = partition.owner[static_cast<std::size_t>(v)];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<ColourId> colours;
  colours.reserve(partition.regions.size());
  for (const auto& region : partition.regions) colours.push_back(region.colour);

  return {ColouredGraph(graph.colour_count(), std::move(colours), std::move(edges)), std::move(partition)};
}

std::pair<ColouredGraph, RegionPartition> board_to_graph(const Board& board) {
  return contract_monochromatic(board.cell_graph());
}

FloodState FloodState::from_graph(ColouredGraph graph) {
  FloodState state;
  auto [contracted, partition] = contract_monochromatic(graph);
  state.original_ = std::make_shared<const ColouredGraph>(std::move(graph));
  state.current_ = std::move(contracted);
  state.region_map_ = std::move(partition.owner);
  state.representatives_.reserve(partition.regions.size());
  for (const auto& region : partition.regions) state.representatives_.push_back(region.members.front());
  return state;
}

FloodState FloodState::from_board(const Board& board) { return from_graph(board.cell_graph()); }

VertexId FloodState::region_of(VertexId x) const {
  if (x < 0 || x >= original_count())
    throw InvalidArgument("vertex " + std::to_string(x) + " out of range");
  return region_map_[static_cast<std::size_t>(x)];
}

std::vector<ColourId> FloodState::original_colouring() const {
  std::vector<ColourId> colours;
  colours.reserve(region_map_.size());
  for (VertexId r : region_map_) colours.push_back(current_.colour(r));
  return colours;
}

FloodState FloodState::recoloured(VertexId region, ColourId colour) const {
  std::vector<ColourId> colours(current_.colours().begin(), current_.colours().end());
  colours.at(static_cast<std::size_t>(region)) = colour;
  std::vector<Edge> edges(current_.edges().begin(), current_.edges().end());
  auto [contracted, partition] =
      contract_monochromatic(ColouredGraph(current_.colour_count(), std::move(colours), std::move(edges)));

  FloodState next;
  next.original_ = original_;
  next.current_ = std::move(contracted);
  next.moves_played_ = moves_played_ + 1;
  next.region_map_.reserve(region_map_.size());
  for (VertexId r : region_map_) next.region_map_.push_back(partition.owner[static_cast<std::size_t>(r)]);
  // Regions are ordered by their smallest current vertex, and current
  // vertices are ordered by representative, so the first member carries
  // the smallest original id.
  next.representatives_.reserve(partition.regions.size());
  for (const auto& merged : partition.regions)
    next.representatives_.push_back(representatives_[static_cast<std::size_t>(merged.members.front())]);
  return next;
}

bool operator==(const FloodState& a, const FloodState& b) {
  return a.moves_played_ == b.moves_played_ && a.region_map_ == b.region_map_ && a.current_ == b.current_ &&
         a.representatives_ == b.representatives_ &&
         (a.original_ == b.original_ || *a.original_ == *b.original_);
}

namespace {

void check_colour(const FloodState& state, ColourId colour) {
  if (!state.graph().valid_colour(colour))
    throw InvalidArgument("colour " + std::to_string(colour.value) + " outside the colour set");
}

}  // namespace

FloodState apply_free_move(const FloodState& state, const Move& move) {
  if (!move.vertex) throw InvalidArgument("free move needs a vertex");
  check_colour(state, move.colour);
  return state.recoloured(state.region_of(*move.vertex), move.colour);
}

FloodState apply_fixed_move(const FloodState& state, VertexId pivot, ColourId colour) {
  check_colour(state, colour);
  return state.recoloured(state.region_of(pivot), colour);
}

FloodState apply_sequence(const FloodState& state, std::span<const Move> moves, std::optional<VertexId> pivot) {
  FloodState current = state;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& move = moves[i];
    try {
      if (move.vertex) {
        current = apply_free_move(current, move);
      } else if (pivot) {
        current = apply_fixed_move(current, *pivot, move.colour);
      } else {
        throw InvalidArgument("move has no vertex and no pivot was given");
      }
    } catch (const InvalidArgument& e) {
      throw InvalidMove(i, e.what());
    }
  }
  return current;
}

bool is_linked(const FloodState& state, std::span<const VertexId> originals) {
  if (originals.empty()) return true;
  const VertexId first = state.region_of(originals.front());
  return std::all_of(originals.begin(), originals.end(),
                     [&](VertexId x) { return state.region_of(x) == first; });
}

}  // namespace flood
