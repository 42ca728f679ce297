#include "flood/random.hpp"

#include "flood/error.hpp"

namespace flood::random {

Board random_board(int height, int width, int colours, std::uint64_t seed) {
  if (height < 1 || width < 1) throw InvalidArgument("board dimensions must be at least 1x1");
  if (colours < 1 || colours > kMaxColours) throw InvalidArgument("colour count out of range");
  Rng rng(seed);
  std::vector<ColourId> cells;
  cells.reserve(static_cast<std::size_t>(height) * static_cast<std::size_t>(width));
  for (int i = 0; i < height * width; ++i)
    cells.push_back(ColourId{static_cast<int>(below(rng, static_cast<std::uint64_t>(colours)))});
  return Board(height, width, colours, std::move(cells));
}

namespace {

std::vector<Edge> random_edges(Rng& rng, int vertices, int extra_edge_percent,
                               const std::vector<int>* side = nullptr) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> present(static_cast<std::size_t>(vertices),
                                         std::vector<bool>(static_cast<std::size_t>(vertices), false));
  auto add = [&](VertexId a, VertexId b) {
    edges.emplace_back(a, b);
    present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    present[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
  };
  for (VertexId v = 1; v < vertices; ++v) {
    VertexId parent = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(v)));
    if (side) {
      // Walk down to an earlier vertex on the other side; vertex 0 and 1
      // are on opposite sides by construction.
      while ((*side)[static_cast<std::size_t>(parent)] == (*side)[static_cast<std::size_t>(v)]) parent = (parent + 1) % v;
    }
    add(parent, v);
  }
  for (VertexId a = 0; a < vertices; ++a) {
    for (VertexId b = a + 1; b < vertices; ++b) {
      if (present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
      if (side && (*side)[static_cast<std::size_t>(a)] == (*side)[static_cast<std::size_t>(b)]) continue;
      if (below(rng, 100) < static_cast<std::uint64_t>(extra_edge_percent)) add(a, b);
    }
  }
  return edges;
}

}  // namespace

ColouredGraph random_connected_graph(Rng& rng, int vertices, int colours, int extra_edge_percent) {
  if (vertices < 1) throw InvalidArgument("need at least one vertex");
  auto edges = random_edges(rng, vertices, extra_edge_percent);
  std::vector<ColourId> colouring;
  for (int v = 0; v < vertices; ++v)
    colouring.push_back(ColourId{static_cast<int>(below(rng, static_cast<std::uint64_t>(colours)))});
  return ColouredGraph(colours, std::move(colouring), std::move(edges));
}

ColouredGraph random_two_coloured_graph(Rng& rng, int vertices, int extra_edge_percent) {
  if (vertices < 1) throw InvalidArgument("need at least one vertex");
  std::vector<int> side(static_cast<std::size_t>(vertices));
  for (int v = 0; v < vertices; ++v) side[static_cast<std::size_t>(v)] = v < 2 ? v : static_cast<int>(below(rng, 2));
  auto edges = random_edges(rng, vertices, extra_edge_percent, &side);
  std::vector<ColourId> colouring;
  for (int s : side) colouring.push_back(ColourId{s});
  return ColouredGraph(2, std::move(colouring), std::move(edges));
}

}  // namespace flood::random
