#pragma once

// Seeded generators for boards and graphs. Everything draws from
// std::mt19937_64 and maps raw 64-bit outputs with `below` (plain modulo),
// never through std::uniform_int_distribution, so the same seed gives the
// same fixture on every standard library.

#include <cstdint>
#include <random>

#include "flood/graph.hpp"

namespace flood::random {

using Rng = std::mt19937_64;

/// Next output of `rng` reduced modulo `bound` (bound >= 1).
inline std::uint64_t below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

/// Board for `rand-board`: seeds mt19937_64 with `seed`, then draws one
/// output per cell in row-major order; the cell's 0-based colour is that
/// output modulo `colours`.
Board random_board(int height, int width, int colours, std::uint64_t seed);

/// Connected graph: vertex v > 0 attaches to a uniformly drawn earlier
/// vertex, then each remaining pair becomes an edge with probability
/// `extra_edge_percent` / 100. Colours are drawn independently, so the
/// colouring may be improper.
ColouredGraph random_connected_graph(Rng& rng, int vertices, int colours, int extra_edge_percent);

/// Connected bipartite graph properly coloured with colours 0 and 1.
ColouredGraph random_two_coloured_graph(Rng& rng, int vertices, int extra_edge_percent);

}  // namespace flood::random
