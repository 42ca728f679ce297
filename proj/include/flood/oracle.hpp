#pragma once

// Brute-force exact solvers. These are ground truth for the polynomial
// algorithms and are meant for desk-scale inputs only (roughly 14 regions
// for the free variant, 3x25 boards for the fixed variant).

#include <optional>
#include <vector>

#include "flood/graph.hpp"

namespace flood::oracle {

inline constexpr int kDefaultBudget = 32;

struct SolveResult {
  int optimum = 0;
  /// Replays to the goal in exactly `optimum` moves. Free-variant moves
  /// name the smallest vertex of the component they are played in;
  /// fixed-variant moves carry no vertex.
  std::vector<Move> witness;
  /// Colour of the goal component (the flood colour, or the link colour).
  std::optional<ColourId> target_colour;
};

/// m(G, w, target), or m(G, w) when `target` is empty. Among optimal
/// sequences the witness is lexicographically smallest in (vertex, colour).
/// Throws DisconnectedGraph, or BudgetExceeded if no solution of at most
/// `budget` moves exists.
SolveResult solve_free_exact(const ColouredGraph& graph, std::optional<ColourId> target = std::nullopt,
                             int budget = kDefaultBudget);

/// Minimum number of moves to flood when every move is played at `pivot`.
SolveResult solve_fixed_exact(const ColouredGraph& graph, VertexId pivot, int budget = kDefaultBudget);

/// m(u, v, d), or m(u, v) when `colour` is empty: moves until u and v
/// share a monochromatic component (of colour d).
SolveResult link_exact(const ColouredGraph& graph, VertexId u, VertexId v,
                       std::optional<ColourId> colour = std::nullopt, int budget = kDefaultBudget);

/// Every m(u, v, d) from one breadth-first sweep of the state space.
class LinkCosts {
 public:
  LinkCosts(int vertex_count, int colour_count, std::vector<int> values)
      : n_(vertex_count), c_(colour_count), values_(std::move(values)) {}

  int vertex_count() const noexcept { return n_; }
  int colour_count() const noexcept { return c_; }
  int at(VertexId u, VertexId v, ColourId d) const {
    return values_.at((static_cast<std::size_t>(d.value) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u)) *
                          static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(v));
  }

 private:
  int n_;
  int c_;
  std::vector<int> values_;
};

/// Throws BudgetExceeded if some triple needs more than `budget` moves.
LinkCosts link_exact_all(const ColouredGraph& graph, int budget = kDefaultBudget);

}  // namespace flood::oracle
