#include "flood/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "flood/error.hpp"

namespace flood::oracle {

namespace {

// Search state for the free variant: the colour of every input vertex,
// one byte each. Components are re-derived on demand, so two move
// orders reaching the same colouring share one key.
using Colouring = std::string;

struct Components {
  std::vector<int> of;            // vertex -> component index
  std::vector<VertexId> rep;      // component -> smallest vertex
  std::vector<unsigned char> colour;
  std::vector<std::vector<int>> adjacent;  // contracted adjacency
};

class FreeArena {
 public:
  explicit FreeArena(const ColouredGraph& graph) : graph_(graph) {}

  Colouring initial() const {
    Colouring s(static_cast<std::size_t>(graph_.vertex_count()), '\0');
    for (VertexId v = 0; v < graph_.vertex_count(); ++v)
      s[static_cast<std::size_t>(v)] = static_cast<char>(graph_.colour(v).value);
    return s;
  }

  Components components(const Colouring& s) const {
    const auto n = static_cast<std::size_t>(graph_.vertex_count());
    Components c;
    c.of.assign(n, -1);
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < graph_.vertex_count(); ++start) {
      if (c.of[static_cast<std::size_t>(start)] >= 0) continue;
      const int index = static_cast<int>(c.rep.size());
      c.rep.push_back(start);
      c.colour.push_back(static_cast<unsigned char>(s[static_cast<std::size_t>(start)]));
      c.of[static_cast<std::size_t>(start)] = index;
      stack.assign(1, start);
      while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : graph_.neighbours(u)) {
          if (c.of[static_cast<std::size_t>(w)] < 0 && s[static_cast<std::size_t>(w)] == s[static_cast<std::size_t>(u)]) {
            c.of[static_cast<std::size_t>(w)] = index;
            stack.push_back(w);
          }
        }
      }
    }
    c.adjacent.assign(c.rep.size(), {});
    for (const auto& [u, v] : graph_.edges()) {
      const int a = c.of[static_cast<std::size_t>(u)];
      const int b = c.of[static_cast<std::size_t>(v)];
      if (a == b) continue;
      c.adjacent[static_cast<std::size_t>(a)].push_back(b);
      c.adjacent[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : c.adjacent) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return c;
  }

  static Colouring recolour(const Colouring& s, const Components& c, int component, int colour) {
    Colouring next = s;
    for (std::size_t v = 0; v < next.size(); ++v) {
      if (c.of[v] == component) next[v] = static_cast<char>(colour);
    }
    return next;
  }

  const ColouredGraph& graph() const noexcept { return graph_; }

 private:
  const ColouredGraph& graph_;
};

std::vector<int> bfs(const Components& c, int source) {
  std::vector<int> dist(c.rep.size(), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : c.adjacent[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Contracting a component together with some neighbours shrinks every
// distance by at most two, and each move retires at most one colour.
int flood_lower_bound(const Components& c, int colour_count, std::optional<ColourId> target) {
  int diameter = 0;
  for (std::size_t i = 0; i < c.rep.size(); ++i) {
    const auto dist = bfs(c, static_cast<int>(i));
    diameter = std::max(diameter, *std::max_element(dist.begin(), dist.end()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(colour_count), false);
  int present = 0;
  for (unsigned char col : c.colour) {
    if (!seen[col]) {
      seen[col] = true;
      ++present;
    }
  }
  int colour_bound = present - 1;
  if (target) colour_bound = present - (seen[static_cast<std::size_t>(target->value)] ? 1 : 0);
  return std::max((diameter + 1) / 2, colour_bound);
}

// Iterative deepening with a per-iteration transposition table. Moves are
// tried in ascending (representative, colour) order, so the first solution
// found at the optimal depth is the lexicographically smallest one.
class FreeSearch {
 public:
  using Goal = std::function<bool(const Components&)>;
  using Bound = std::function<int(const Components&)>;

  FreeSearch(const FreeArena& arena, Goal goal, Bound bound)
      : arena_(arena), goal_(std::move(goal)), bound_(std::move(bound)) {}

  SolveResult run(int budget) {
    const Colouring start = arena_.initial();
    const Components c = arena_.components(start);
    for (int limit = bound_(c); limit <= budget; ++limit) {
      seen_.clear();
      path_.clear();
      if (dfs(start, 0, limit)) {
        SolveResult result;
        result.optimum = static_cast<int>(path_.size());
        result.witness = path_;
        return result;
      }
    }
    throw BudgetExceeded(budget);
  }

 private:
  bool dfs(const Colouring& s, int depth, int limit) {
    const Components c = arena_.components(s);
    if (goal_(c)) return true;
    if (depth + bound_(c) > limit) return false;
    auto [it, inserted] = seen_.try_emplace(s, depth);
    if (!inserted) {
      if (it->second <= depth) return false;
      it->second = depth;
    }
    const int colours = arena_.graph().colour_count();
    for (std::size_t comp = 0; comp < c.rep.size(); ++comp) {
      for (int colour = 0; colour < colours; ++colour) {
        if (colour == c.colour[comp]) continue;
        path_.push_back(Move::at(c.rep[comp], ColourId{colour}));
        if (dfs(FreeArena::recolour(s, c, static_cast<int>(comp), colour), depth + 1, limit)) return true;
        path_.pop_back();
      }
    }
    return false;
  }

  const FreeArena& arena_;
  Goal goal_;
  Bound bound_;
  std::unordered_map<Colouring, int> seen_;
  std::vector<Move> path_;
};

void require_connected(const ColouredGraph& graph) {
  if (graph.vertex_count() == 0) throw InvalidArgument("graph has no vertices");
  if (!graph.is_connected()) throw DisconnectedGraph();
}

void require_vertex(const ColouredGraph& graph, VertexId v) {
  if (!graph.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

SolveResult solve_free_exact(const ColouredGraph& graph, std::optional<ColourId> target, int budget) {
  require_connected(graph);
  if (target && !graph.valid_colour(*target)) throw InvalidArgument("target colour outside the colour set");
  const FreeArena arena(graph);
  const int colours = graph.colour_count();
  FreeSearch search(
      arena,
      [target](const Components& c) {
        return c.rep.size() == 1 && (!target || c.colour[0] == target->value);
      },
      [colours, target](const Components& c) { return flood_lower_bound(c, colours, target); });
  SolveResult result = search.run(budget);
  if (target) {
    result.target_colour = target;
  } else if (!result.witness.empty()) {
    result.target_colour = result.witness.back().colour;
  } else {
    result.target_colour = graph.colour(0);
  }
  return result;
}

SolveResult link_exact(const ColouredGraph& graph, VertexId u, VertexId v, std::optional<ColourId> colour, int budget) {
  require_connected(graph);
  require_vertex(graph, u);
  require_vertex(graph, v);
  if (colour && !graph.valid_colour(*colour)) throw InvalidArgument("colour outside the colour set");
  const FreeArena arena(graph);
  const auto su = static_cast<std::size_t>(u);
  const auto sv = static_cast<std::size_t>(v);
  FreeSearch search(
      arena,
      [=](const Components& c) {
        return c.of[su] == c.of[sv] && (!colour || c.colour[static_cast<std::size_t>(c.of[su])] == colour->value);
      },
      [=](const Components& c) {
        const int gap = bfs(c, c.of[su])[static_cast<std::size_t>(c.of[sv])];
        if (gap == 0) return (colour && c.colour[static_cast<std::size_t>(c.of[su])] != colour->value) ? 1 : 0;
        return (gap + 1) / 2;
      });
  SolveResult result = search.run(budget);
  // Recover the colour of the linking component by replaying the witness.
  Colouring s = arena.initial();
  for (const Move& m : result.witness) {
    const Components c = arena.components(s);
    s = FreeArena::recolour(s, c, c.of[static_cast<std::size_t>(*m.vertex)], m.colour.value);
  }
  result.target_colour = ColourId{static_cast<unsigned char>(s[su])};
  if (colour) result.target_colour = colour;
  return result;
}

LinkCosts link_exact_all(const ColouredGraph& graph, int budget) {
  require_connected(graph);
  const FreeArena arena(graph);
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  const int colours = graph.colour_count();
  std::vector<int> values(static_cast<std::size_t>(colours) * n * n, -1);
  std::size_t unresolved = values.size();

  auto record = [&](const Colouring& s, int depth) {
    const Components c = arena.components(s);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t base = static_cast<std::size_t>(c.colour[static_cast<std::size_t>(c.of[a])]) * n * n + a * n;
      for (std::size_t b = 0; b < n; ++b) {
        if (c.of[a] == c.of[b] && values[base + b] < 0) {
          values[base + b] = depth;
          --unresolved;
        }
      }
    }
    return c;
  };

  std::unordered_set<Colouring> visited;
  std::vector<Colouring> frontier{arena.initial()};
  visited.insert(frontier.front());
  for (int depth = 0; !frontier.empty() && unresolved > 0; ++depth) {
    if (depth > budget) throw BudgetExceeded(budget);
    std::vector<Colouring> next;
    for (const Colouring& s : frontier) {
      const Components c = record(s, depth);
      if (unresolved == 0) break;
      for (std::size_t comp = 0; comp < c.rep.size(); ++comp) {
        for (int colour = 0; colour < colours; ++colour) {
          if (colour == c.colour[comp]) continue;
          Colouring t = FreeArena::recolour(s, c, static_cast<int>(comp), colour);
          if (visited.insert(t).second) next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  if (unresolved > 0) throw BudgetExceeded(budget);
  return LinkCosts(graph.vertex_count(), colours, std::move(values));
}

namespace {

// Fixed-variant state: which input vertices the pivot component has
// swallowed, plus its colour. Everything outside keeps its initial colour.
struct FixedState {
  std::vector<bool> flooded;
  int colour = 0;

  std::string key() const {
    std::string k(flooded.size() + 1, '\0');
    for (std::size_t i = 0; i < flooded.size(); ++i) k[i] = flooded[i] ? '\1' : '\0';
    k.back() = static_cast<char>(colour);
    return k;
  }
};

// Grow `flooded` through every vertex of `colour` reachable from it.
// Returns the number of vertices absorbed.
int absorb(const ColouredGraph& graph, std::vector<bool>& flooded, int colour) {
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (flooded[static_cast<std::size_t>(v)]) stack.push_back(v);
  }
  int absorbed = 0;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : graph.neighbours(u)) {
      if (!flooded[static_cast<std::size_t>(w)] && graph.colour(w).value == colour) {
        flooded[static_cast<std::size_t>(w)] = true;
        ++absorbed;
        stack.push_back(w);
      }
    }
  }
  return absorbed;
}

}  // namespace

SolveResult solve_fixed_exact(const ColouredGraph& graph, VertexId pivot, int budget) {
  require_connected(graph);
  require_vertex(graph, pivot);
  const auto n = static_cast<std::size_t>(graph.vertex_count());

  FixedState start{std::vector<bool>(n, false), graph.colour(pivot).value};
  start.flooded[static_cast<std::size_t>(pivot)] = true;
  absorb(graph, start.flooded, start.colour);

  auto done = [](const FixedState& s) { return std::all_of(s.flooded.begin(), s.flooded.end(), [](bool b) { return b; }); };

  // Breadth-first with first-discovery parents: layers are expanded in
  // order and colours ascend, so each state keeps its lexicographically
  // smallest shortest path. Moves that absorb nothing are skipped; such a
  // move never shortens a flooding sequence.
  struct Node {
    FixedState state;
    int parent;
    int colour;
  };
  std::vector<Node> nodes{{start, -1, -1}};
  std::unordered_set<std::string> visited{start.key()};
  std::size_t layer_begin = 0;
  int goal = done(start) ? 0 : -1;
  for (int depth = 0; goal < 0; ++depth) {
    const std::size_t layer_end = nodes.size();
    if (layer_begin == layer_end) throw InvalidArgument("pivot component can never flood the graph");
    if (depth >= budget) throw BudgetExceeded(budget);
    for (std::size_t i = layer_begin; i < layer_end && goal < 0; ++i) {
      for (int colour = 0; colour < graph.colour_count(); ++colour) {
        if (colour == nodes[i].state.colour) continue;
        FixedState next{nodes[i].state.flooded, colour};
        if (absorb(graph, next.flooded, colour) == 0) continue;
        if (!visited.insert(next.key()).second) continue;
        const bool finished = done(next);
        nodes.push_back({std::move(next), static_cast<int>(i), colour});
        if (finished) {
          goal = static_cast<int>(nodes.size()) - 1;
          break;
        }
      }
    }
    layer_begin = layer_end;
  }

  SolveResult result;
  for (int at = goal; nodes[static_cast<std::size_t>(at)].parent >= 0; at = nodes[static_cast<std::size_t>(at)].parent)
    result.witness.push_back(Move::pivot(ColourId{nodes[static_cast<std::size_t>(at)].colour}));
  std::reverse(result.witness.begin(), result.witness.end());
  result.optimum = static_cast<int>(result.witness.size());
  result.target_colour = ColourId{nodes[static_cast<std::size_t>(goal)].state.colour};
  return result;
}

}  // namespace flood::oracle
