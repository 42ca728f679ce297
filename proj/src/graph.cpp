#include "flood/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "flood/error.hpp"

namespace flood {

ColouredGraph::ColouredGraph(int colour_count, std::vector<ColourId> colours, std::vector<Edge> edges)
    : colour_count_(colour_count), colours_(std::move(colours)) {
  if (colour_count_ < 1 || colour_count_ > kMaxColours)
    throw InvalidArgument("colour count must be in [1, " + std::to_string(kMaxColours) + "]");
  for (std::size_t v = 0; v < colours_.size(); ++v) {
    if (!valid_colour(colours_[v]))
      throw InvalidArgument("vertex " + std::to_string(v) + " has colour outside the colour set");
  }
  const auto n = static_cast<VertexId>(colours_.size());
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidArgument("duplicate edge");
  edges_ = std::move(edges);

  adjacency_.assign(colours_.size(), {});
  for (const auto& [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<int> ColouredGraph::distances_from(VertexId source) const {
  std::vector<int> dist(colours_.size(), -1);
  std::deque<VertexId> queue{source};
  dist.at(static_cast<std::size_t>(source)) = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : adjacency_[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool ColouredGraph::is_connected() const {
  if (colours_.empty()) return true;
  const auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool ColouredGraph::is_proper() const {
  return std::none_of(edges_.begin(), edges_.end(), [this](const Edge& e) {
    return colours_[static_cast<std::size_t>(e.first)] == colours_[static_cast<std::size_t>(e.second)];
  });
}

int ColouredGraph::colours_present() const {
  std::vector<bool> seen(static_cast<std::size_t>(colour_count_), false);
  int count = 0;
  for (ColourId c : colours_) {
    if (!seen[static_cast<std::size_t>(c.value)]) {
      seen[static_cast<std::size_t>(c.value)] = true;
      ++count;
    }
  }
  return count;
}

Board::Board(int height, int width, int colour_count, std::vector<ColourId> cells)
    : height_(height), width_(width), colour_count_(colour_count), cells_(std::move(cells)) {
  if (height_ < 1 || width_ < 1) throw InvalidArgument("board dimensions must be at least 1x1");
  if (colour_count_ < 1 || colour_count_ > kMaxColours)
    throw InvalidArgument("colour count must be in [1, " + std::to_string(kMaxColours) + "]");
  if (cells_.size() != static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_))
    throw InvalidArgument("board has " + std::to_string(cells_.size()) + " cells, expected " +
                          std::to_string(height_ * width_));
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].value < 0 || cells_[i].value >= colour_count_)
      throw InvalidArgument("cell " + std::to_string(i) + " has colour outside the colour set");
  }
}

ColouredGraph Board::cell_graph() const {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * cell_count()));
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      if (c + 1 < width_) edges.emplace_back(cell_id(r, c), cell_id(r, c + 1));
      if (r + 1 < height_) edges.emplace_back(cell_id(r, c), cell_id(r + 1, c));
    }
  }
  return ColouredGraph(colour_count_, cells_, std::move(edges));
}

}  // namespace flood
