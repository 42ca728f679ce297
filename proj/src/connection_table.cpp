#include "flood/connection_table.hpp"

#include <algorithm>
#include <string>

#include "flood/error.hpp"

namespace flood {

ConnectionTable::ConnectionTable(int vertex_count, int colour_count)
    : n_(vertex_count),
      c_(colour_count),
      infinity_(vertex_count * colour_count + 1),
      values_(static_cast<std::size_t>(colour_count) * static_cast<std::size_t>(vertex_count) *
                  static_cast<std::size_t>(vertex_count),
              infinity_) {}

ConnectionTable compute_table(const ColouredGraph& graph, const TableOptions& options) {
  if (graph.vertex_count() == 0) throw InvalidArgument("graph has no vertices");
  if (!graph.is_connected()) throw DisconnectedGraph();
  if (!graph.is_proper()) throw InvalidArgument("colouring is not proper; contract it first");

  const simd::KernelSet& k = options.kernels ? *options.kernels : simd::best_kernels();
  const int n = graph.vertex_count();
  const int colours = graph.colour_count();
  const auto width = static_cast<std::size_t>(n);

  ConnectionTable table(n, colours);
  const std::int32_t inf = table.infinity();
  for (int d = 0; d < colours; ++d) {
    for (VertexId v = 0; v < n; ++v) table.row(ColourId{d}, v)[v] = graph.colour(v).value == d ? 0 : 1;
  }
  if (options.observer) options.observer(table, 0);

  std::vector<Edge> oriented;
  oriented.reserve(2 * graph.edge_count());
  for (const auto& [a, b] : graph.edges()) {
    oriented.emplace_back(a, b);
    oriented.emplace_back(b, a);
  }

  // direct[d][u][v] = min over xx' of m(u,x,d) + m(x',v,d)
  // best[u][v]      = min over d of direct[d][u][v]
  std::vector<std::int32_t> direct(static_cast<std::size_t>(colours) * width * width);
  std::vector<std::int32_t> best(width * width);

  for (int round = 1; round <= n; ++round) {
    std::fill(direct.begin(), direct.end(), inf);
    for (int d = 0; d < colours; ++d) {
      for (VertexId u = 0; u < n; ++u) {
        std::int32_t* out = direct.data() + (static_cast<std::size_t>(d) * width + static_cast<std::size_t>(u)) * width;
        const std::int32_t* from_u = table.row(ColourId{d}, u);
        for (const auto& [x, x2] : oriented) {
          const std::int32_t head = from_u[x];
          if (head >= inf) continue;
          k.min_plus_row(out, table.row(ColourId{d}, x2), head, inf, width);
        }
      }
    }
    std::copy_n(direct.begin(), best.size(), best.begin());
    for (int d = 1; d < colours; ++d)
      k.min_rows(best.data(), direct.data() + static_cast<std::size_t>(d) * width * width, best.size());

    bool changed = false;
    for (int d = 0; d < colours; ++d) {
      for (VertexId u = 0; u < n; ++u) {
        const std::size_t offset = static_cast<std::size_t>(u) * width;
        changed |= k.relax_row(table.row(ColourId{d}, u),
                               direct.data() + static_cast<std::size_t>(d) * width * width + offset,
                               best.data() + offset, inf, width);
      }
    }
    if (!changed) break;
    table.iterations_ = round;
    if (options.observer) options.observer(table, round);
  }
  return table;
}

namespace {

void check_indices(const ConnectionTable& table, VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= table.vertex_count() || v >= table.vertex_count())
    throw InvalidArgument("vertex pair (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
}

}  // namespace

int query_link(const ConnectionTable& table, VertexId u, VertexId v, ColourId d) {
  check_indices(table, u, v);
  if (d.value < 0 || d.value >= table.colour_count())
    throw InvalidArgument("colour " + std::to_string(d.value) + " out of range");
  return table.at(u, v, d);
}

std::pair<int, ColourId> query_link_any(const ConnectionTable& table, VertexId u, VertexId v) {
  check_indices(table, u, v);
  std::pair<int, ColourId> best{table.at(u, v, ColourId{0}), ColourId{0}};
  for (int d = 1; d < table.colour_count(); ++d) {
    const int value = table.at(u, v, ColourId{d});
    if (value < best.first) best = {value, ColourId{d}};
  }
  return best;
}

}  // namespace flood
