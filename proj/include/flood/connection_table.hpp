#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "flood/graph.hpp"
#include "flood/simd/kernels.hpp"

namespace flood {

struct TableOptions;

/// m(u, v, d) for every vertex pair and colour of a connected, properly
/// coloured graph: the fewest free moves after which u and v lie in one
/// monochromatic component of colour d.
///
/// Storage is colour-major, then u, then v, so that for fixed (d, u) the
/// row over v is contiguous for the vector kernels.
class ConnectionTable {
 public:
  ConnectionTable(int vertex_count, int colour_count);

  int vertex_count() const noexcept { return n_; }
  int colour_count() const noexcept { return c_; }
  /// Sentinel above any achievable value (n * c + 1).
  std::int32_t infinity() const noexcept { return infinity_; }
  /// Rounds of the fixpoint that changed at least one entry.
  int iterations_used() const noexcept { return iterations_; }

  std::int32_t at(VertexId u, VertexId v, ColourId d) const noexcept { return values_[index(u, v, d)]; }
  const std::int32_t* row(ColourId d, VertexId u) const noexcept { return values_.data() + index(u, 0, d); }

  friend bool operator==(const ConnectionTable&, const ConnectionTable&) = default;

 private:
  friend ConnectionTable compute_table(const ColouredGraph&, const TableOptions&);

  std::int32_t* row(ColourId d, VertexId u) noexcept { return values_.data() + index(u, 0, d); }

  std::size_t index(VertexId u, VertexId v, ColourId d) const noexcept {
    return (static_cast<std::size_t>(d.value) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u)) *
               static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  int n_;
  int c_;
  std::int32_t infinity_;
  int iterations_ = 0;
  std::vector<std::int32_t> values_;
};

struct TableOptions {
  /// Defaults to simd::best_kernels().
  const simd::KernelSet* kernels = nullptr;
  /// Called with the table after initialisation (round 0) and after every
  /// round of the fixpoint.
  std::function<void(const ConnectionTable&, int round)> observer;
};

/// Fixpoint of the edge recursion
///   m(u,v,d) = min over oriented edges xx' of
///              min( m(u,x,d) + m(x',v,d),  1 + min_d' [m(u,x,d') + m(x',v,d')] )
/// seeded with m(v,v,d) = 0 if v has colour d and 1 otherwise. Each round
/// reads a snapshot of the previous one; the loop stops at the first round
/// with no change or after |V| rounds.
///
/// Throws DisconnectedGraph, or InvalidArgument for an improper colouring.
ConnectionTable compute_table(const ColouredGraph& graph, const TableOptions& options = {});

/// Throws InvalidArgument on out-of-range indices.
int query_link(const ConnectionTable& table, VertexId u, VertexId v, ColourId d);

/// min over d of m(u, v, d), with the smallest minimising colour.
std::pair<int, ColourId> query_link_any(const ConnectionTable& table, VertexId u, VertexId v);

}  // namespace flood
