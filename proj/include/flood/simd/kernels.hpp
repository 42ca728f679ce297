#pragma once

// Row kernels for the min-plus relaxation inside the connection-cost
// table. The scalar set is the reference; vector sets must agree with it
// bit for bit and are chosen at runtime from what the CPU supports.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace flood::simd {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelSet {
  Isa isa;

  /// dst[i] = min(dst[i], min(cap, offset + row[i])). Inputs are <= cap,
  /// so the sum cannot overflow.
  void (*min_plus_row)(std::int32_t* dst, const std::int32_t* row, std::int32_t offset, std::int32_t cap,
                       std::size_t n);

  /// dst[i] = min(dst[i], src[i])
  void (*min_rows)(std::int32_t* dst, const std::int32_t* src, std::size_t n);

  /// table[i] = min(table[i], direct[i], min(cap, recoloured[i] + 1)).
  /// Returns true iff some entry decreased.
  bool (*relax_row)(std::int32_t* table, const std::int32_t* direct, const std::int32_t* recoloured,
                    std::int32_t cap, std::size_t n);
};

const KernelSet& scalar_kernels() noexcept;

/// Compiled in and supported by the running CPU.
std::vector<const KernelSet*> available_kernels();

/// Widest available set. FLOOD_SIMD=scalar|avx2|neon forces a choice when
/// that set is available.
const KernelSet& best_kernels();

namespace detail {
const KernelSet* avx2_kernels() noexcept;
const KernelSet* neon_kernels() noexcept;
}  // namespace detail

}  // namespace flood::simd
