#include <algorithm>
#include <cstdlib>
#include <string_view>

#include "flood/simd/kernels.hpp"

namespace flood::simd {

namespace {

void min_plus_row(std::int32_t* dst, const std::int32_t* row, std::int32_t offset, std::int32_t cap, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = std::min(dst[i], std::min(cap, offset + row[i]));
}

void min_rows(std::int32_t* dst, const std::int32_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = std::min(dst[i], src[i]);
}

bool relax_row(std::int32_t* table, const std::int32_t* direct, const std::int32_t* recoloured, std::int32_t cap,
               std::size_t n) {
  bool changed = false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int32_t candidate = std::min(direct[i], std::min(cap, recoloured[i] + 1));
    if (candidate < table[i]) {
      table[i] = candidate;
      changed = true;
    }
  }
  return changed;
}

constexpr KernelSet kScalar{Isa::scalar, &min_plus_row, &min_rows, &relax_row};

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelSet& scalar_kernels() noexcept { return kScalar; }

#if !defined(FLOOD_HAVE_AVX2)
const KernelSet* detail::avx2_kernels() noexcept { return nullptr; }
#endif
#if !defined(FLOOD_HAVE_NEON)
const KernelSet* detail::neon_kernels() noexcept { return nullptr; }
#endif

std::vector<const KernelSet*> available_kernels() {
  std::vector<const KernelSet*> sets{&kScalar};
#if defined(FLOOD_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) sets.push_back(detail::avx2_kernels());
#endif
#if defined(FLOOD_HAVE_NEON)
  sets.push_back(detail::neon_kernels());
#endif
  return sets;
}

const KernelSet& best_kernels() {
  static const KernelSet* chosen = [] {
    const auto sets = available_kernels();
    if (const char* forced = std::getenv("FLOOD_SIMD")) {
      for (const KernelSet* set : sets) {
        if (to_string(set->isa) == forced) return set;
      }
    }
    return sets.back();
  }();
  return *chosen;
}

}  // namespace flood::simd
