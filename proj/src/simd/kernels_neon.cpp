// AArch64 only; Advanced SIMD is baseline there, so no runtime check.

#include <arm_neon.h>

#include <algorithm>

#include "flood/simd/kernels.hpp"

namespace flood::simd {

namespace {

void min_plus_row(std::int32_t* dst, const std::int32_t* row, std::int32_t offset, std::int32_t cap, std::size_t n) {
  const int32x4_t vo = vdupq_n_s32(offset);
  const int32x4_t vc = vdupq_n_s32(cap);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const int32x4_t s = vminq_s32(vc, vaddq_s32(vo, vld1q_s32(row + i)));
    vst1q_s32(dst + i, vminq_s32(vld1q_s32(dst + i), s));
  }
  for (; i < n; ++i) dst[i] = std::min(dst[i], std::min(cap, offset + row[i]));
}

void min_rows(std::int32_t* dst, const std::int32_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vst1q_s32(dst + i, vminq_s32(vld1q_s32(dst + i), vld1q_s32(src + i)));
  for (; i < n; ++i) dst[i] = std::min(dst[i], src[i]);
}

bool relax_row(std::int32_t* table, const std::int32_t* direct, const std::int32_t* recoloured, std::int32_t cap,
               std::size_t n) {
  const int32x4_t one = vdupq_n_s32(1);
  const int32x4_t vc = vdupq_n_s32(cap);
  uint32x4_t decreased = vdupq_n_u32(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const int32x4_t t = vld1q_s32(table + i);
    const int32x4_t candidate =
        vminq_s32(vld1q_s32(direct + i), vminq_s32(vc, vaddq_s32(vld1q_s32(recoloured + i), one)));
    decreased = vorrq_u32(decreased, vcgtq_s32(t, candidate));
    vst1q_s32(table + i, vminq_s32(t, candidate));
  }
  bool changed = vmaxvq_u32(decreased) != 0;
  for (; i < n; ++i) {
    const std::int32_t candidate = std::min(direct[i], std::min(cap, recoloured[i] + 1));
    if (candidate < table[i]) {
      table[i] = candidate;
      changed = true;
    }
  }
  return changed;
}

constexpr KernelSet kNeon{Isa::neon, &min_plus_row, &min_rows, &relax_row};

}  // namespace

const KernelSet* detail::neon_kernels() noexcept { return &kNeon; }

}  // namespace flood::simd
