// Built with -mavx2; only entered after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "flood/simd/kernels.hpp"

namespace flood::simd {

namespace {

void min_plus_row(std::int32_t* dst, const std::int32_t* row, std::int32_t offset, std::int32_t cap, std::size_t n) {
  const __m256i vo = _mm256_set1_epi32(offset);
  const __m256i vc = _mm256_set1_epi32(cap);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_min_epi32(vc, _mm256_add_epi32(vo, r));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_min_epi32(d, s));
  }
  for (; i < n; ++i) dst[i] = std::min(dst[i], std::min(cap, offset + row[i]));
}

void min_rows(std::int32_t* dst, const std::int32_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_min_epi32(a, b));
  }
  for (; i < n; ++i) dst[i] = std::min(dst[i], src[i]);
}

bool relax_row(std::int32_t* table, const std::int32_t* direct, const std::int32_t* recoloured, std::int32_t cap,
               std::size_t n) {
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i vc = _mm256_set1_epi32(cap);
  __m256i decreased = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(direct + i));
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(recoloured + i));
    const __m256i candidate = _mm256_min_epi32(d, _mm256_min_epi32(vc, _mm256_add_epi32(r, one)));
    decreased = _mm256_or_si256(decreased, _mm256_cmpgt_epi32(t, candidate));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(table + i), _mm256_min_epi32(t, candidate));
  }
  bool changed = !_mm256_testz_si256(decreased, decreased);
  for (; i < n; ++i) {
    const std::int32_t candidate = std::min(direct[i], std::min(cap, recoloured[i] + 1));
    if (candidate < table[i]) {
      table[i] = candidate;
      changed = true;
    }
  }
  return changed;
}

constexpr KernelSet kAvx2{Isa::avx2, &min_plus_row, &min_rows, &relax_row};

}  // namespace

const KernelSet* detail::avx2_kernels() noexcept { return &kAvx2; }

}  // namespace flood::simd
