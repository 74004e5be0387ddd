#include "fgeq/simd.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace fgeq::simd::avx2 {

__attribute__((target("avx2"))) std::size_t mismatch(const std::uint32_t* a, const std::uint32_t* b,
                                                     std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, y))));
    if (mask != 0xffu) return i + static_cast<std::size_t>(__builtin_ctz(~mask & 0xffu));
  }
  return i + scalar::mismatch(a + i, b + i, n - i);
}

__attribute__((target("avx2"))) std::size_t find_cancellation(const std::uint32_t* w, std::size_t n) {
  std::size_t i = 0;
  const __m256i one = _mm256_set1_epi32(1);
  for (; i + 9 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i + 1));
    __m256i hit = _mm256_cmpeq_epi32(_mm256_xor_si256(x, y), one);
    unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hit)));
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  std::size_t rest = scalar::find_cancellation(w + i, n - i);
  return rest == n - i ? n : i + rest;
}

}  // namespace fgeq::simd::avx2

#else

namespace fgeq::simd::avx2 {

std::size_t mismatch(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  return scalar::mismatch(a, b, n);
}
std::size_t find_cancellation(const std::uint32_t* w, std::size_t n) { return scalar::find_cancellation(w, n); }

}  // namespace fgeq::simd::avx2

#endif
