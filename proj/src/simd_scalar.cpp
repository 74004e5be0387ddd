#include "fgeq/simd.hpp"

namespace fgeq::simd::scalar {

std::size_t mismatch(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return i;
  return n;
}

std::size_t find_cancellation(const std::uint32_t* w, std::size_t n) {
  for (std::size_t i = 0; i + 1 < n; ++i)
    if ((w[i] ^ w[i + 1]) == 1u) return i;
  return n;
}

}  // namespace fgeq::simd::scalar
