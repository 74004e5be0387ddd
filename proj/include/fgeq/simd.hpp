#pragma once

#include <cstddef>
#include <cstdint>

namespace fgeq::simd {

enum class Isa { scalar, avx2 };

/// First index where a and b differ, or n.
std::size_t mismatch(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
/// First i with w[i] ^ w[i+1] == 1 (an adjacent letter/inverse pair), or n.
std::size_t find_cancellation(const std::uint32_t* w, std::size_t n);

namespace scalar {
std::size_t mismatch(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
std::size_t find_cancellation(const std::uint32_t* w, std::size_t n);
}  // namespace scalar

namespace avx2 {
std::size_t mismatch(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
std::size_t find_cancellation(const std::uint32_t* w, std::size_t n);
}  // namespace avx2

bool isa_available(Isa isa);
Isa active_isa();
/// Forces a kernel family; ignored when the isa is not available on this cpu.
void set_isa(Isa isa);
const char* isa_name(Isa isa);

}  // namespace fgeq::simd
