#include <atomic>

#include "fgeq/simd.hpp"

namespace fgeq::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Isa> g_isa{cpu_has_avx2() ? Isa::avx2 : Isa::scalar};

}  // namespace

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() { return g_isa.load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa_available(isa)) g_isa.store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

std::size_t mismatch(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  return active_isa() == Isa::avx2 ? avx2::mismatch(a, b, n) : scalar::mismatch(a, b, n);
}

std::size_t find_cancellation(const std::uint32_t* w, std::size_t n) {
  return active_isa() == Isa::avx2 ? avx2::find_cancellation(w, n) : scalar::find_cancellation(w, n);
}

}  // namespace fgeq::simd
