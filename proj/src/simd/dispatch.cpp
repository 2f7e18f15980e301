#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "lamfloor/simd/kernels.hpp"

namespace lamfloor::simd {

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("LAMFLOOR_SIMD"); env != nullptr && std::string(env) == "scalar") {
    return Isa::scalar;
  }
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
#if defined(LAMFLOOR_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) {
    throw std::invalid_argument("AVX2 kernels are not available on this machine");
  }
  active().store(isa, std::memory_order_relaxed);
}

CompensatedSum reciprocal_product_sum(std::uint64_t first, std::span<const double> lambda) {
#if defined(LAMFLOOR_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::reciprocal_product_sum(first, lambda);
#endif
  return scalar::reciprocal_product_sum(first, lambda);
}

std::uint64_t count_within(std::span<const double> a, std::span<const double> b, double threshold) {
#if defined(LAMFLOOR_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::count_within(a, b, threshold);
#endif
  return scalar::count_within(a, b, threshold);
}

void sine_series(std::span<const double> xs, std::span<const double> weights, std::span<double> out) {
#if defined(LAMFLOOR_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::sine_series(xs, weights, out);
#endif
  scalar::sine_series(xs, weights, out);
}

}  // namespace lamfloor::simd
