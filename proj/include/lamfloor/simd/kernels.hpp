#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
// The free functions in namespace simd dispatch at runtime; the scalar::
// and avx2:: entry points are exposed for equivalence testing.

#include <cstdint>
#include <span>
#include <string_view>

namespace lamfloor::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set supported by this CPU and build.
Isa detected_isa();

/// Instruction set used by the dispatching entry points. Defaults to
/// detected_isa(); LAMFLOOR_SIMD=scalar in the environment forces scalar.
Isa active_isa();

/// Overrides the active instruction set. Throws std::invalid_argument if the
/// requested set is not available.
void set_active_isa(Isa isa);

/// Sum plus a not-yet-applied compensation term.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;
  double value() const { return sum + compensation; }
};

/// Σ lambda[i] / (d (d + 1)) with d = first + i, compensated.
/// Requires first + lambda.size() < 2^53.
CompensatedSum reciprocal_product_sum(std::uint64_t first, std::span<const double> lambda);

/// #{(i, j) : |a[i] - b[j]| <= threshold}.
std::uint64_t count_within(std::span<const double> a, std::span<const double> b, double threshold);

/// out[j] = Σ_{h=1..H} weights[h-1] sin(2π h xs[j]), H = weights.size(),
/// using the angle-addition recurrence seeded by sin/cos(2π xs[j]).
void sine_series(std::span<const double> xs, std::span<const double> weights, std::span<double> out);

namespace scalar {
CompensatedSum reciprocal_product_sum(std::uint64_t first, std::span<const double> lambda);
std::uint64_t count_within(std::span<const double> a, std::span<const double> b, double threshold);
void sine_series(std::span<const double> xs, std::span<const double> weights, std::span<double> out);
}  // namespace scalar

#if defined(LAMFLOOR_HAVE_AVX2)
namespace avx2 {
CompensatedSum reciprocal_product_sum(std::uint64_t first, std::span<const double> lambda);
std::uint64_t count_within(std::span<const double> a, std::span<const double> b, double threshold);
void sine_series(std::span<const double> xs, std::span<const double> weights, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace lamfloor::simd
