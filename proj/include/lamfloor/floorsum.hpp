#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lamfloor/arith/rational.hpp"
#include "lamfloor/arith/sieve.hpp"
#include "lamfloor/constant.hpp"

namespace lamfloor {

/// Maximal run of n on which [x/n] is constant.
struct Block {
  std::uint64_t q = 0;
  std::uint64_t n_lo = 0;
  std::uint64_t n_hi = 0;

  std::uint64_t length() const { return n_hi - n_lo + 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

using BlockDecomposition = std::vector<Block>;

/// Calls fn(block) for the blocks of [x/n] over n in [n_from, x], in
/// increasing n (strictly decreasing q). The first block is clipped to n_from.
template <class Fn>
void for_each_block(std::uint64_t x, std::uint64_t n_from, Fn&& fn) {
  for (std::uint64_t n = n_from; n <= x;) {
    std::uint64_t q = x / n;
    std::uint64_t n_hi = x / q;
    fn(Block{q, n, n_hi});
    n = n_hi + 1;
  }
}

/// Blocks partitioning [1, x]; at most 2 sqrt(x) + 2 of them.
BlockDecomposition enumerate_blocks(std::uint64_t x);

/// How Λ values are accumulated.
///   compensated: Neumaier summation in traversal order.
///   grouped: integer multiplicities per prime, then Σ count_p log p in
///            increasing p. Any two routes over the same multiset agree
///            bit for bit in this mode.
enum class Accumulation { compensated, grouped };

/// S_Λ(x) = Σ_{n <= x} Λ([x/n]) by one pass over n. Needs table.limit() >= x.
double s_lambda_direct(std::uint64_t x, const MangoldtTable& table,
                       Accumulation mode = Accumulation::compensated);

/// S_Λ(x) over the O(sqrt x) blocks, with Λ at each distinct [x/n] from the
/// 64-bit prime-power test.
double s_lambda_blocks(std::uint64_t x, Accumulation mode = Accumulation::compensated);

struct SplitSum {
  double s1 = 0.0;  // n <= N
  double s2 = 0.0;  // N < n <= x
};

/// Throws std::invalid_argument unless 1 <= N <= x.
SplitSum split_sum(std::uint64_t x, std::uint64_t N);

/// x/d - x/(d+1) - ψ(x/d) + ψ(x/(d+1)) in exact arithmetic; equals
/// #{n : x/(d+1) < n <= x/d}.
Rational psi_count_exact(std::uint64_t x, std::uint64_t d);

/// S_2 rebuilt from the counting identity over d <= x/N:
///   Σ_{d < d0} Λ(d) (x/d - x/(d+1) - ψ(x/d) + ψ(x/(d+1))) + Λ(d0) ([x/d0] - N),
/// d0 = [x/N]; the last term removes the n <= N that share d0.
/// ψ is evaluated from exact integer remainders.
double s2_via_psi(std::uint64_t x, std::uint64_t N);
double s2_via_psi(std::uint64_t x, std::uint64_t N, const MangoldtTable& table);

/// Σ_{D < d <= 2D} Λ(d) ψ(x / (d + delta)). Integer delta takes the exact
/// remainder path. Throws if d + delta = 0 for some d in range.
double frak_s_delta(std::uint64_t x, std::uint64_t D, double delta);
double frak_s_delta(std::uint64_t x, std::uint64_t D, double delta, const MangoldtTable& table);

/// Record of one error-scan point. E(x) = S_Λ(x) - c x.
struct ErrorSample {
  std::uint64_t x = 0;
  double s_lambda = 0.0;
  double c_times_x = 0.0;
  double error = 0.0;
  double ratio_919 = 0.0;    // |E| / x^(9/19)
  double ratio_half = 0.0;   // |E| / x^(1/2)
  double uncertainty = 0.0;  // half-width of c enclosure times x
};

struct ErrorScanResult {
  std::vector<ErrorSample> samples;
  /// Least-squares slope of log|E| against log x over samples with E != 0.
  double slope = 0.0;
  std::size_t fitted_points = 0;
};

/// Largest enclosure width accepted for a grid reaching x_max: the c
/// uncertainty must stay below sqrt(x)/1000 at every grid point.
double required_enclosure_width(std::uint64_t x_max);

/// Throws std::invalid_argument if the grid is empty/unsorted or the
/// enclosure is too wide (message states the required width).
ErrorScanResult error_scan(std::span<const std::uint64_t> x_grid, const Enclosure& c,
                           unsigned threads = 0);

/// round(lo (hi/lo)^(i/(points-1))) for i = 0..points-1, deduplicated; both
/// endpoints are hit exactly.
std::vector<std::uint64_t> geometric_grid(std::uint64_t lo, std::uint64_t hi, std::size_t points);

/// Least-squares slope of ys against xs.
double least_squares_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace lamfloor
