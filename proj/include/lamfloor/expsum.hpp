#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "lamfloor/exponent.hpp"

namespace lamfloor {

enum class CoefficientSource { all_ones, random_unimodular };

/// One instance of the triple sum
///   S = Σ_{h~H} Σ_{m~M} Σ_{n~N} a_{h,m} b_n e(X (M^β N^γ / H^α) h^α / (m^β n^γ + δ)),
/// with k ~ K meaning K < k <= 2K.
struct ExpSumInstance {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double delta = 0.0;
  double X = 1.0;
  std::uint32_t H = 1;
  std::uint32_t M = 1;
  std::uint32_t N = 1;
  CoefficientSource source = CoefficientSource::all_ones;
  std::uint64_t seed = 0;

  /// H <= M^(β-1) N^γ.
  bool height_feasible() const;
  /// |δ| <= limit (the tested window uses 10).
  bool delta_feasible(double limit = 10.0) const { return delta >= -limit && delta <= limit; }
};

/// a_{h,m} row-major over (h, m), then b_n.
struct Coefficients {
  std::uint32_t H = 0;
  std::uint32_t M = 0;
  std::vector<std::complex<double>> a;
  std::vector<std::complex<double>> b;

  const std::complex<double>& a_at(std::uint32_t hi, std::uint32_t mi) const { return a[hi * M + mi]; }
};

/// Unimodular e(θ) with θ from SplitMix64(seed), or all ones.
Coefficients make_coefficients(const ExpSumInstance& inst);

/// Direct triple loop with compensated complex accumulation. Throws
/// std::invalid_argument if some m^β n^γ + δ vanishes.
std::complex<double> eval_s_delta(const ExpSumInstance& inst);
std::complex<double> eval_s_delta(const ExpSumInstance& inst, const Coefficients& coeffs);

/// variant 1: (XHMN)^{1/2} + (HM)^{1/2} N + H M N^{1/2} + X^{-1/2} H M N
/// variant 2: (X^κ H^{2+κ} M^{2+κ} N^{1+κ+λ})^{1/(2+2κ)} + H M N^{1/2}
///            + (HM)^{1/2} N + X^{-1/2} H M N
/// X^ε factors and implied constants are set to 1. Variant 2 requires a pair.
double prop31_bound(const ExpSumInstance& inst, const std::optional<ExponentPair>& pair, int variant);

struct ProximityQuery {
  double alpha = 1.0;
  double beta = 1.0;
  std::uint32_t M = 1;
  std::uint32_t N = 1;
  double Delta = 0.0;
};

/// Absolute tie tolerance added to Δ: ratios lie in (2^-|α|, 2^|α|), where
/// one ulp is far below this.
inline constexpr double kProximityTieTolerance = 1e-14;

struct ProximityCount {
  std::uint64_t count = 0;  // at Δ(1 + 1e-12) + tie tolerance
  std::uint64_t count_low = 0;  // at Δ(1 - 1e-12) + tie tolerance
  bool degenerate() const { return count != count_low; }
};

/// Exhaustive count of (m, m~, n, n~) with m, m~ ~ M, n, n~ ~ N and
/// |(m/m~)^α - (n/n~)^β| <= Δ. Refuses (std::invalid_argument) when
/// (MN)^2 > 1e9.
ProximityCount count_proximity_detailed(const ProximityQuery& q);
std::uint64_t count_proximity(const ProximityQuery& q);

/// count / (MN log(2MN) + Δ (MN)^2).
double lemma21_ratio(const ProximityQuery& q);

struct BoundScanGrid {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  std::vector<std::uint32_t> H;
  std::vector<std::uint32_t> M;
  std::vector<std::uint32_t> N;
  std::vector<double> X;
  std::vector<double> delta;
  std::vector<std::uint64_t> seeds;
  CoefficientSource source = CoefficientSource::random_unimodular;
  std::optional<ExponentPair> pair;  // for variant 2; defaults to (1/2, 1/2)
};

struct BoundScanRow {
  ExpSumInstance instance;
  double value_abs = 0.0;
  std::complex<double> value;
  double bound1 = 0.0;
  double ratio1 = 0.0;
  double bound2 = 0.0;
  double ratio2 = 0.0;
};

struct BoundScanReport {
  std::vector<BoundScanRow> rows;  // grid order: H, M, N, X, delta, seed
  std::uint64_t excluded = 0;       // infeasible instances
  double max_ratio1 = 0.0;
  double median_ratio1 = 0.0;
  double max_ratio2 = 0.0;
  double median_ratio2 = 0.0;
};

/// Evaluates every feasible instance of the grid. Throws std::invalid_argument
/// if no instance is feasible.
BoundScanReport bound_ratio_scan(const BoundScanGrid& grid, unsigned threads = 1);

}  // namespace lamfloor
