#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lamfloor {

/// Explicit Chebyshev bound ψ(t) <= A t for all t > 0 (Rosser–Schoenfeld).
inline constexpr double kChebyshevA = 1.03883;

/// Certified interval [lo, hi] containing c = Σ_{d>=1} Λ(d) / (d (d + 1)).
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t depth = 0;
  std::string tail_bound_used;

  double width() const { return hi - lo; }
  double midpoint() const { return lo + 0.5 * (hi - lo); }
  bool overlaps(const Enclosure& other) const { return lo <= other.hi && other.lo <= hi; }
};

/// 2A / depth, an upper bound for Σ_{d > depth} Λ(d) / (d (d + 1)).
/// Throws std::invalid_argument for depth < 2.
double tail_bound(std::uint64_t depth);

/// Enclosure from the partial sum to `depth`. Throws for depth < 2.
Enclosure constant_enclosure(std::uint64_t depth);

/// Enclosures at several depths from one sieve pass. Depths need not be sorted;
/// results follow the input order.
std::vector<Enclosure> constant_enclosures(std::span<const std::uint64_t> depths);

/// Σ_{from < d <= to} Λ(d) / (d (d + 1)), compensated (no slack applied).
double series_segment(std::uint64_t from, std::uint64_t to);

/// Streaming scan of Chebyshev's ψ(t) = Σ_{n <= t} Λ(n).
struct ChebyshevReport {
  std::uint64_t limit = 0;
  double max_ratio = 0.0;          // max ψ(n)/n over 2 <= n <= limit
  std::uint64_t argmax = 0;
  double max_band_deviation = 0.0;  // max |ψ(N)/N - 1| over band_start <= N <= limit
  std::uint64_t band_start = 0;
  double psi_at_limit = 0.0;
};

ChebyshevReport chebyshev_scan(std::uint64_t limit, std::uint64_t band_start);

/// Chebyshev ψ(t) = Σ_{n<=t} Λ(n), by a segmented sieve pass.
double chebyshev_psi(std::uint64_t t);

}  // namespace lamfloor
