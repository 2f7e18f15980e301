#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lamfloor/arith/primality.hpp"

namespace lamfloor {

inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 22;

/// One sieved window [first, first + lambda.size()).
struct MangoldtSegment {
  std::uint64_t first = 1;
  std::span<const double> lambda;       // Λ(first + i)
  std::span<const std::uint64_t> base;  // p when first + i = p^k, else 0
};

/// Segmented sieve of Eratosthenes producing Λ on [1, limit] window by window.
///
/// Memory is O(sqrt(limit) + segment_size) regardless of limit; this is the
/// route for limits around 1e9 where a materialized table does not fit.
/// log p is evaluated once per prime and shared by all of its powers.
class MangoldtSegments {
 public:
  explicit MangoldtSegments(std::uint64_t limit, std::size_t segment_size = kDefaultSegmentSize);

  std::uint64_t limit() const { return limit_; }

  /// Invokes fn(segment) for consecutive windows covering [1, limit].
  void for_each(const std::function<void(const MangoldtSegment&)>& fn) const;

 private:
  std::uint64_t limit_;
  std::size_t segment_size_;
  std::vector<std::uint32_t> base_primes_;  // primes <= sqrt(limit)
  std::vector<double> base_logs_;
};

/// Λ on [1, limit], stored as prime-power entries with one cached log per prime.
class MangoldtTable {
 public:
  /// Throws std::invalid_argument for limit = 0 or limit >= 2^32.
  explicit MangoldtTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  /// Λ(n) for 1 <= n <= limit.
  double value(std::uint64_t n) const {
    std::uint32_t idx = prime_index_[n];
    return idx == 0 ? 0.0 : logs_[idx - 1];
  }
  double operator()(std::uint64_t n) const { return value(n); }

  /// (p, k) with n = p^k, or nullopt.
  std::optional<PrimePower> entry(std::uint64_t n) const;

  std::span<const std::uint32_t> primes() const { return primes_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> prime_index_;  // 1-based index into primes_, 0 = not a prime power
  std::vector<std::uint32_t> primes_;
  std::vector<double> logs_;
};

MangoldtTable sieve_mangoldt(std::uint64_t limit);

/// μ(n) on [1, limit] by a linear sieve.
class MoebiusTable {
 public:
  explicit MoebiusTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  int operator()(std::uint64_t n) const { return values_[n]; }

 private:
  std::uint64_t limit_;
  std::vector<std::int8_t> values_;
};

/// Smallest prime factor table used for exact factorizations of small n.
class SmallestFactorTable {
 public:
  explicit SmallestFactorTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::uint32_t operator()(std::uint64_t n) const { return spf_[n]; }

  /// Calls fn(p, k) for each prime power p^k exactly dividing n, increasing p.
  template <class Fn>
  void factor(std::uint64_t n, Fn&& fn) const {
    while (n > 1) {
      std::uint32_t p = spf_[n];
      unsigned k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      fn(std::uint64_t{p}, k);
    }
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace lamfloor
