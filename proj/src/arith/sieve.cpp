#include "lamfloor/arith/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lamfloor {

namespace {

std::vector<std::uint32_t> simple_primes(std::uint64_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

MangoldtSegments::MangoldtSegments(std::uint64_t limit, std::size_t segment_size)
    : limit_(limit), segment_size_(segment_size) {
  if (limit == 0) throw std::invalid_argument("sieve: limit must be >= 1");
  if (segment_size == 0) throw std::invalid_argument("sieve: segment size must be >= 1");
  base_primes_ = simple_primes(isqrt(limit));
  base_logs_.reserve(base_primes_.size());
  for (std::uint32_t p : base_primes_) base_logs_.push_back(std::log(static_cast<double>(p)));
}

void MangoldtSegments::for_each(const std::function<void(const MangoldtSegment&)>& fn) const {
  std::vector<std::uint8_t> composite;
  std::vector<double> lambda;
  std::vector<std::uint64_t> base;

  for (std::uint64_t lo = 1; lo <= limit_;) {
    std::uint64_t hi = std::min<std::uint64_t>(limit_, lo + segment_size_ - 1);  // inclusive
    std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    composite.assign(len, 0);
    lambda.assign(len, 0.0);
    base.assign(len, 0);

    for (std::uint32_t p32 : base_primes_) {
      std::uint64_t p = p32;
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = 1;
    }

    std::size_t next_base = 0;
    for (std::size_t i = 0; i < len; ++i) {
      std::uint64_t n = lo + i;
      if (n < 2 || composite[i]) continue;
      // Base primes reuse their cached log.
      while (next_base < base_primes_.size() && base_primes_[next_base] < n) ++next_base;
      if (next_base < base_primes_.size() && base_primes_[next_base] == n) {
        lambda[i] = base_logs_[next_base];
      } else {
        lambda[i] = std::log(static_cast<double>(n));
      }
      base[i] = n;
    }

    // Proper prime powers p^k, k >= 2, all have p <= sqrt(limit).
    for (std::size_t b = 0; b < base_primes_.size(); ++b) {
      std::uint64_t p = base_primes_[b];
      if (p * p > hi) break;
      for (std::uint64_t pk = p * p;;) {
        if (pk >= lo) {
          lambda[pk - lo] = base_logs_[b];
          base[pk - lo] = p;
        }
        if (pk > hi / p) break;
        pk *= p;
      }
    }

    fn(MangoldtSegment{lo, std::span<const double>(lambda), std::span<const std::uint64_t>(base)});
    if (hi == limit_) break;
    lo = hi + 1;
  }
}

MangoldtTable::MangoldtTable(std::uint64_t limit) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("sieve_mangoldt: limit must be >= 1");
  if (limit >= (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("sieve_mangoldt: materialized tables need limit < 2^32");
  }
  prime_index_.assign(limit + 1, 0);
  MangoldtSegments segments(limit);
  segments.for_each([&](const MangoldtSegment& seg) {
    for (std::size_t i = 0; i < seg.base.size(); ++i) {
      std::uint64_t p = seg.base[i];
      if (p == 0) continue;
      std::uint64_t n = seg.first + i;
      if (p == n) {
        primes_.push_back(static_cast<std::uint32_t>(p));
        logs_.push_back(seg.lambda[i]);
        prime_index_[n] = static_cast<std::uint32_t>(primes_.size());
      } else {
        prime_index_[n] = prime_index_[p];
      }
    }
  });
}

std::optional<PrimePower> MangoldtTable::entry(std::uint64_t n) const {
  std::uint32_t idx = prime_index_[n];
  if (idx == 0) return std::nullopt;
  std::uint64_t p = primes_[idx - 1];
  unsigned k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return PrimePower{p, k};
}

MangoldtTable sieve_mangoldt(std::uint64_t limit) { return MangoldtTable(limit); }

MoebiusTable::MoebiusTable(std::uint64_t limit) : limit_(limit), values_(limit + 1, 0) {
  if (limit == 0) throw std::invalid_argument("MoebiusTable: limit must be >= 1");
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(limit + 1, false);
  values_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      values_[i] = -1;
    }
    for (std::uint32_t p : primes) {
      std::uint64_t m = i * p;
      if (m > limit) break;
      composite[m] = true;
      if (i % p == 0) {
        values_[m] = 0;
        break;
      }
      values_[m] = static_cast<std::int8_t>(-values_[i]);
    }
  }
}

SmallestFactorTable::SmallestFactorTable(std::uint64_t limit) : limit_(limit), spf_(limit + 1, 0) {
  if (limit == 0) throw std::invalid_argument("SmallestFactorTable: limit must be >= 1");
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

}  // namespace lamfloor
