#pragma once

#include <cstdint>
#include <optional>

namespace lamfloor {

/// n = prime^exponent with exponent >= 1.
struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// floor(n^(1/k)) for k >= 1, by integer Newton iteration plus an exact
/// correction step. No floating point is involved.
std::uint64_t iroot(std::uint64_t n, unsigned k);
inline std::uint64_t isqrt(std::uint64_t n) { return iroot(n, 2); }
inline std::uint64_t icbrt(std::uint64_t n) { return iroot(n, 3); }

/// base^k, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, unsigned k);

/// Decides whether n is a prime power. n = 0 throws std::invalid_argument;
/// n = 1 yields nullopt.
std::optional<PrimePower> prime_power(std::uint64_t n);

/// von Mangoldt function for an isolated argument: log p when n = p^k, else 0.
double mangoldt_single(std::uint64_t n);

}  // namespace lamfloor
