#include "lamfloor/arith/primality.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lamfloor {

namespace {

using u128 = unsigned __int128;

constexpr std::array<std::uint64_t, 18> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                        29, 31, 37, 41, 43, 47, 53, 59, 61};

// Witness set of Jim Sinclair; exact for all n < 2^64.
constexpr std::array<std::uint64_t, 7> kWitnesses = {2,      325,     9375,      28178,
                                                     450775, 9780504, 1795265022};

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 67 * 67) return true;
  std::uint64_t d = n - 1;
  unsigned s = static_cast<unsigned>(std::countr_zero(d));
  d >>= s;
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

std::uint64_t iroot(std::uint64_t n, unsigned k) {
  if (k == 0) throw std::invalid_argument("iroot: k must be >= 1");
  if (k == 1 || n < 2) return n;
  if (k >= 64) return 1;

  // Start above the root: 2^ceil(bits/k) > n^(1/k).
  unsigned bits = 64 - static_cast<unsigned>(std::countl_zero(n));
  unsigned shift = (bits + k - 1) / k;
  u128 x = static_cast<u128>(1) << shift;
  // Newton's step is monotone decreasing while x exceeds the root.
  for (;;) {
    std::uint64_t xs = static_cast<std::uint64_t>(x);
    std::uint64_t pw = saturating_pow(xs, k - 1);
    u128 next = (static_cast<u128>(k - 1) * x + (pw == 0 ? 0 : n / pw)) / k;
    if (next >= x) break;
    x = next;
  }
  std::uint64_t r = static_cast<std::uint64_t>(x);
  while (r > 0 && saturating_pow(r, k) > n) --r;
  while (saturating_pow(r + 1, k) <= n && saturating_pow(r + 1, k) != std::numeric_limits<std::uint64_t>::max()) {
    ++r;
  }
  return r;
}

std::optional<PrimePower> prime_power(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("prime_power: n must be >= 1");
  if (n == 1) return std::nullopt;

  for (std::uint64_t p : kSmallPrimes) {
    if (n % p != 0) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (n == 1) return PrimePower{p, k};
    return std::nullopt;
  }
  if (is_prime_u64(n)) return PrimePower{n, 1};

  // Every prime factor is now >= 67, so n = p^k forces 67^k <= n.
  for (unsigned k = 2; saturating_pow(67, k) <= n; ++k) {
    std::uint64_t r = iroot(n, k);
    if (saturating_pow(r, k) == n && is_prime_u64(r)) return PrimePower{r, k};
  }
  return std::nullopt;
}

double mangoldt_single(std::uint64_t n) {
  auto pp = prime_power(n);
  return pp ? std::log(static_cast<double>(pp->prime)) : 0.0;
}

}  // namespace lamfloor
