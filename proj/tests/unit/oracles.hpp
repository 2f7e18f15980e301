#pragma once

// Independent reference implementations used as test oracles. They share no
// code with the library.

#include <cmath>
#include <cstdint>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline int moebius_trial(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

/// log p if n = p^k, else 0, by trial division.
inline double mangoldt_trial(std::uint64_t n) {
  if (n < 2) return 0.0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return std::log(static_cast<double>(n));
}

/// Plain sum over n <= x of Λ(floor(x/n)).
inline long double s_lambda_naive(std::uint64_t x) {
  long double s = 0;
  for (std::uint64_t n = 1; n <= x; ++n) s += mangoldt_trial(x / n);
  return s;
}

}  // namespace oracle
