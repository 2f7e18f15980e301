#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace lamfloor {

/// Sawtooth ψ(t) = {t} - 1/2, in [-1/2, 1/2). Integers map to -1/2 exactly.
inline double psi_saw(double t) {
  double frac = t - std::floor(t);
  if (frac >= 1.0) frac = 0.0;  // t slightly below an integer
  return frac - 0.5;
}

/// ψ(num/den) with the fractional part taken by exact integer remainder, so
/// integer quotients are never misclassified.
inline double psi_saw_quotient(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("psi_saw_quotient: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t r = num % den;
  if (r < 0) r += den;
  return static_cast<double>(r) / static_cast<double>(den) - 0.5;
}

}  // namespace lamfloor
