#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lamfloor/arith/summation.hpp"
#include "lamfloor/simd/kernels.hpp"

namespace lamfloor::simd::scalar {

CompensatedSum reciprocal_product_sum(std::uint64_t first, std::span<const double> lambda) {
  NeumaierSum acc;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0.0) continue;
    double d = static_cast<double>(first + i);
    acc.add(lambda[i] / (d * (d + 1.0)));
  }
  return {acc.value(), 0.0};
}

std::uint64_t count_within(std::span<const double> a, std::span<const double> b, double threshold) {
  std::uint64_t count = 0;
  for (double ai : a) {
    for (double bj : b) {
      count += std::fabs(ai - bj) <= threshold ? 1U : 0U;
    }
  }
  return count;
}

void sine_series(std::span<const double> xs, std::span<const double> weights, std::span<double> out) {
  if (out.size() < xs.size()) throw std::invalid_argument("sine_series: output too small");
  for (std::size_t j = 0; j < xs.size(); ++j) {
    double angle = 2.0 * std::numbers::pi * xs[j];
    double s1 = std::sin(angle);
    double c1 = std::cos(angle);
    double s = s1;
    double c = c1;
    double acc = 0.0;
    for (double w : weights) {
      acc = acc + w * s;
      double sn = s * c1 + c * s1;
      double cn = c * c1 - s * s1;
      s = sn;
      c = cn;
    }
    out[j] = acc;
  }
}

}  // namespace lamfloor::simd::scalar
