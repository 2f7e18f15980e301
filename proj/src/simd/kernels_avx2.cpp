// Compiled with -mavx2. Only reached after a runtime CPU check.
// FMA is deliberately not used so that results match the scalar kernels.

#include <immintrin.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lamfloor/arith/summation.hpp"
#include "lamfloor/simd/kernels.hpp"

namespace lamfloor::simd::avx2 {

namespace {

inline double horizontal_sum(__m256d v, NeumaierSum& acc) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  for (double x : lanes) acc.add(x);
  return acc.value();
}

}  // namespace

CompensatedSum reciprocal_product_sum(std::uint64_t first, std::span<const double> lambda) {
  const std::size_t n = lambda.size();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d step = _mm256_set1_pd(4.0);
  __m256d d = _mm256_setr_pd(static_cast<double>(first), static_cast<double>(first + 1),
                             static_cast<double>(first + 2), static_cast<double>(first + 3));
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d lam = _mm256_loadu_pd(lambda.data() + i);
    __m256d term = _mm256_div_pd(lam, _mm256_mul_pd(d, _mm256_add_pd(d, one)));
    // Branch-free TwoSum per lane.
    __m256d s = _mm256_add_pd(sum, term);
    __m256d bb = _mm256_sub_pd(s, sum);
    __m256d err = _mm256_add_pd(_mm256_sub_pd(sum, _mm256_sub_pd(s, bb)), _mm256_sub_pd(term, bb));
    comp = _mm256_add_pd(comp, err);
    sum = s;
    d = _mm256_add_pd(d, step);
  }

  NeumaierSum acc;
  horizontal_sum(sum, acc);
  NeumaierSum comp_acc;
  horizontal_sum(comp, comp_acc);
  acc.add(comp_acc.value());
  for (; i < n; ++i) {
    if (lambda[i] == 0.0) continue;
    double di = static_cast<double>(first + i);
    acc.add(lambda[i] / (di * (di + 1.0)));
  }
  return {acc.value(), 0.0};
}

std::uint64_t count_within(std::span<const double> a, std::span<const double> b, double threshold) {
  const std::size_t nb = b.size();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const __m256d t = _mm256_set1_pd(threshold);
  std::uint64_t count = 0;
  for (double ai : a) {
    const __m256d av = _mm256_set1_pd(ai);
    std::size_t j = 0;
    for (; j + 4 <= nb; j += 4) {
      __m256d diff = _mm256_sub_pd(av, _mm256_loadu_pd(b.data() + j));
      __m256d absdiff = _mm256_andnot_pd(sign_mask, diff);
      __m256d le = _mm256_cmp_pd(absdiff, t, _CMP_LE_OQ);
      count += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(le))));
    }
    for (; j < nb; ++j) count += std::fabs(ai - b[j]) <= threshold ? 1U : 0U;
  }
  return count;
}

void sine_series(std::span<const double> xs, std::span<const double> weights, std::span<double> out) {
  if (out.size() < xs.size()) throw std::invalid_argument("sine_series: output too small");
  const std::size_t n = xs.size();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    alignas(32) double s1v[4];
    alignas(32) double c1v[4];
    for (int l = 0; l < 4; ++l) {
      double angle = 2.0 * std::numbers::pi * xs[j + l];
      s1v[l] = std::sin(angle);
      c1v[l] = std::cos(angle);
    }
    const __m256d s1 = _mm256_load_pd(s1v);
    const __m256d c1 = _mm256_load_pd(c1v);
    __m256d s = s1;
    __m256d c = c1;
    __m256d acc = _mm256_setzero_pd();
    for (double w : weights) {
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(w), s));
      __m256d sn = _mm256_add_pd(_mm256_mul_pd(s, c1), _mm256_mul_pd(c, s1));
      __m256d cn = _mm256_sub_pd(_mm256_mul_pd(c, c1), _mm256_mul_pd(s, s1));
      s = sn;
      c = cn;
    }
    _mm256_storeu_pd(out.data() + j, acc);
  }
  if (j < n) {
    scalar::sine_series(xs.subspan(j), weights, out.subspan(j));
  }
}

}  // namespace lamfloor::simd::avx2
