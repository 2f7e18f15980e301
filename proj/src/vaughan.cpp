#include "lamfloor/vaughan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lamfloor/arith/primality.hpp"
#include "lamfloor/arith/sieve.hpp"
#include "lamfloor/rng.hpp"

namespace lamfloor {

namespace {

template <class Coef>
double ratio_to_log(const PrimeLogVector<Coef>& v, std::uint64_t index) {
  return std::fabs(v.to_double()) / std::log(static_cast<double>(index) + 2.0);
}

void widen(std::uint64_t& lo, std::uint64_t& hi, std::uint64_t v) {
  if (lo == 0 || v < lo) lo = v;
  hi = std::max(hi, v);
}

}  // namespace

double VaughanCoefficients::max_coefficient_ratio() const {
  double worst = 0.0;
  for (std::uint64_t m = 1; m <= alpha1_values.size(); ++m) {
    worst = std::max(worst, ratio_to_log(alpha1(m), m));
  }
  for (std::uint64_t i = 0; i < alpha3_values.size(); ++i) {
    worst = std::max(worst, ratio_to_log(alpha3_values[i], U + 1 + i));
  }
  for (std::uint64_t i = 0; i < alpha6_values.size(); ++i) {
    worst = std::max(worst, ratio_to_log(alpha6_values[i], U + 1 + i));
  }
  return worst;
}

VaughanCoefficients build_coefficients(std::uint64_t D) {
  if (D < 100) throw std::invalid_argument("build_coefficients: D must be >= 100");
  VaughanCoefficients co;
  co.D = D;
  co.U = icbrt(D);
  const std::uint64_t U = co.U;
  co.type2_limit = 2 * D / (U + 1);

  const std::uint64_t limit = std::max(U * U, co.type2_limit);
  MoebiusTable mu(limit);
  MangoldtTable lambda(limit);

  // β(m) = Σ_{bc=m, b<=U, c<=U} μ(b) Λ(c) on m <= U^2.
  std::vector<IntPrimeLogVector> beta(U * U + 1);
  for (std::uint64_t c = 2; c <= U; ++c) {
    auto pc = lambda.entry(c);
    if (!pc) continue;
    for (std::uint64_t b = 1; b <= U; ++b) {
      if (mu(b) != 0) beta[b * c].add_term(pc->prime, mu(b));
    }
  }

  co.alpha1_values.resize(U);
  co.alpha2_values.resize(U);
  for (std::uint64_t m = 1; m <= U; ++m) {
    co.alpha1_values[m - 1].add_scaled(beta[m], std::int64_t{-1});
    co.alpha2_values[m - 1] = mu(m);
  }
  co.alpha3_values.resize(U * U - U);
  for (std::uint64_t m = U + 1; m <= U * U; ++m) {
    co.alpha3_values[m - U - 1].add_scaled(beta[m], std::int64_t{-1});
  }

  const std::uint64_t t2 = co.type2_limit;
  co.alpha5_values.resize(t2 > U ? t2 - U : 0);
  co.alpha6_values.resize(t2 > U ? t2 - U : 0);
  for (std::uint64_t m = U + 1; m <= t2; ++m) co.alpha5_values[m - U - 1] = mu(m);
  // alpha6(n) = Σ_{c|n, c>U} Λ(c): spread each prime power c > U over its multiples.
  for (std::uint64_t c = U + 1; c <= t2; ++c) {
    auto pc = lambda.entry(c);
    if (!pc) continue;
    for (std::uint64_t n = c; n <= t2; n += c) co.alpha6_values[n - U - 1].add_term(pc->prime, 1);
  }
  return co;
}

VaughanSums vaughan_sum(const ArithmeticFunction& g, std::uint64_t D) {
  return vaughan_sum(g, build_coefficients(D));
}

VaughanSums vaughan_sum(const ArithmeticFunction& g, const VaughanCoefficients& co) {
  const std::uint64_t D = co.D;
  const std::uint64_t U = co.U;
  std::vector<Rational> gv(D);
  for (std::uint64_t d = D + 1; d <= 2 * D; ++d) gv[d - D - 1] = g(d);
  auto G = [&](std::uint64_t d) -> const Rational& { return gv[d - D - 1]; };
  // Σ_{D < m n <= 2D} g(m n) for fixed m.
  auto row_sum = [&](std::uint64_t m) {
    Rational w;
    for (std::uint64_t n = D / m + 1; n <= 2 * D / m; ++n) w += G(m * n);
    return w;
  };

  VaughanSums out;
  VaughanSupport& sup = out.support;

  // S1: m <= U, alpha1(m) Σ_n g(mn).
  for (std::uint64_t m = 1; m <= U; ++m) {
    if (co.alpha1(m).is_zero()) continue;
    out.s1.add_scaled(co.alpha1(m), row_sum(m));
    sup.s12_max_m = std::max(sup.s12_max_m, m);
  }

  // S2: m <= U, μ(m) Σ_n g(mn) log n, grouped by n.
  {
    std::vector<Rational> w(2 * D + 1);
    for (std::uint64_t m = 1; m <= U; ++m) {
      int mu = co.alpha2(m);
      if (mu == 0) continue;
      sup.s12_max_m = std::max(sup.s12_max_m, m);
      for (std::uint64_t n = D / m + 1; n <= 2 * D / m; ++n) {
        if (mu > 0) {
          w[n] += G(m * n);
        } else {
          w[n] -= G(m * n);
        }
      }
    }
    SmallestFactorTable spf(2 * D);
    for (std::uint64_t n = 2; n <= 2 * D; ++n) {
      if (w[n].is_zero()) continue;
      spf.factor(n, [&](std::uint64_t p, unsigned k) {
        out.s2.add_term(p, w[n] * Rational(static_cast<long long>(k)));
      });
    }
  }

  // S3: U < m <= U^2, alpha3(m) Σ_n g(mn), alpha4 = 1.
  for (std::uint64_t m = U + 1; m <= U * U; ++m) {
    if (co.alpha3(m).is_zero()) continue;
    out.s3.add_scaled(co.alpha3(m), row_sum(m));
    widen(sup.s3_min_m, sup.s3_max_m, m);
  }

  // S4: m, n > U, μ(m) alpha6(n) g(mn), grouped by n.
  for (std::uint64_t n = U + 1; n <= co.type2_limit; ++n) {
    const auto& a6 = co.alpha6(n);
    if (a6.is_zero()) continue;
    Rational w;
    bool touched = false;
    for (std::uint64_t m = std::max(U + 1, D / n + 1); m <= 2 * D / n; ++m) {
      int mu = co.alpha5(m);
      if (mu == 0) continue;
      if (mu > 0) {
        w += G(m * n);
      } else {
        w -= G(m * n);
      }
      widen(sup.s4_min_m, sup.s4_max_m, m);
      touched = true;
    }
    if (touched) widen(sup.s4_min_n, sup.s4_max_n, n);
    out.s4.add_scaled(a6, w);
  }
  return out;
}

WeightedPrimeLogVector mangoldt_weighted_sum(const ArithmeticFunction& g, std::uint64_t D) {
  if (D == 0) throw std::invalid_argument("mangoldt_weighted_sum: D must be >= 1");
  MangoldtTable lambda(2 * D);
  WeightedPrimeLogVector total;
  for (std::uint64_t d = D + 1; d <= 2 * D; ++d) {
    if (auto e = lambda.entry(d)) total.add_term(e->prime, g(d));
  }
  return total;
}

std::vector<Rational> random_rational_values(std::uint64_t D, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Rational> values;
  values.reserve(D);
  for (std::uint64_t i = 0; i < D; ++i) {
    auto num = rng.next_int(-50, 50);
    auto den = rng.next_int(1, 16);
    values.emplace_back(num, den);
  }
  return values;
}

VaughanCheckReport vaughan_check(std::uint64_t D, std::uint64_t trials, std::uint64_t seed) {
  VaughanCheckReport report;
  report.D = D;
  report.trials = trials;
  report.seed = seed;
  VaughanCoefficients co = build_coefficients(D);
  report.max_coefficient_ratio = co.max_coefficient_ratio();
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto values = random_rational_values(D, seed + t);
    ArithmeticFunction g = [&](std::uint64_t d) { return values[d - D - 1]; };
    VaughanSums sums = vaughan_sum(g, co);
    if (!(sums.total() - mangoldt_weighted_sum(g, D)).is_zero()) ++report.failures;
  }
  return report;
}

}  // namespace lamfloor
