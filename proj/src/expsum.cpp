#include "lamfloor/expsum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "lamfloor/arith/summation.hpp"
#include "lamfloor/rng.hpp"
#include "lamfloor/simd/kernels.hpp"

namespace lamfloor {

namespace {

std::complex<double> unit_phase(double t) {
  double r = t - std::nearbyint(t);
  double angle = 2.0 * std::numbers::pi * r;
  return {std::cos(angle), std::sin(angle)};
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

// (m/m~)^e for m, m~ in (K, 2K], row-major.
std::vector<double> dyadic_ratios(std::uint32_t K, double e) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(K) * K);
  for (std::uint64_t m = K + 1; m <= 2ULL * K; ++m) {
    for (std::uint64_t mt = K + 1; mt <= 2ULL * K; ++mt) {
      double r = static_cast<double>(m) / static_cast<double>(mt);
      out.push_back(e == 1.0 ? r : std::pow(r, e));
    }
  }
  return out;
}

}  // namespace

bool ExpSumInstance::height_feasible() const {
  return static_cast<double>(H) <= std::pow(static_cast<double>(M), beta - 1.0) * std::pow(static_cast<double>(N), gamma);
}

Coefficients make_coefficients(const ExpSumInstance& inst) {
  Coefficients c;
  c.H = inst.H;
  c.M = inst.M;
  const std::size_t na = static_cast<std::size_t>(inst.H) * inst.M;
  if (inst.source == CoefficientSource::all_ones) {
    c.a.assign(na, {1.0, 0.0});
    c.b.assign(inst.N, {1.0, 0.0});
    return c;
  }
  SplitMix64 rng(inst.seed);
  c.a.reserve(na);
  for (std::size_t i = 0; i < na; ++i) c.a.push_back(unit_phase(rng.next_unit()));
  c.b.reserve(inst.N);
  for (std::uint32_t i = 0; i < inst.N; ++i) c.b.push_back(unit_phase(rng.next_unit()));
  return c;
}

std::complex<double> eval_s_delta(const ExpSumInstance& inst) {
  return eval_s_delta(inst, make_coefficients(inst));
}

std::complex<double> eval_s_delta(const ExpSumInstance& inst, const Coefficients& coeffs) {
  if (inst.H < 1 || inst.M < 1 || inst.N < 1) throw std::invalid_argument("eval_s_delta: H, M, N must be >= 1");
  if (coeffs.a.size() != static_cast<std::size_t>(inst.H) * inst.M || coeffs.b.size() != inst.N) {
    throw std::invalid_argument("eval_s_delta: coefficient shape mismatch");
  }
  const double scale = inst.X * std::pow(static_cast<double>(inst.M), inst.beta) *
                       std::pow(static_cast<double>(inst.N), inst.gamma) /
                       std::pow(static_cast<double>(inst.H), inst.alpha);
  // Denominators m^β n^γ + δ, precomputed and checked before summing.
  std::vector<double> denom(static_cast<std::size_t>(inst.M) * inst.N);
  for (std::uint32_t mi = 0; mi < inst.M; ++mi) {
    double mb = std::pow(static_cast<double>(inst.M + 1 + mi), inst.beta);
    for (std::uint32_t ni = 0; ni < inst.N; ++ni) {
      double v = mb * std::pow(static_cast<double>(inst.N + 1 + ni), inst.gamma) + inst.delta;
      if (v == 0.0) throw std::invalid_argument("eval_s_delta: m^beta n^gamma + delta vanishes");
      denom[static_cast<std::size_t>(mi) * inst.N + ni] = v;
    }
  }

  ComplexNeumaierSum acc;
  for (std::uint32_t hi = 0; hi < inst.H; ++hi) {
    double top = scale * std::pow(static_cast<double>(inst.H + 1 + hi), inst.alpha);
    for (std::uint32_t mi = 0; mi < inst.M; ++mi) {
      const std::complex<double> a = coeffs.a_at(hi, mi);
      if (a == 0.0) continue;
      for (std::uint32_t ni = 0; ni < inst.N; ++ni) {
        double phase = top / denom[static_cast<std::size_t>(mi) * inst.N + ni];
        acc.add(a * coeffs.b[ni] * unit_phase(phase));
      }
    }
  }
  return acc.value();
}

double prop31_bound(const ExpSumInstance& inst, const std::optional<ExponentPair>& pair, int variant) {
  const double X = inst.X;
  const double H = inst.H;
  const double M = inst.M;
  const double N = inst.N;
  const double tail = H * M * std::sqrt(N) + std::sqrt(H * M) * N + H * M * N / std::sqrt(X);
  if (variant == 1) return std::sqrt(X * H * M * N) + tail;
  if (variant != 2) throw std::invalid_argument("prop31_bound: variant must be 1 or 2");
  if (!pair) throw std::invalid_argument("prop31_bound: variant 2 needs an exponent pair");
  const double k = pair->kappa().to_double();
  const double l = pair->lambda().to_double();
  double inner = std::pow(X, k) * std::pow(H, 2.0 + k) * std::pow(M, 2.0 + k) * std::pow(N, 1.0 + k + l);
  return std::pow(inner, 1.0 / (2.0 + 2.0 * k)) + tail;
}

ProximityCount count_proximity_detailed(const ProximityQuery& q) {
  if (q.M < 1 || q.N < 1) throw std::invalid_argument("count_proximity: M, N must be >= 1");
  if (q.alpha == 0.0 || q.beta == 0.0) throw std::invalid_argument("count_proximity: alpha, beta must be nonzero");
  if (!(q.Delta >= 0.0)) throw std::invalid_argument("count_proximity: Delta must be >= 0");
  double mn = static_cast<double>(q.M) * static_cast<double>(q.N);
  if (mn * mn > 1e9) {
    throw std::invalid_argument("count_proximity: (MN)^2 = " + std::to_string(mn * mn) +
                                " exceeds the brute-force limit 1e9");
  }
  auto left = dyadic_ratios(q.M, q.alpha);
  auto right = dyadic_ratios(q.N, q.beta);
  ProximityCount out;
  out.count = simd::count_within(left, right, q.Delta * (1.0 + 1e-12) + kProximityTieTolerance);
  out.count_low = simd::count_within(left, right, q.Delta * (1.0 - 1e-12) + kProximityTieTolerance);
  return out;
}

std::uint64_t count_proximity(const ProximityQuery& q) { return count_proximity_detailed(q).count; }

double lemma21_ratio(const ProximityQuery& q) {
  double mn = static_cast<double>(q.M) * static_cast<double>(q.N);
  double denom = mn * std::log(2.0 * mn) + q.Delta * mn * mn;
  return static_cast<double>(count_proximity(q)) / denom;
}

BoundScanReport bound_ratio_scan(const BoundScanGrid& grid, unsigned threads) {
  const ExponentPair pair = grid.pair.value_or(ExponentPair(Rational(1, 2), Rational(1, 2)));
  BoundScanReport report;
  for (std::uint32_t H : grid.H) {
    for (std::uint32_t M : grid.M) {
      for (std::uint32_t N : grid.N) {
        for (double X : grid.X) {
          for (double delta : grid.delta) {
            for (std::uint64_t seed : grid.seeds) {
              ExpSumInstance inst{grid.alpha, grid.beta, grid.gamma, delta, X, H, M, N, grid.source, seed};
              if (!inst.height_feasible() || !inst.delta_feasible() || !(X > 0.0)) {
                ++report.excluded;
                continue;
              }
              BoundScanRow row;
              row.instance = inst;
              report.rows.push_back(row);
            }
          }
        }
      }
    }
  }
  if (report.rows.empty()) throw std::invalid_argument("bound_ratio_scan: no feasible instance in grid");

  auto work = [&](std::size_t i) {
    BoundScanRow& row = report.rows[i];
    row.value = eval_s_delta(row.instance);
    row.value_abs = std::abs(row.value);
    row.bound1 = prop31_bound(row.instance, std::nullopt, 1);
    row.bound2 = prop31_bound(row.instance, pair, 2);
    row.ratio1 = row.value_abs / row.bound1;
    row.ratio2 = row.value_abs / row.bound2;
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < report.rows.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < report.rows.size(); i = next++) work(i);
      });
    }
  }

  std::vector<double> r1;
  std::vector<double> r2;
  for (const auto& row : report.rows) {
    r1.push_back(row.ratio1);
    r2.push_back(row.ratio2);
  }
  report.max_ratio1 = *std::max_element(r1.begin(), r1.end());
  report.max_ratio2 = *std::max_element(r2.begin(), r2.end());
  report.median_ratio1 = median(r1);
  report.median_ratio2 = median(r2);
  return report;
}

}  // namespace lamfloor
