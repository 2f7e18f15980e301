#include "lamfloor/vaaler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lamfloor/arith/sawtooth.hpp"
#include "lamfloor/rng.hpp"
#include "lamfloor/simd/kernels.hpp"

namespace lamfloor {

namespace {

void validate(VaalerParams params) {
  if (params.H < 1) throw std::invalid_argument("Vaaler: H must be >= 1");
}

std::vector<double> sine_weights(VaalerParams params) {
  const double h_plus_1 = static_cast<double>(params.H) + 1.0;
  std::vector<double> w(params.H);
  for (std::uint32_t h = 1; h <= params.H; ++h) {
    w[h - 1] = -phi_weight(h / h_plus_1) / (std::numbers::pi * h);
  }
  return w;
}

}  // namespace

double phi_weight(double t) {
  double a = std::fabs(t);
  if (!(a < 1.0)) throw std::invalid_argument("phi_weight: need |t| < 1");
  if (a == 0.0) return 1.0;
  double pt = std::numbers::pi * a;
  return pt * (1.0 - a) * std::cos(pt) / std::sin(pt) + a;
}

double psi_vaaler(double x, VaalerParams params) {
  validate(params);
  const double h_plus_1 = static_cast<double>(params.H) + 1.0;
  // Reduce to [0, 1) first; the series is 1-periodic.
  double r = x - std::floor(x);
  double sum = 0.0;
  for (std::uint32_t h = params.H; h >= 1; --h) {
    sum += phi_weight(h / h_plus_1) * std::sin(2.0 * std::numbers::pi * h * r) / (std::numbers::pi * h);
  }
  return -sum;
}

void psi_vaaler_batch(std::span<const double> xs, VaalerParams params, std::span<double> out) {
  validate(params);
  if (out.size() < xs.size()) throw std::invalid_argument("psi_vaaler_batch: output too small");
  std::vector<double> reduced(xs.size());
  std::transform(xs.begin(), xs.end(), reduced.begin(), [](double x) { return x - std::floor(x); });
  auto w = sine_weights(params);
  simd::sine_series(reduced, w, out);
}

double fejer_bound_direct(double x, VaalerParams params) {
  validate(params);
  const double h_plus_1 = static_cast<double>(params.H) + 1.0;
  double r = x - std::floor(x);
  double sum = 1.0;
  for (std::uint32_t h = 1; h <= params.H; ++h) {
    sum += 2.0 * (1.0 - h / h_plus_1) * std::cos(2.0 * std::numbers::pi * h * r);
  }
  return std::max(0.0, sum) / (2.0 * h_plus_1);
}

double fejer_bound(double x, VaalerParams params) {
  validate(params);
  const double h_plus_1 = static_cast<double>(params.H) + 1.0;
  double r = x - std::floor(x);
  double s = std::sin(std::numbers::pi * r);
  if (std::fabs(s) < 1e-9) return fejer_bound_direct(x, params);
  // (H+1) r is reduced modulo 2 before scaling by π to keep the argument small.
  double num_arg = std::fmod(h_plus_1 * r, 2.0);
  double q = std::sin(std::numbers::pi * num_arg) / s;
  return q * q / (h_plus_1 * 2.0 * h_plus_1);
}

VaalerCheckReport vaaler_check(VaalerParams params, std::uint64_t samples, std::uint64_t seed) {
  validate(params);
  VaalerCheckReport report;
  report.H = params.H;
  report.samples = samples;
  report.seed = seed;
  report.min_slack = std::numeric_limits<double>::infinity();

  SplitMix64 rng(seed);
  std::vector<double> xs;
  xs.reserve(samples);
  while (xs.size() < samples) {
    double x = rng.next_unit();
    if (x > 0.0) xs.push_back(x);
  }
  std::vector<double> approx(xs.size());
  psi_vaaler_batch(xs, params, approx);

  report.max_slack = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double remainder = std::fabs(psi_saw(xs[i]) - approx[i]);
    double bound = fejer_bound(xs[i], params);
    double slack = bound - remainder;
    report.max_remainder = std::max(report.max_remainder, remainder);
    report.max_slack = std::max(report.max_slack, slack);
    report.min_slack = std::min(report.min_slack, slack);
    if (remainder > bound + kVaalerTolerance) ++report.violations;
  }
  if (xs.empty()) {
    report.min_slack = 0.0;
    report.max_slack = 0.0;
  }
  return report;
}

}  // namespace lamfloor
