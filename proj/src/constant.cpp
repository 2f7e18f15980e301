#include "lamfloor/constant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lamfloor/arith/sieve.hpp"
#include "lamfloor/arith/summation.hpp"
#include "lamfloor/simd/kernels.hpp"

namespace lamfloor {

namespace {

constexpr double kUnitRoundoff = 0x1.0p-53;

// Rounding slack for a compensated sum of `terms` positive terms, each
// evaluated with relative error below 5u (log, product, quotient, scaling).
double rounding_slack(std::uint64_t terms, double sum) {
  double n = static_cast<double>(terms);
  return (16.0 * kUnitRoundoff + n * n * kUnitRoundoff * kUnitRoundoff) * sum;
}

}  // namespace

double tail_bound(std::uint64_t depth) {
  if (depth < 2) throw std::invalid_argument("tail_bound: depth must be >= 2");
  return 2.0 * kChebyshevA / static_cast<double>(depth);
}

std::vector<Enclosure> constant_enclosures(std::span<const std::uint64_t> depths) {
  if (depths.empty()) return {};
  for (std::uint64_t depth : depths) {
    if (depth < 2) throw std::invalid_argument("constant_enclosure: depth must be >= 2");
  }
  std::vector<std::uint64_t> checkpoints(depths.begin(), depths.end());
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());

  std::vector<double> partial(checkpoints.size(), 0.0);
  NeumaierSum acc;
  std::size_t next = 0;
  MangoldtSegments segments(checkpoints.back());
  segments.for_each([&](const MangoldtSegment& seg) {
    std::uint64_t first = seg.first;
    std::span<const double> rest = seg.lambda;
    // Split the window at every checkpoint that falls inside it.
    while (next < checkpoints.size() && checkpoints[next] < first + rest.size()) {
      std::size_t take = static_cast<std::size_t>(checkpoints[next] - first + 1);
      acc.add(simd::reciprocal_product_sum(first, rest.first(take)).value());
      partial[next++] = acc.value();
      first += take;
      rest = rest.subspan(take);
    }
    if (!rest.empty()) acc.add(simd::reciprocal_product_sum(first, rest).value());
  });

  std::vector<Enclosure> out;
  out.reserve(depths.size());
  for (std::uint64_t depth : depths) {
    auto it = std::lower_bound(checkpoints.begin(), checkpoints.end(), depth);
    double sum = partial[static_cast<std::size_t>(it - checkpoints.begin())];
    double slack = rounding_slack(depth, sum);
    Enclosure e;
    e.depth = depth;
    e.lo = sum - slack;
    e.hi = sum + slack + tail_bound(depth);
    e.tail_bound_used = "2A/depth with A = 1.03883 (psi(t) <= A t for all t > 0)";
    out.push_back(std::move(e));
  }
  return out;
}

Enclosure constant_enclosure(std::uint64_t depth) {
  std::uint64_t d[1] = {depth};
  return constant_enclosures(d).front();
}

double series_segment(std::uint64_t from, std::uint64_t to) {
  if (to <= from) return 0.0;
  NeumaierSum acc;
  MangoldtSegments segments(to);
  segments.for_each([&](const MangoldtSegment& seg) {
    std::uint64_t last = seg.first + seg.lambda.size() - 1;
    if (last <= from) return;
    std::uint64_t start = std::max(seg.first, from + 1);
    auto window = seg.lambda.subspan(static_cast<std::size_t>(start - seg.first));
    acc.add(simd::reciprocal_product_sum(start, window).value());
  });
  return acc.value();
}

ChebyshevReport chebyshev_scan(std::uint64_t limit, std::uint64_t band_start) {
  if (limit < 2) throw std::invalid_argument("chebyshev_scan: limit must be >= 2");
  ChebyshevReport report;
  report.limit = limit;
  report.band_start = band_start;
  NeumaierSum psi;
  MangoldtSegments segments(limit);
  segments.for_each([&](const MangoldtSegment& seg) {
    for (std::size_t i = 0; i < seg.lambda.size(); ++i) {
      std::uint64_t n = seg.first + i;
      double lam = seg.lambda[i];
      if (lam != 0.0) {
        psi.add(lam);
        // ψ(t)/t is maximal just at jumps.
        double ratio = psi.value() / static_cast<double>(n);
        if (ratio > report.max_ratio) {
          report.max_ratio = ratio;
          report.argmax = n;
        }
      }
      if (n >= band_start) {
        double dev = std::fabs(psi.value() / static_cast<double>(n) - 1.0);
        report.max_band_deviation = std::max(report.max_band_deviation, dev);
      }
    }
  });
  report.psi_at_limit = psi.value();
  return report;
}

double chebyshev_psi(std::uint64_t t) {
  if (t < 2) return 0.0;
  NeumaierSum psi;
  MangoldtSegments(t).for_each([&](const MangoldtSegment& seg) {
    for (double lam : seg.lambda) psi.add(lam);
  });
  return psi.value();
}

}  // namespace lamfloor
