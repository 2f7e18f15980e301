#include "lamfloor/floorsum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lamfloor/arith/primality.hpp"
#include "lamfloor/arith/sawtooth.hpp"
#include "lamfloor/arith/summation.hpp"

namespace lamfloor {

namespace {

constexpr std::uint64_t kMaxX = std::uint64_t{1} << 62;

double grouped_total(const std::map<std::uint64_t, std::uint64_t>& counts) {
  NeumaierSum acc;
  for (const auto& [p, count] : counts) {
    acc.add(static_cast<double>(count) * std::log(static_cast<double>(p)));
  }
  return acc.value();
}

// Σ_{n_from <= n <= n_to} Λ([x/n]) over clipped blocks.
double block_range_sum(std::uint64_t x, std::uint64_t n_from, std::uint64_t n_to) {
  NeumaierSum acc;
  for (std::uint64_t n = n_from; n <= n_to;) {
    std::uint64_t q = x / n;
    std::uint64_t n_hi = std::min(x / q, n_to);
    double lam = mangoldt_single(q);
    if (lam != 0.0) acc.add(static_cast<double>(n_hi - n + 1) * lam);
    n = n_hi + 1;
  }
  return acc.value();
}

bool is_integral(double v) { return std::floor(v) == v && std::fabs(v) < 0x1.0p53; }

template <class LambdaFn>
double frak_s_delta_impl(std::uint64_t x, std::uint64_t D, double delta, LambdaFn&& lambda_of) {
  if (D == 0) throw std::invalid_argument("frak_s_delta: D must be >= 1");
  if (!std::isfinite(delta)) throw std::invalid_argument("frak_s_delta: delta must be finite");
  const bool integral = is_integral(delta);
  const auto idelta = integral ? static_cast<std::int64_t>(delta) : 0;
  if (integral) {
    // d + delta = 0 for some d in (D, 2D].
    std::int64_t lo = static_cast<std::int64_t>(D) + 1 + idelta;
    std::int64_t hi = static_cast<std::int64_t>(2 * D) + idelta;
    if (lo <= 0 && hi >= 0) {
      throw std::invalid_argument("frak_s_delta: d + delta vanishes inside (D, 2D]");
    }
  }
  NeumaierSum acc;
  for (std::uint64_t d = D + 1; d <= 2 * D; ++d) {
    double lam = lambda_of(d);
    if (lam == 0.0) continue;
    double psi = integral
                     ? psi_saw_quotient(static_cast<std::int64_t>(x), static_cast<std::int64_t>(d) + idelta)
                     : psi_saw(static_cast<double>(x) / (static_cast<double>(d) + delta));
    acc.add(lam * psi);
  }
  return acc.value();
}

}  // namespace

BlockDecomposition enumerate_blocks(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("enumerate_blocks: x must be >= 1");
  BlockDecomposition blocks;
  blocks.reserve(static_cast<std::size_t>(2 * isqrt(x) + 2));
  for_each_block(x, 1, [&](const Block& b) { blocks.push_back(b); });
  return blocks;
}

double s_lambda_direct(std::uint64_t x, const MangoldtTable& table, Accumulation mode) {
  if (x == 0) throw std::invalid_argument("s_lambda_direct: x must be >= 1");
  if (table.limit() < x) {
    throw std::invalid_argument("s_lambda_direct: table limit " + std::to_string(table.limit()) +
                                " is below x = " + std::to_string(x));
  }
  if (mode == Accumulation::grouped) {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t n = 1; n <= x; ++n) {
      if (auto e = table.entry(x / n)) ++counts[e->prime];
    }
    return grouped_total(counts);
  }
  NeumaierSum acc;
  for (std::uint64_t n = 1; n <= x; ++n) {
    double lam = table.value(x / n);
    if (lam != 0.0) acc.add(lam);
  }
  return acc.value();
}

double s_lambda_blocks(std::uint64_t x, Accumulation mode) {
  if (x == 0 || x > kMaxX) throw std::invalid_argument("s_lambda_blocks: x out of range");
  if (mode == Accumulation::grouped) {
    std::map<std::uint64_t, std::uint64_t> counts;
    for_each_block(x, 1, [&](const Block& b) {
      if (auto pp = prime_power(b.q)) counts[pp->prime] += b.length();
    });
    return grouped_total(counts);
  }
  return block_range_sum(x, 1, x);
}

SplitSum split_sum(std::uint64_t x, std::uint64_t N) {
  if (x == 0 || x > kMaxX) throw std::invalid_argument("split_sum: x out of range");
  if (N == 0 || N > x) throw std::invalid_argument("split_sum: need 1 <= N <= x");
  return SplitSum{block_range_sum(x, 1, N), N < x ? block_range_sum(x, N + 1, x) : 0.0};
}

Rational psi_count_exact(std::uint64_t x, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("psi_count_exact: d must be >= 1");
  auto sx = static_cast<long long>(x);
  auto sd = static_cast<long long>(d);
  const Rational half(1, 2);
  Rational psi_d = Rational(sx % sd, sd) - half;
  Rational psi_d1 = Rational(sx % (sd + 1), sd + 1) - half;
  return Rational(sx, sd) - Rational(sx, sd + 1) - psi_d + psi_d1;
}

double s2_via_psi(std::uint64_t x, std::uint64_t N, const MangoldtTable& table) {
  if (x == 0 || x > kMaxX) throw std::invalid_argument("s2_via_psi: x out of range");
  if (N == 0 || N > x) throw std::invalid_argument("s2_via_psi: need 1 <= N <= x");
  const std::uint64_t d0 = x / N;
  if (table.limit() < d0) throw std::invalid_argument("s2_via_psi: table limit below x/N");
  const auto sx = static_cast<std::int64_t>(x);
  const auto fx = static_cast<double>(x);
  NeumaierSum acc;
  for (std::uint64_t d = 1; d < d0; ++d) {
    double lam = table.value(d);
    if (lam == 0.0) continue;
    auto sd = static_cast<std::int64_t>(d);
    double upper = fx / static_cast<double>(d) - psi_saw_quotient(sx, sd);
    double lower = fx / static_cast<double>(d + 1) - psi_saw_quotient(sx, sd + 1);
    acc.add(lam * (upper - lower));
  }
  double lam0 = table.value(d0);
  if (lam0 != 0.0) acc.add(lam0 * static_cast<double>(x / d0 - N));
  return acc.value();
}

double s2_via_psi(std::uint64_t x, std::uint64_t N) {
  if (N == 0 || N > x) throw std::invalid_argument("s2_via_psi: need 1 <= N <= x");
  return s2_via_psi(x, N, MangoldtTable(std::max<std::uint64_t>(1, x / N)));
}

double frak_s_delta(std::uint64_t x, std::uint64_t D, double delta) {
  return frak_s_delta_impl(x, D, delta, [](std::uint64_t d) { return mangoldt_single(d); });
}

double frak_s_delta(std::uint64_t x, std::uint64_t D, double delta, const MangoldtTable& table) {
  if (table.limit() < 2 * D) throw std::invalid_argument("frak_s_delta: table limit below 2D");
  return frak_s_delta_impl(x, D, delta, [&](std::uint64_t d) { return table.value(d); });
}

double required_enclosure_width(std::uint64_t x_max) {
  return 1e-3 / std::sqrt(static_cast<double>(x_max));
}

ErrorScanResult error_scan(std::span<const std::uint64_t> x_grid, const Enclosure& c, unsigned threads) {
  if (x_grid.empty()) throw std::invalid_argument("error_scan: empty grid");
  if (!std::is_sorted(x_grid.begin(), x_grid.end()) || x_grid.front() == 0) {
    throw std::invalid_argument("error_scan: grid must be ascending and >= 1");
  }
  if (x_grid.back() > kMaxX) throw std::invalid_argument("error_scan: x exceeds 2^62");
  const double need = required_enclosure_width(x_grid.back());
  if (!(c.width() <= need)) {
    std::ostringstream msg;
    msg << "error_scan: enclosure width " << c.width() << " too wide for x_max = " << x_grid.back()
        << "; required width <= " << need;
    throw std::invalid_argument(msg.str());
  }

  ErrorScanResult result;
  result.samples.resize(x_grid.size());
  const double mid = c.midpoint();
  const double half_width = 0.5 * c.width();

  auto work = [&](std::size_t i) {
    std::uint64_t x = x_grid[i];
    double fx = static_cast<double>(x);
    ErrorSample& s = result.samples[i];
    s.x = x;
    s.s_lambda = s_lambda_blocks(x);
    s.c_times_x = mid * fx;
    s.error = s.s_lambda - s.c_times_x;
    s.ratio_919 = std::fabs(s.error) / std::pow(fx, 9.0 / 19.0);
    s.ratio_half = std::fabs(s.error) / std::sqrt(fx);
    s.uncertainty = half_width * fx;
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, x_grid.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < x_grid.size(); ++i) work(i);
  } else {
    // Each slot is written by exactly one worker, so output order is the grid order.
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < x_grid.size(); i = next++) work(i);
      });
    }
  }

  std::vector<double> lx;
  std::vector<double> le;
  for (const ErrorSample& s : result.samples) {
    if (s.error == 0.0) continue;
    lx.push_back(std::log(static_cast<double>(s.x)));
    le.push_back(std::log(std::fabs(s.error)));
  }
  result.fitted_points = lx.size();
  result.slope = lx.size() >= 2 ? least_squares_slope(lx, le) : 0.0;
  return result;
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t lo, std::uint64_t hi, std::size_t points) {
  if (lo == 0 || hi < lo || points == 0) throw std::invalid_argument("geometric_grid: bad range");
  std::vector<std::uint64_t> grid;
  if (points == 1 || lo == hi) return {lo};
  const long double log_ratio = std::log(static_cast<long double>(hi) / static_cast<long double>(lo));
  for (std::size_t i = 0; i < points; ++i) {
    std::uint64_t x;
    if (i == 0) {
      x = lo;
    } else if (i + 1 == points) {
      x = hi;
    } else {
      long double t = static_cast<long double>(i) / static_cast<long double>(points - 1);
      x = static_cast<std::uint64_t>(std::llround(static_cast<long double>(lo) * std::exp(t * log_ratio)));
    }
    if (grid.empty() || x > grid.back()) grid.push_back(x);
  }
  return grid;
}

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("least_squares_slope: need >= 2 paired points");
  }
  double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("least_squares_slope: degenerate abscissae");
  return sxy / sxx;
}

}  // namespace lamfloor
