// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "lamfloor/arith/primality.hpp"
#include "lamfloor/arith/sawtooth.hpp"
#include "lamfloor/arith/sieve.hpp"
#include "lamfloor/cli.hpp"
#include "lamfloor/constant.hpp"
#include "lamfloor/exponent.hpp"
#include "lamfloor/expsum.hpp"
#include "lamfloor/floorsum.hpp"
#include "lamfloor/rng.hpp"
#include "lamfloor/vaaler.hpp"
#include "lamfloor/vaughan.hpp"

using namespace lamfloor;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

double rel_diff(double a, double b) {
  double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

GrowthTerm term(long long a, long long b, long long c, long long d) { return {Rational(a, b), Rational(c, d)}; }

// Shared between the enclosure and error-scan criteria.
std::vector<Enclosure> g_enclosures;

void ac1(Outcome& o) {
  ExponentPair p13(Rational(13, 84), Rational(55, 84));
  ExponentPair half(Rational(1, 2), Rational(1, 2));
  Rational e1 = bordelles_exponent(p13);
  Rational e2 = bordelles_exponent(ExponentPair(Rational(0), Rational(1, 2)));
  BoundExpr expr = prop41_bound(half, half);
  Rational nu = optimize_split(expr.terms().front()).nu;
  Rational edge = window_edge(expr.terms()[0], expr.terms()[2]);
  o.require(e1 == Rational(97, 203), "(13/84,55/84) exponent " + e1.str());
  o.require(e2 == Rational(28, 59), "(0,1/2) exponent " + e2.str());
  o.require(nu == Rational(9, 19), "split optimum " + nu.str());
  o.require(edge == Rational(6, 13), "window edge " + edge.str());
  std::vector<GrowthTerm> four{term(1, 6, 7, 12), term(0, 1, 5, 6), term(1, 3, 2, 9), term(1, 2, -1, 6)};
  o.require(expr.terms() == four, "bound monomials");
  o.require(Rational(9, 19) < Rational(28, 59) && Rational(28, 59) < Rational(97, 203), "ordering");
  o.detail << " 97/203=" << e1 << " 28/59=" << e2 << " nu=" << nu << " edge=" << edge;
}

void ac2(Outcome& o) {
  std::uint64_t checks = 0;
  for (std::uint64_t D : {125ULL, 1000ULL, 4096ULL, 10000ULL}) {
    VaughanCoefficients coeffs = build_coefficients(D);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto values = random_rational_values(D, seed);
      ArithmeticFunction g = [&](std::uint64_t d) { return values[d - D - 1]; };
      WeightedPrimeLogVector lhs;
      for (std::uint64_t d = D + 1; d <= 2 * D; ++d) {
        if (auto pp = prime_power(d)) lhs.add_term(pp->prime, g(d));
      }
      bool same = vaughan_sum(g, coeffs).total() == lhs;
      o.require(same, "D=" + std::to_string(D) + " seed=" + std::to_string(seed));
      ++checks;
    }
  }
  o.detail << " " << checks << " exact identities";
}

void ac3(Outcome& o) {
  MangoldtTable table(10000000);
  double worst_small = 0.0;
  for (std::uint64_t x = 1; x <= 10000; ++x) {
    double r = rel_diff(s_lambda_blocks(x), s_lambda_direct(x, table));
    worst_small = std::max(worst_small, r);
  }
  o.require(worst_small <= 1e-10, "exhaustive range");
  double worst_large = 0.0;
  for (std::uint64_t x : {100000ULL, 1000000ULL, 10000000ULL}) {
    worst_large = std::max(worst_large, rel_diff(s_lambda_blocks(x), s_lambda_direct(x, table)));
  }
  o.require(worst_large <= 1e-9, "large x");
  o.detail << " max rel diff x<=1e4: " << worst_small << ", x in {1e5,1e6,1e7}: " << worst_large;
}

void ac4(Outcome& o) {
  const std::uint64_t x7 = 10000000;
  mpz_class x7_pow9, root;
  mpz_ui_pow_ui(x7_pow9.get_mpz_t(), x7, 9);
  mpz_root(root.get_mpz_t(), x7_pow9.get_mpz_t(), 19);  // floor(x^(9/19))
  const std::uint64_t n = root.get_ui();
  double worst = 0.0;
  for (auto [x, N] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{10000, 21}, {1000000, 1000}, {x7, n}}) {
    double r = rel_diff(s2_via_psi(x, N), split_sum(x, N).s2);
    o.require(r <= 1e-9, "x=" + std::to_string(x) + " N=" + std::to_string(N));
    worst = std::max(worst, r);
  }
  o.detail << " N(1e7)=" << n << ", max rel diff " << worst;
}

void ac5(Outcome& o) {
  double prev = INFINITY;
  for (std::uint32_t H : {1u, 10u, 100u, 1000u}) {
    VaalerCheckReport r = vaaler_check({H}, 10000, 20240601);
    o.require(r.violations == 0, "violations at H=" + std::to_string(H));
    o.require(r.max_remainder < prev, "max |R_H| not decreasing at H=" + std::to_string(H));
    prev = r.max_remainder;
    o.detail << " H=" << H << ":max|R|=" << r.max_remainder;
  }
}

void ac6(Outcome& o) {
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {0.5, 1.0}, {1.5, 0.5}}) {
    double at8 = 0.0, at32 = 0.0;
    for (std::uint32_t K : {8u, 16u, 32u}) {
      double mn = static_cast<double>(K) * K;
      for (double delta : {0.0, 1.0 / mn, 1.0 / std::sqrt(mn), 1.0}) {
        double r = lemma21_ratio({a, b, K, K, delta});
        o.require(std::isfinite(r), "finite ratio");
        if (K == 8) at8 = std::max(at8, r);
        if (K == 32) at32 = std::max(at32, r);
      }
    }
    o.require(at32 <= 4.0 * at8, "growth at alpha=" + std::to_string(a));
    o.detail << " (" << a << "," << b << "): " << at8 << "->" << at32;
  }
}

void ac7(Outcome& o) {
  BoundScanGrid g;
  g.H = g.M = g.N = {4, 8, 16};
  g.X = {10, 100, 1000};
  g.delta = {0, 1};
  for (std::uint64_t s = 1; s <= 10; ++s) g.seeds.push_back(s);
  BoundScanReport r = bound_ratio_scan(g, 0);
  for (const auto& row : r.rows) o.require(row.value_abs <= 10.0 * row.bound1, "instance above 10x bound");
  ExpSumInstance single;
  double ratio = std::abs(eval_s_delta(single)) / prop31_bound(single, std::nullopt, 1);
  o.require(ratio == 0.25, "single-term ratio");
  o.detail << " " << r.rows.size() << " instances, max ratio " << r.max_ratio1 << ", median " << r.median_ratio1
           << ", single-term ratio " << ratio;
}

void ac8(Outcome& o) {
  std::vector<std::uint64_t> depths{100000, 1000000, 10000000, 100000000, 1000000000};
  g_enclosures = constant_enclosures(depths);
  const auto& e8 = g_enclosures[3];
  const auto& e9 = g_enclosures[4];
  o.require(e8.width() <= 2.1e-8, "width at 1e8");
  o.require(e9.width() <= 2.1e-9, "width at 1e9");
  o.require(e8.overlaps(e9), "1e8/1e9 overlap");
  for (std::size_t i = 1; i < 4; ++i) o.require(g_enclosures[i].lo > g_enclosures[i - 1].lo, "monotone lo");
  char buf[160];
  std::snprintf(buf, sizeof buf, " c in [%.12f, %.12f], widths %.3g / %.3g", e9.lo, e9.hi, e8.width(), e9.width());
  o.detail << buf;
}

std::string g_scan_output;
std::string g_baseline;

void ac9(Outcome& o) {
  if (g_enclosures.size() < 5) g_enclosures = constant_enclosures(std::vector<std::uint64_t>{1000000000});
  const Enclosure& c = g_enclosures.back();
  auto grid = geometric_grid(10000, 1000000000, 40);
  ErrorScanResult r = error_scan(grid, c, 0);
  cli::Table t;
  t.columns = {"x", "s_lambda", "c_times_x", "error", "ratio_919", "ratio_half"};
  double worst = 0.0;
  for (const auto& s : r.samples) {
    o.require(std::fabs(s.error) <= 5.0 * std::sqrt(static_cast<double>(s.x)), "|E| <= 5 sqrt(x)");
    o.require(std::isfinite(s.ratio_919), "finite ratio_919");
    worst = std::max(worst, s.ratio_half);
    t.rows.push_back({s.x, s.s_lambda, s.c_times_x, s.error, s.ratio_919, s.ratio_half});
  }
  o.require(r.slope <= 0.55, "slope");
  std::ostringstream csv;
  cli::write_csv(csv, t);
  if (!g_scan_output.empty()) std::ofstream(g_scan_output, std::ios::binary) << csv.str();

  std::ifstream base(g_baseline);
  o.require(static_cast<bool>(base), "baseline missing at " + g_baseline);
  if (base) {
    std::string header, line;
    std::getline(base, header);
    o.require(header == "x,s_lambda,c_times_x,error,ratio_919,ratio_half", "baseline header");
    std::size_t i = 0;
    while (std::getline(base, line) && i < r.samples.size()) {
      unsigned long long x = 0;
      double s = 0, cx = 0, e = 0;
      if (std::sscanf(line.c_str(), "%llu,%lf,%lf,%lf", &x, &s, &cx, &e) != 4) break;
      const auto& cur = r.samples[i++];
      bool ok = x == cur.x && rel_diff(s, cur.s_lambda) <= 1e-12 &&
                std::fabs(e - cur.error) <= 1e-3 * std::sqrt(static_cast<double>(x));
      o.require(ok, "baseline row " + std::to_string(i));
    }
    o.require(i == r.samples.size(), "baseline row count");
  }
  o.detail << " slope " << r.slope << ", max |E|/sqrt(x) " << worst;
}

void ac10(Outcome& o) {
  ExponentPair half(Rational(1, 2), Rational(1, 2));
  BoundExpr expr = prop41_bound(half, half);
  auto absorb = dominance_window(expr, expr.terms().front(), Rational(6, 13), Rational(2, 3));
  o.require(absorb.holds, "absorption on [6/13, 2/3]");
  BoundExpr with_leader({term(0, 1, 5, 6), term(-1, 3, 2, 3), term(-1, 1, 2, 1)});
  auto triv = dominance_window(with_leader, term(0, 1, 5, 6), Rational(0), Rational(2, 3));
  o.require(triv.holds, "trivial terms below D^(5/6) on [0, 2/3]");
  std::size_t checks = absorb.checks.size() + triv.checks.size();
  for (const auto& c : triv.checks) o.require(c.term_exponent <= c.leader_exponent, "certificate entry");
  o.detail << " " << checks << " endpoint comparisons";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lamfloor acceptance suite"};
  g_baseline = LAMFLOOR_BASELINE_CSV;
  app.add_option("--baseline", g_baseline, "Committed error-scan baseline CSV");
  app.add_option("--scan-output", g_scan_output, "Where to write this run's error-scan CSV");
  std::vector<std::string> only;
  app.add_option("--only", only, "Run only these criteria (e.g. AC3)")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria{
      {"AC1", "exact exponent reproductions", 1, ac1},
      {"AC2", "Vaughan identity exactness", 60, ac2},
      {"AC3", "block method matches direct method", 120, ac3},
      {"AC4", "S_2 counting identity", 60, ac4},
      {"AC5", "Vaaler inequality", 30, ac5},
      {"AC6", "proximity counts, uniform constant", 300, ac6},
      {"AC7", "triple exponential sum bound", 60, ac7},
      {"AC8", "constant enclosure", 600, ac8},
      {"AC9", "error-term scan", 300, ac9},
      {"AC10", "dominance certificates", 1, ac10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail << " [over time budget " << c.budget_seconds << " s]";
    }
    if (!o.pass) ++failures;
    std::printf("%-4s %s  %s (%.2f s):%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
