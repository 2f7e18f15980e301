#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamfloor/arith/primality.hpp"
#include "lamfloor/cli.hpp"
#include "lamfloor/constant.hpp"
#include "lamfloor/exponent.hpp"
#include "lamfloor/expsum.hpp"
#include "lamfloor/floorsum.hpp"
#include "lamfloor/simd/kernels.hpp"
#include "lamfloor/vaaler.hpp"
#include "lamfloor/vaughan.hpp"

namespace lamfloor::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Thrown for arguments that pass CLI11 but violate an operation's preconditions.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Accepts "123", "1e9", "10^9".
std::uint64_t parse_count(const std::string& text, const char* flag) {
  auto fail = [&] { throw UsageError(std::string(flag) + ": expected a positive integer, got '" + text + "'"); };
  if (text.empty()) fail();
  if (auto caret = text.find('^'); caret != std::string::npos) {
    std::uint64_t base = parse_count(text.substr(0, caret), flag);
    std::uint64_t exp = parse_count(text.substr(caret + 1), flag);
    std::uint64_t v = saturating_pow(base, static_cast<unsigned>(exp));
    if (v == UINT64_MAX) fail();
    return v;
  }
  if (text.find_first_of("eE.") != std::string::npos) {
    std::size_t used = 0;
    double d = std::stod(text, &used);
    if (used != text.size() || d < 0 || d > 9.2e18 || std::floor(d) != d) fail();
    return static_cast<std::uint64_t>(d);
  }
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    fail();
  }
  if (used != text.size() || text[0] == '-') fail();
  return v;
}

Json term_json(const GrowthTerm& t) {
  return Json{{"a", t.a.str()}, {"b", t.b.str()}, {"a_decimal", round6(t.a.to_double())},
              {"b_decimal", round6(t.b.to_double())}};
}

Json certificate_json(const DominanceCertificate& cert) {
  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    checks.push_back(Json{{"term", term_json(c.term)},
                          {"d", c.d.str()},
                          {"leader_exponent", c.leader_exponent.str()},
                          {"term_exponent", c.term_exponent.str()},
                          {"holds", c.holds}});
  }
  return Json{{"d_lo", cert.d_lo.str()}, {"d_hi", cert.d_hi.str()}, {"holds", cert.holds}, {"checks", checks}};
}

/// Flattens a JSON object of scalars into a one-row table.
Table record_table(const Json& record) {
  Table t;
  std::vector<Cell> row;
  for (const auto& [key, value] : record.items()) {
    t.columns.push_back(key);
    if (value.is_boolean()) {
      row.emplace_back(value.get<bool>());
    } else if (value.is_number_unsigned()) {
      row.emplace_back(value.get<std::uint64_t>());
    } else if (value.is_number_integer()) {
      row.emplace_back(value.get<std::int64_t>());
    } else if (value.is_number()) {
      row.emplace_back(value.get<double>());
    } else if (value.is_string()) {
      row.emplace_back(value.get<std::string>());
    } else {
      row.emplace_back(value.dump());
    }
  }
  t.rows.push_back(std::move(row));
  return t;
}

Json table_json(const Table& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

struct Common {
  std::string output = "-";
  std::string format;
  unsigned threads = 0;
};

class Emitter {
 public:
  Emitter(const Common& common, std::ostream& out) {
    if (common.output != "-" && !common.output.empty()) {
      file_ = std::make_unique<std::ofstream>(common.output, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file '" + common.output + "'");
      os_ = file_.get();
    } else {
      os_ = &out;
    }
  }
  std::ostream& stream() { return *os_; }

  void json(const Json& j) { *os_ << j.dump(2) << '\n'; }
  void record(const Json& j, const std::string& format) {
    if (format == "csv") {
      write_csv(*os_, record_table(j));
    } else {
      json(j);
    }
  }
  void table(const Table& t, const std::string& format) {
    if (format == "json") {
      json(table_json(t));
    } else {
      write_csv(*os_, t);
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

unsigned resolve_threads(unsigned requested) {
  return requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add_common(CLI::App* sub, Common& common, const std::string& default_format, bool tabular) {
  sub->add_option("-o,--output", common.output, "Output path ('-' for stdout)")->capture_default_str();
  common.format = default_format;
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  if (tabular) {
    sub->add_option("--threads", common.threads, "Worker threads (0 = available parallelism)")
        ->capture_default_str();
  }
}

// ---------------------------------------------------------------------------

struct SumArgs {
  Common common;
  std::string x;
  std::string direct_limit = "100000000";
};

int run_sum(const SumArgs& a, std::ostream& out, std::ostream& err) {
  std::uint64_t x = parse_count(a.x, "--x");
  std::uint64_t direct_limit = parse_count(a.direct_limit, "--direct-limit");
  if (x == 0 || x > (std::uint64_t{1} << 62)) throw UsageError("--x must be in [1, 2^62]");
  Stopwatch sw;
  double blocks = s_lambda_blocks(x);
  Json j;
  j["x"] = x;
  j["blocks"] = blocks;
  bool agree = true;
  if (x <= direct_limit) {
    double direct = s_lambda_direct(x, MangoldtTable(x));
    double diff = std::fabs(direct - blocks);
    double rel = direct == 0.0 ? diff : diff / std::fabs(direct);
    agree = rel <= 1e-9;
    j["direct"] = direct;
    j["abs_diff"] = diff;
    j["rel_diff"] = rel;
  } else {
    err << "sum: x exceeds --direct-limit, direct method skipped\n";
    j["direct"] = nullptr;
    j["abs_diff"] = nullptr;
    j["rel_diff"] = nullptr;
  }
  j["agree"] = agree;
  j["blocks_hex"] = hex_float(blocks);
  err << "sum: " << sw.seconds() << " s\n";
  Emitter(a.common, out).record(j, a.common.format);
  return agree ? kExitOk : kExitCheckFailed;
}

struct ScanArgs {
  Common common;
  std::string x_min = "10000";
  std::string x_max = "1000000000";
  std::size_t points = 40;
  std::string depth = "1000000000";
};

int run_error_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  std::uint64_t lo = parse_count(a.x_min, "--x-min");
  std::uint64_t hi = parse_count(a.x_max, "--x-max");
  std::uint64_t depth = parse_count(a.depth, "--depth");
  if (lo == 0 || hi < lo) throw UsageError("need 1 <= --x-min <= --x-max");
  if (a.points == 0) throw UsageError("--points must be >= 1");
  if (depth < 2) throw UsageError("--depth must be >= 2");
  if (tail_bound(depth) > required_enclosure_width(hi)) {
    std::ostringstream msg;
    msg << "--depth " << depth << " gives enclosure width >= " << tail_bound(depth)
        << " but x_max = " << hi << " requires width <= " << required_enclosure_width(hi);
    throw UsageError(msg.str());
  }
  Stopwatch sw;
  Enclosure c = constant_enclosure(depth);
  err << "error-scan: c in [" << hex_float(c.lo) << ", " << hex_float(c.hi) << "] (" << sw.seconds() << " s)\n";
  auto grid = geometric_grid(lo, hi, a.points);
  ErrorScanResult res = error_scan(grid, c, resolve_threads(a.common.threads));

  Table t;
  t.columns = {"x", "s_lambda", "c_times_x", "error", "ratio_919", "ratio_half"};
  for (const auto& s : res.samples) {
    t.rows.push_back({s.x, s.s_lambda, s.c_times_x, s.error, s.ratio_919, s.ratio_half});
  }
  Emitter(a.common, out).table(t, a.common.format);
  double max_unc = res.samples.back().uncertainty;
  err << "error-scan: " << res.samples.size() << " points, slope of log|E| vs log x = " << res.slope
      << " over " << res.fitted_points << " points, max c-uncertainty in E = " << max_unc << ", "
      << sw.seconds() << " s\n";
  return kExitOk;
}

struct ConstantArgs {
  Common common;
  std::string depth = "100000000";
};

int run_constant(const ConstantArgs& a, std::ostream& out, std::ostream& err) {
  std::uint64_t depth = parse_count(a.depth, "--depth");
  if (depth < 2) throw UsageError("--depth must be >= 2");
  Stopwatch sw;
  Enclosure e = constant_enclosure(depth);
  Json j;
  j["depth"] = depth;
  j["lo"] = e.lo;
  j["hi"] = e.hi;
  j["width"] = e.width();
  j["lo_hex"] = hex_float(e.lo);
  j["hi_hex"] = hex_float(e.hi);
  j["width_hex"] = hex_float(e.width());
  j["tail_bound"] = tail_bound(depth);
  j["tail_bound_used"] = e.tail_bound_used;
  err << "constant: " << sw.seconds() << " s\n";
  Emitter(a.common, out).record(j, a.common.format);
  return kExitOk;
}

struct VaalerArgs {
  Common common;
  std::uint32_t H = 0;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

int run_vaaler(const VaalerArgs& a, std::ostream& out, std::ostream& err) {
  if (a.H < 1) throw UsageError("--H must be >= 1");
  Stopwatch sw;
  VaalerCheckReport r = vaaler_check(VaalerParams{a.H}, a.samples, a.seed);
  Json j;
  j["H"] = r.H;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["max_remainder"] = r.max_remainder;
  j["max_slack"] = r.max_slack;
  j["min_slack"] = r.min_slack;
  j["tolerance"] = kVaalerTolerance;
  j["violations"] = r.violations;
  j["passed"] = r.passed();
  err << "vaaler-check: " << sw.seconds() << " s (" << simd::isa_name(simd::active_isa()) << ")\n";
  Emitter(a.common, out).record(j, a.common.format);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

struct VaughanArgs {
  Common common;
  std::uint64_t D = 0;
  std::uint64_t trials = 20;
  std::uint64_t seed = 0;
};

int run_vaughan(const VaughanArgs& a, std::ostream& out, std::ostream& err) {
  if (a.D < 100) throw UsageError("--D must be >= 100");
  Stopwatch sw;
  VaughanCheckReport r = vaughan_check(a.D, a.trials, a.seed);
  Json j;
  j["D"] = r.D;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["failures"] = r.failures;
  j["max_coefficient_ratio"] = r.max_coefficient_ratio;
  j["passed"] = r.passed();
  err << "vaughan-check: " << sw.seconds() << " s\n";
  Emitter(a.common, out).record(j, a.common.format);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

struct ExpsumArgs {
  Common common;
  std::vector<std::uint32_t> H = {4, 8, 16};
  std::vector<std::uint32_t> M = {4, 8, 16};
  std::vector<std::uint32_t> N = {4, 8, 16};
  std::vector<double> X = {10, 100, 1000};
  std::vector<double> delta = {0, 1};
  double alpha = 1, beta = 1, gamma = 1;
  std::uint64_t seeds = 10;
  std::optional<std::uint64_t> seed;
  std::string coeffs = "random";
  std::string pair = "1/2,1/2";
  double max_ratio = 10.0;
};

int run_expsum(const ExpsumArgs& a, std::ostream& out, std::ostream& err) {
  BoundScanGrid g;
  g.alpha = a.alpha;
  g.beta = a.beta;
  g.gamma = a.gamma;
  g.H = a.H;
  g.M = a.M;
  g.N = a.N;
  g.X = a.X;
  g.delta = a.delta;
  g.source = a.coeffs == "ones" ? CoefficientSource::all_ones : CoefficientSource::random_unimodular;
  if (g.source == CoefficientSource::random_unimodular && !a.seed) {
    throw UsageError("--seed is required with random coefficients");
  }
  std::uint64_t base = a.seed.value_or(0);
  std::uint64_t count = g.source == CoefficientSource::all_ones ? 1 : a.seeds;
  for (std::uint64_t i = 0; i < count; ++i) g.seeds.push_back(base + i);
  g.pair = ExponentPair::parse(a.pair);

  Stopwatch sw;
  BoundScanReport r = bound_ratio_scan(g, resolve_threads(a.common.threads));
  Table t;
  t.columns = {"alpha", "beta", "gamma", "delta", "X", "H", "M", "N", "seed",
               "abs_value", "re", "im", "bound1", "ratio1", "bound2", "ratio2"};
  for (const auto& row : r.rows) {
    const auto& in = row.instance;
    t.rows.push_back({in.alpha, in.beta, in.gamma, in.delta, in.X, std::uint64_t{in.H}, std::uint64_t{in.M},
                      std::uint64_t{in.N}, in.seed, row.value_abs, row.value.real(), row.value.imag(), row.bound1,
                      row.ratio1, row.bound2, row.ratio2});
  }
  Emitter(a.common, out).table(t, a.common.format);
  err << "expsum-check: " << r.rows.size() << " instances (" << r.excluded << " infeasible excluded), ratio1 max "
      << r.max_ratio1 << " median " << r.median_ratio1 << ", ratio2 max " << r.max_ratio2 << " median "
      << r.median_ratio2 << ", " << sw.seconds() << " s\n";
  return r.max_ratio1 <= a.max_ratio ? kExitOk : kExitCheckFailed;
}

struct Lemma21Args {
  Common common;
  double alpha = 1.0;
  double beta = 1.0;
  std::vector<std::uint32_t> sizes = {8, 16, 32};
  double max_growth = 4.0;
};

int run_lemma21(const Lemma21Args& a, std::ostream& out, std::ostream& err) {
  if (a.sizes.empty()) throw UsageError("--sizes must not be empty");
  Table t;
  t.columns = {"alpha", "beta", "M", "N", "Delta", "count", "bound", "ratio", "degenerate"};
  double first_max = 0.0;
  double last_max = 0.0;
  for (std::size_t s = 0; s < a.sizes.size(); ++s) {
    std::uint32_t K = a.sizes[s];
    double mn = static_cast<double>(K) * K;
    double size_max = 0.0;
    for (double delta : {0.0, 1.0 / mn, 1.0 / std::sqrt(mn), 1.0}) {
      ProximityQuery q{a.alpha, a.beta, K, K, delta};
      ProximityCount c = count_proximity_detailed(q);
      double bound = mn * std::log(2.0 * mn) + delta * mn * mn;
      double ratio = static_cast<double>(c.count) / bound;
      size_max = std::max(size_max, ratio);
      t.rows.push_back({a.alpha, a.beta, std::uint64_t{K}, std::uint64_t{K}, delta, c.count, bound, ratio,
                        c.degenerate()});
      if (c.degenerate()) err << "lemma21-check: degenerate threshold at M=N=" << K << " Delta=" << delta << "\n";
    }
    if (s == 0) first_max = size_max;
    last_max = size_max;
  }
  Emitter(a.common, out).table(t, a.common.format);
  double growth = last_max / first_max;
  bool ok = growth <= a.max_growth;
  err << "lemma21-check: max ratio grows by factor " << growth << " from size " << a.sizes.front() << " to "
      << a.sizes.back() << " (limit " << a.max_growth << "): " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

struct ExponentArgs {
  Common common;
  std::string pair;
  std::string pair2;
  std::string report = "bordelles";
};

int run_exponent(const ExponentArgs& a, std::ostream& out, std::ostream& /*err*/) {
  ExponentPair p = ExponentPair::parse(a.pair);
  ExponentPair p2 = a.pair2.empty() ? p : ExponentPair::parse(a.pair2);
  Json j;
  j["report"] = a.report;
  j["pair"] = Json{{"kappa", p.kappa().str()}, {"lambda", p.lambda().str()}};
  j["pair2"] = Json{{"kappa", p2.kappa().str()}, {"lambda", p2.lambda().str()}};
  int status = kExitOk;

  if (a.report == "bordelles") {
    try {
      Rational e = bordelles_exponent(p);
      j["valid"] = true;
      j["exponent"] = e.str();
      j["decimal"] = round6(e.to_double());
    } catch (const ConditionViolated& cv) {
      j["valid"] = false;
      j["violated"] = cv.predicate();
      status = kExitCheckFailed;
    }
  } else {
    BoundExpr expr = prop41_bound(p, p2);
    Json terms = Json::array();
    for (const auto& t : expr.terms()) terms.push_back(term_json(t));
    j["terms"] = terms;
    const GrowthTerm& leader = expr.terms().front();
    if (a.report == "optimize") {
      SplitOptimum opt = optimize_split(leader);
      j["leader"] = term_json(leader);
      j["nu"] = opt.nu.str();
      j["theta"] = opt.theta.str();
      j["nu_decimal"] = round6(opt.nu.to_double());
      j["theta_decimal"] = round6(opt.theta.to_double());
    } else if (a.report == "window") {
      if (expr.size() < 3) throw UsageError("window: pairs collapse the bound to fewer than three terms");
      const GrowthTerm& type1 = expr.terms()[2];
      Rational edge = window_edge(type1, leader);
      Rational upper(2, 3);
      j["leader"] = term_json(leader);
      j["edge"] = edge.str();
      j["edge_decimal"] = round6(edge.to_double());
      j["upper"] = upper.str();
      if (edge <= upper) {
        DominanceCertificate cert = dominance_window(expr, leader, edge, upper);
        j["dominance"] = certificate_json(cert);
        if (!cert.holds) status = kExitCheckFailed;
      } else {
        j["dominance"] = nullptr;
        status = kExitCheckFailed;
      }
    } else if (a.report != "prop41") {
      throw UsageError("--report must be one of bordelles, prop41, optimize, window");
    }
  }
  Emitter(a.common, out).json(j);
  return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lamfloor: sums of the von Mangoldt function over floor values x/n, and companion checks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  SumArgs sum;
  auto* sum_cmd = app.add_subcommand("sum", "S_Lambda(x) by the direct and block methods, with agreement report");
  sum_cmd->add_option("--x", sum.x, "Argument x (integer, '1e7' and '10^7' accepted)")->required();
  sum_cmd->add_option("--direct-limit", sum.direct_limit, "Skip the O(x) direct method above this x")
      ->capture_default_str();
  add_common(sum_cmd, sum.common, "json", false);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("error-scan", "E(x) = S_Lambda(x) - c x on a geometric grid (CSV)");
  scan_cmd->add_option("--x-min", scan.x_min, "Smallest x")->capture_default_str();
  scan_cmd->add_option("--x-max", scan.x_max, "Largest x")->capture_default_str();
  scan_cmd->add_option("--points", scan.points, "Number of grid points")->capture_default_str();
  scan_cmd->add_option("--depth", scan.depth, "Truncation depth of the c enclosure")->capture_default_str();
  add_common(scan_cmd, scan.common, "csv", true);

  ConstantArgs constant;
  auto* const_cmd = app.add_subcommand("constant", "Certified enclosure of c = sum Lambda(d)/(d(d+1))");
  const_cmd->add_option("--depth", constant.depth, "Truncation depth")->capture_default_str();
  add_common(const_cmd, constant.common, "json", false);

  VaalerArgs vaaler;
  auto* vaaler_cmd = app.add_subcommand("vaaler-check", "Check |psi - psi_H| <= Fejer majorant at random points");
  vaaler_cmd->add_option("--H", vaaler.H, "Truncation height")->required();
  vaaler_cmd->add_option("--samples", vaaler.samples, "Number of points in (0,1)")->capture_default_str();
  vaaler_cmd->add_option("--seed", vaaler.seed, "Seed")->required();
  add_common(vaaler_cmd, vaaler.common, "json", false);

  VaughanArgs vaughan;
  auto* vaughan_cmd = app.add_subcommand("vaughan-check", "Exact check of the Vaughan decomposition on random g");
  vaughan_cmd->add_option("--D", vaughan.D, "Dyadic parameter (>= 100)")->required();
  vaughan_cmd->add_option("--trials", vaughan.trials, "Random test functions")->capture_default_str();
  vaughan_cmd->add_option("--seed", vaughan.seed, "Seed")->required();
  add_common(vaughan_cmd, vaughan.common, "json", false);

  ExpsumArgs expsum;
  auto* expsum_cmd = app.add_subcommand("expsum-check", "Triple exponential sums against their bounds (CSV)");
  expsum_cmd->add_option("--H", expsum.H, "Heights")->delimiter(',')->capture_default_str();
  expsum_cmd->add_option("--M", expsum.M, "M values")->delimiter(',')->capture_default_str();
  expsum_cmd->add_option("--N", expsum.N, "N values")->delimiter(',')->capture_default_str();
  expsum_cmd->add_option("--X", expsum.X, "X values")->delimiter(',')->capture_default_str();
  expsum_cmd->add_option("--delta", expsum.delta, "delta values")->delimiter(',')->capture_default_str();
  expsum_cmd->add_option("--alpha", expsum.alpha, "alpha")->capture_default_str();
  expsum_cmd->add_option("--beta", expsum.beta, "beta")->capture_default_str();
  expsum_cmd->add_option("--gamma", expsum.gamma, "gamma")->capture_default_str();
  expsum_cmd->add_option("--seeds", expsum.seeds, "Seeds per grid cell")->capture_default_str();
  expsum_cmd->add_option("--seed", expsum.seed, "Base seed (required for random coefficients)");
  expsum_cmd->add_option("--coeffs", expsum.coeffs, "Coefficient source")
      ->check(CLI::IsMember({"random", "ones"}))
      ->capture_default_str();
  expsum_cmd->add_option("--pair", expsum.pair, "Exponent pair for the second bound")->capture_default_str();
  expsum_cmd->add_option("--max-ratio", expsum.max_ratio, "Fail if |S|/bound1 exceeds this")->capture_default_str();
  add_common(expsum_cmd, expsum.common, "csv", true);

  Lemma21Args lemma;
  auto* lemma_cmd = app.add_subcommand("lemma21-check", "Brute-force proximity counts against MN log 2MN + Delta (MN)^2");
  lemma_cmd->add_option("--alpha", lemma.alpha, "alpha")->capture_default_str();
  lemma_cmd->add_option("--beta", lemma.beta, "beta")->capture_default_str();
  lemma_cmd->add_option("--sizes", lemma.sizes, "M = N sizes, ascending")->delimiter(',')->capture_default_str();
  lemma_cmd->add_option("--max-growth", lemma.max_growth, "Allowed growth of the max ratio")->capture_default_str();
  add_common(lemma_cmd, lemma.common, "csv", false);

  ExponentArgs exponent;
  auto* exp_cmd = app.add_subcommand("exponent", "Exact exponent-pair calculus (JSON)");
  exp_cmd->add_option("--pair", exponent.pair, "Exponent pair 'a/b,c/d'")->required();
  exp_cmd->add_option("--pair2", exponent.pair2, "Second pair for type I terms (defaults to --pair)");
  exp_cmd->add_option("--report", exponent.report, "Report kind")
      ->check(CLI::IsMember({"bordelles", "prop41", "optimize", "window"}))
      ->capture_default_str();
  exp_cmd->add_option("-o,--output", exponent.common.output, "Output path ('-' for stdout)")->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("lamfloor");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* target = &app;
    for (const CLI::App* sub : app.get_subcommands()) target = sub;
    err << target->help();
    return kExitUsage;
  }

  try {
    if (*sum_cmd) return run_sum(sum, out, err);
    if (*scan_cmd) return run_error_scan(scan, out, err);
    if (*const_cmd) return run_constant(constant, out, err);
    if (*vaaler_cmd) return run_vaaler(vaaler, out, err);
    if (*vaughan_cmd) return run_vaughan(vaughan, out, err);
    if (*expsum_cmd) return run_expsum(expsum, out, err);
    if (*lemma_cmd) return run_lemma21(lemma, out, err);
    if (*exp_cmd) return run_exponent(exponent, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace lamfloor::cli
