#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lamfloor/cli.hpp"
#include "schema_validator.hpp"

using lamfloor::cli::run_cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> schema_errors(const std::string& name, const std::string& text) {
  std::ifstream in(std::string(LAMFLOOR_SCHEMA_DIR) + "/" + name + ".schema.json");
  REQUIRE(in);
  schema::Validator v(nlohmann::json::parse(in));
  return v.validate(nlohmann::json::parse(text));
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("sum reports both methods") {
    Run r = run({"sum", "--x", "10"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["blocks"].get<double>() == doctest::Approx(4.094344562222));
    CHECK(j["direct"].get<double>() == doctest::Approx(4.094344562222));
    CHECK(j["agree"] == true);
    CHECK(schema_errors("sum", r.out).empty());
    Run skipped = run({"sum", "--x", "1e6", "--direct-limit", "1000"});
    CHECK(skipped.code == 0);
    CHECK(schema_errors("sum", skipped.out).empty());
    CHECK(nlohmann::json::parse(skipped.out)["direct"].is_null());
  }

  TEST_CASE("exponent reports") {
    Run r = run({"exponent", "--pair", "13/84,55/84", "--report", "bordelles"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"97/203\"") != std::string::npos);
    CHECK(schema_errors("exponent", r.out).empty());
    Run opt = run({"exponent", "--pair", "1/2,1/2", "--report", "optimize"});
    CHECK(nlohmann::json::parse(opt.out)["nu"] == "9/19");
    CHECK(nlohmann::json::parse(opt.out)["nu_decimal"].get<double>() == 0.473684);
    CHECK(schema_errors("exponent", opt.out).empty());
    Run win = run({"exponent", "--pair", "1/2,1/2", "--report", "window"});
    CHECK(win.code == 0);
    CHECK(nlohmann::json::parse(win.out)["edge"] == "6/13");
    CHECK(schema_errors("exponent", win.out).empty());
    Run p41 = run({"exponent", "--pair", "1/2,1/2", "--report", "prop41"});
    CHECK(nlohmann::json::parse(p41.out)["terms"].size() == 4);
    CHECK(schema_errors("exponent", p41.out).empty());
    Run bad = run({"exponent", "--pair", "1/2,1/2"});
    CHECK(bad.code == 1);
    CHECK(nlohmann::json::parse(bad.out)["violated"] == "kappa <= 1/6");
    CHECK(schema_errors("exponent", bad.out).empty());
  }

  TEST_CASE("check subcommands validate against their schemas") {
    Run c = run({"constant", "--depth", "1000"});
    CHECK(c.code == 0);
    CHECK(schema_errors("constant", c.out).empty());
    Run v = run({"vaaler-check", "--H", "10", "--samples", "500", "--seed", "1"});
    CHECK(v.code == 0);
    CHECK(schema_errors("vaaler-check", v.out).empty());
    Run w = run({"vaughan-check", "--D", "200", "--trials", "3", "--seed", "1"});
    CHECK(w.code == 0);
    CHECK(schema_errors("vaughan-check", w.out).empty());
  }

  TEST_CASE("CSV outputs") {
    Run scan = run({"error-scan", "--x-min", "10000", "--x-max", "1000000", "--points", "5", "--depth", "100000000"});
    CHECK(scan.code == 0);
    CHECK(scan.out.rfind("x,s_lambda,c_times_x,error,ratio_919,ratio_half\n", 0) == 0);
    CHECK(line_count(scan.out) == 6);
    CHECK(scan.err.find("slope") != std::string::npos);
    Run lemma = run({"lemma21-check", "--sizes", "4,8"});
    CHECK(lemma.code == 0);
    CHECK(line_count(lemma.out) == 9);
    Run ex = run({"expsum-check", "--H", "2", "--M", "2,4", "--N", "4", "--X", "10", "--seed", "3", "--seeds", "2"});
    CHECK(ex.code == 0);
    CHECK(line_count(ex.out) == 9);
    Run csv = run({"constant", "--depth", "100", "--format", "csv"});
    CHECK(csv.out.rfind("depth,lo,hi,width,", 0) == 0);
  }

  TEST_CASE("reruns are byte-identical") {
    std::vector<std::vector<std::string>> cmds{
        {"expsum-check", "--H", "2,4", "--M", "4", "--N", "4,8", "--seed", "7", "--threads", "2"},
        {"vaaler-check", "--H", "100", "--samples", "300", "--seed", "5"},
        {"error-scan", "--x-min", "100", "--x-max", "100000", "--points", "7", "--depth", "10000000", "--threads", "3"},
        {"exponent", "--pair", "13/84,55/84", "--pair2", "1/2,1/2", "--report", "window"},
    };
    for (const auto& cmd : cmds) {
      Run a = run(cmd);
      Run b = run(cmd);
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("usage errors exit with status 2") {
    for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"sum"},
             {"sum", "--x", "ten"},
             {"sum", "--x", "10", "--format", "xml"},
             {"vaaler-check", "--H", "10"},
             {"vaaler-check", "--H", "0", "--seed", "1"},
             {"vaughan-check", "--D", "50", "--seed", "1"},
             {"expsum-check", "--H", "2"},
             {"exponent", "--pair", "3/4,1/2"},
             {"exponent", "--pair", "1/2,1/2", "--report", "nothing"},
             {"constant", "--depth", "1"},
             {"error-scan", "--x-max", "1000000000", "--depth", "1000"},
             {"sum", "--x", "10", "--unknown"},
         }) {
      Run r = run(args);
      CAPTURE(args.size());
      CHECK(r.code == 2);
      CHECK(r.out.empty());
      CHECK_FALSE(r.err.empty());
    }
    Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("error-scan") != std::string::npos);
  }

  TEST_CASE("failed checks exit with status 1") {
    Run r = run({"lemma21-check", "--sizes", "4,16", "--max-growth", "0.5"});
    CHECK(r.code == 1);
    Run e = run({"expsum-check", "--H", "2", "--M", "2", "--N", "2", "--seed", "1", "--max-ratio", "0"});
    CHECK(e.code == 1);
  }

  TEST_CASE("csv field quoting") {
    using lamfloor::cli::csv_escape;
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  }
}
