#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "fsr/cli.hpp"
#include "support.hpp"

using fsrtest::fixture_path;

namespace {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "fsr");
  std::ostringstream out, err;
  std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
  int code = fsr::run_cli(args);
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decide prints the ranking and winner") {
  CliResult r = run({"decide", fixture_path("app1_houses.fsr"), "--combiner", "min"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("winner: h7 (score 0.7000)") != std::string::npos);
  CHECK(r.out.find("1. h7") != std::string::npos);

  CliResult product = run({"decide", fixture_path("app6_televisions.fsr"),
                           "--combiner", "product"});
  CHECK(product.exit_code == 0);
  CHECK(product.out.find("winner: t2") != std::string::npos);
}

TEST_CASE("decide --json carries scores, ranking, and winner") {
  CliResult r = run({"decide", fixture_path("app1_houses.fsr"), "--json"});
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["winner"]["label"] == "h7");
  CHECK(doc["winner"]["score"].get<double>() == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(doc["scores"].size() == 7);
  CHECK(doc["ranking"][0]["label"] == "h7");
}

TEST_CASE("cli output is byte-deterministic") {
  for (int i = 0; i < 2; ++i) {
    CliResult a = run({"decide", fixture_path("app2_jobs.fsr")});
    CliResult b = run({"decide", fixture_path("app2_jobs.fsr")});
    CHECK(a.out == b.out);
    CliResult c = run({"validate", fixture_path("tables10-11.fsr"), "--json"});
    CliResult d = run({"validate", fixture_path("tables10-11.fsr"), "--json"});
    CHECK(c.out == d.out);
  }
}

TEST_CASE("relate prints the product relation") {
  CliResult r = run({"relate", fixture_path("example3_watches.fsr"), "--set", "cost", "--param",
                     "costly", "--set", "appearance", "--param", "beautiful"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("relation (costly, beautiful)") != std::string::npos);
  CHECK(r.out.find("0.4875") != std::string::npos);  // (w2, w1)

  CliResult missing = run({"relate", fixture_path("example3_watches.fsr"), "--set", "cost",
                           "--param", "costly"});
  CHECK(missing.exit_code == 1);
}

TEST_CASE("uncertainty reports per-class values and the average") {
  CliResult r = run({"uncertainty", fixture_path("similarity_demo.fsr"),
                     "--relation", "closeness"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0.8000") != std::string::npos);
  CHECK(r.out.find("G = 0.3219") != std::string::npos);

  CliResult missing = run({"uncertainty", fixture_path("similarity_demo.fsr"),
                           "--relation", "ghost"});
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("ghost") != std::string::npos);
}

TEST_CASE("infer composes a truth vector with a stored relation") {
  CliResult left = run({"infer", fixture_path("modus_ponens.fsr"), "--vector", "0,1",
                        "--matrix", "implies", "--side", "left"});
  CHECK(left.exit_code == 0);
  CHECK(left.out.find("0 0.0000") != std::string::npos);
  CHECK(left.out.find("1 1.0000") != std::string::npos);

  CliResult right = run({"infer", fixture_path("modus_ponens.fsr"), "--vector", "1,0",
                         "--matrix", "implies", "--side", "right"});
  CHECK(right.exit_code == 0);
  CHECK(right.out.find("0 1.0000") != std::string::npos);
  CHECK(right.out.find("1 0.0000") != std::string::npos);

  CliResult bad = run({"infer", fixture_path("modus_ponens.fsr"), "--vector", "1,0,1",
                       "--matrix", "implies", "--side", "left"});
  CHECK(bad.exit_code == 1);
}

TEST_CASE("regret subcommand prints the opportunity-loss table") {
  CliResult r = run({"regret", fixture_path("payoff_clothing.fsr"), "--table", "production"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("35.0000") != std::string::npos);
  CHECK(r.out.find("0.0000") != std::string::npos);
}

TEST_CASE("validate passes on the shipped distribution fixtures") {
  for (const char* name : {"tables8-9.fsr", "tables10-11.fsr", "tables12-13.fsr",
                           "tables14-15.fsr", "tables16-17.fsr"}) {
    CliResult r = run({"validate", fixture_path(name)});
    CAPTURE(name);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("sum OK") != std::string::npos);
    CHECK(r.out.find("dominance OK") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
  }
}

TEST_CASE("validate reports violations with exit code 1") {
  std::string path = "/tmp/fsr_bad_dominance.fsr";
  std::ofstream(path) << R"({
    "schema_version": 1,
    "universes": [{"name": "u", "labels": ["x", "y"]}],
    "probability_tables": [{"name": "p", "universe": "u", "values": [1, 0]}],
    "possibility_tables": [{"name": "q", "universe": "u", "values": [0.5, 1]}]
  })";
  CliResult r = run({"validate", path});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("VIOLATION") != std::string::npos);
  CHECK(r.out.find("below probability") != std::string::npos);
}

TEST_CASE("input errors exit with code 1 and a diagnostic") {
  CliResult missing = run({"decide", fixture_path("missing.fsr")});
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  std::string path = "/tmp/fsr_bad_grade.fsr";
  std::ofstream(path) << R"({
    "schema_version": 1,
    "universes": [{"name": "u", "labels": ["x"]}],
    "fuzzy_soft_sets": [{"name": "s", "universe": "u", "sets": {"p": [1.2]}}]
  })";
  CliResult bad = run({"decide", path});
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("outside [0, 1]") != std::string::npos);

  CliResult unknown_query = run({"decide", fixture_path("app1_houses.fsr"),
                                 "--query", "ghost"});
  CHECK(unknown_query.exit_code == 1);

  CliResult bad_flag = run({"decide"});
  CHECK(bad_flag.exit_code == 1);
}

TEST_CASE("logic table renders the crisp disjunction table") {
  CliResult r = run({"logic", "table", "--connective", "or", "--grid", "0,1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0.0000  1.0000") != std::string::npos);
  CHECK(r.out.find("1.0000  1.0000") != std::string::npos);
}

TEST_CASE("logic classify caps counterexample output") {
  CliResult r = run({"logic", "classify", "--expr", "p & q & r",
                     "--grid", "0,0.25,0.5,0.75,1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: satisfiable") != std::string::npos);
  CHECK(r.out.find("(32 of 124)") != std::string::npos);  // 5^3 - 1 falling short of 1

  CliResult valid = run({"logic", "classify", "--expr", "(p & (p -> q)) -> q",
                         "--grid", "0,0.5,1"});
  CHECK(valid.out.find("verdict: valid") != std::string::npos);

  CliResult parse_fail = run({"logic", "classify", "--expr", "p &"});
  CHECK(parse_fail.exit_code == 1);
}
