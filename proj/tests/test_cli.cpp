#include <sstream>

#include "doctest.h"
#include "negaring/cli.hpp"

using namespace negaring;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("analyze emits the canonical report") {
  RunResult r = run({"analyze", "--p", "5", "--n", "5", "--gen", "0;1;0;0", "--gen", "0;0;1;0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"rank\": 10") != std::string::npos);
  CHECK(r.out.find("\"g1\": \"1+x^5\"") != std::string::npos);
  CHECK(r.out.find("\"is_free\": false") != std::string::npos);
  CHECK(r.out.find("\"spanning_set\"") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("distance reports the oracle truthfully") {
  RunResult r = run({"distance", "--p", "3", "--n", "9", "--gen", "0;0;0;(x+1)^4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"d_oracle\": 3") != std::string::npos);
  CHECK(r.out.find("\"d_formula\": 4") != std::string::npos);
  CHECK(r.out.find("\"agreement\": false") != std::string::npos);

  RunResult t = run({"distance", "--p", "3", "--n", "9", "--gen", "0;0;0;(x+1)^6",
                     "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("d_oracle 3") != std::string::npos);
  CHECK(t.out.find("agreement true") != std::string::npos);
}

TEST_CASE("output bytes are stable across runs") {
  std::vector<std::string> args = {"catalog", "--p", "5", "--n", "5", "--family",
                                   "single-nonfree", "--format", "csv", "--seed", "7"};
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("# seed=7") == 0);
  CHECK(a.out.find("p,n,t1,t2,t3,t4,g11,g12,g13,g22,g23,g33,rank,free_rank,dim_fp,"
                   "is_free,d_oracle,d_formula,hypothesis_met,source") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "--p", "4", "--n", "5", "--gen", "1"}).code == 2);
  CHECK(run({"analyze", "--p", "5", "--n", "4", "--gen", "1"}).code == 2);
  CHECK(run({"analyze", "--p", "5", "--n", "5", "--gen", "1+"}).code == 2);
  CHECK(run({"analyze", "--p", "5", "--n", "5", "--gen", "1;1;1;1;1"}).code == 2);
  CHECK(run({"analyze", "--format", "yaml"}).code == 2);
  CHECK(run({"tables", "--p", "3"}).code == 2);
  CHECK(!run({"analyze", "--p", "4", "--n", "5", "--gen", "1"}).err.empty());
}

TEST_CASE("budget exhaustion exits with 3") {
  // divisor search for x^9+1 over F_7 is past the default budget
  RunResult r = run({"catalog", "--p", "7", "--n", "9"});
  CHECK(r.code == 3);
  CHECK(!r.err.empty());
}

TEST_CASE("table findings do not fail the run") {
  RunResult r = run({"tables", "--p", "5", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mismatch(") != std::string::npos);
  CHECK(r.out.find("36/40 rows match") != std::string::npos);

  RunResult j = run({"tables", "--p", "5"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"verdict\": \"match\"") != std::string::npos);
  CHECK(j.out.find("\"expected_rank\": 10") != std::string::npos);
}

TEST_CASE("verify subcommand runs the suites") {
  RunResult r = run({"verify", "--p", "5", "--n", "5", "--trials", "5", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("phi:") != std::string::npos);
  CHECK(r.out.find("structure:") != std::string::npos);
  CHECK(r.out.find("oracle consistency:") != std::string::npos);
  CHECK(r.out.find("distance transfer:") != std::string::npos);
}

TEST_CASE("help is not an error") {
  RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("analyze") != std::string::npos);
}

TEST_CASE("csv single row for analyze") {
  RunResult r = run({"analyze", "--p", "5", "--n", "5", "--gen", "0;0;0;(x+1)^2",
                     "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5,5,5,5,5,2,0,0,0,0,0,0,3,0,3,false,3,3,") != std::string::npos);
  CHECK(r.out.find(",analyze") != std::string::npos);
}
