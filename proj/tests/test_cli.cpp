#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "contmat/cli.hpp"
#include "contmat/io.hpp"

using namespace contmat;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("word parsing") {
  CHECK(parse_word("3,5,-2") == Word{3, 5, -2});
  CHECK(parse_word("") == Word{});
  CHECK(parse_word("  7 , -1 ,0 ") == Word{7, -1, 0});
  CHECK(parse_word("+4") == Word{4});
  CHECK_THROWS_AS(parse_word("3, ,5"), ParseError);
  CHECK_THROWS_AS(parse_word("3,x"), ParseError);
  CHECK_THROWS_AS(parse_word("3,"), ParseError);
  try {
    parse_word("3,x,5");
  } catch (const ParseError& e) {
    CHECK(e.offset == 2);
  }
}

TEST_CASE("matrix parsing") {
  CHECK(parse_matrix("17,12,7,5") == Mat2{17, 12, 7, 5});
  CHECK(parse_matrix("1,0,0,1") == identity());
  CHECK(parse_matrix("-17,-12,-7,-5") == Mat2{17, 12, 7, 5});
  CHECK_THROWS_AS(parse_matrix("2,0,0,1"), DeterminantError);
  CHECK_THROWS_AS(parse_matrix("1,0,0"), ParseError);
  CHECK_THROWS_AS(parse_matrix("a,b,c,d"), ParseError);
}

TEST_CASE("rendering round trips") {
  for (const Word& w : {Word{3, 5, -2}, Word{}, Word{0}, Word{-12, 40}})
    CHECK(parse_word(render_word(w)) == w);
  Mat2 A{47, -224, 17, -81};
  CHECK(parse_matrix(render_matrix(A)) == A);
}

TEST_CASE("golden command lines") {
  auto r = run_cli({"eval", "3,5,-2"});
  CHECK(r.code == 0);
  CHECK(r.out == "31,14,11,5\n");

  r = run_cli({"minimal", "38,-17,9,-4"});
  CHECK(r.code == 0);
  CHECK(r.out == "4,-4,2\n");

  r = run_cli({"canonical", "47,-224,17,-81"});
  CHECK(r.code == 0);
  CHECK(r.out == "cyclic: -3,2,5\n");

  r = run_cli({"staircase", "17,12,7,5"});
  CHECK(r.code == 0);
  CHECK(r.out == "3,2,4,1,0\n");

  r = run_cli({"reduce", "3,5,2,2,2,5,2,2,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "3,4,-4,3,-3\n");

  r = run_cli({"canonical", "8,-35,3,-13"});
  CHECK(r.code == 0);
  CHECK(r.out == "short: 5\n");
}

TEST_CASE("quiddity command") {
  auto r = run_cli({"quiddity", "1,3,1,2,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1\n");
  r = run_cli({"quiddity", "3,0,-3,0"});
  CHECK(r.out == "+1\n");
  r = run_cli({"quiddity", "3,5,-2"});
  CHECK(r.code == 0);
  CHECK(r.out == "none\n");
}

TEST_CASE("predicate commands") {
  CHECK(run_cli({"proper", "2,3,5,2,4,-6,-8,2,-4"}).out == "true\n");
  CHECK(run_cli({"proper", "2,4,-4,-5,2,3,3,3"}).out == "false (rule 5)\n");
  CHECK(run_cli({"pure", "3,-2,4,-3,-3,-3,-5"}).out == "false\n");
  CHECK(run_cli({"pure", "-3,-3,-3,-4"}).out == "true\n");
}

TEST_CASE("conjugacy commands") {
  CHECK(run_cli({"conjugate", "13,-7,2,-1", "11,5,2,1"}).out == "yes\n");
  CHECK(run_cli({"conjugate", "16,5,3,1", "11,5,2,1"}).out == "no\n");
  auto r = run_cli({"oracle-conjugate", "4,3,1,1", "5,-1,1,0", "--max-len", "3", "--coeff-bound", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 12) == "yes witness=");
}

TEST_CASE("oracle commands") {
  auto r = run_cli({"oracle-shortest", "38,-17,9,-4", "--max-len", "3", "--coeff-bound", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "4,-4,2\n");
  r = run_cli({"oracle-cycles", "2", "--coeff-bound", "1"});
  CHECK(r.out == "0,0 -1\n");
}

TEST_CASE("structured output") {
  auto r = run_cli({"--structured", "minimal", "38,-17,9,-4"});
  CHECK(r.code == 0);
  CHECK(r.out == "kind=word;payload=4,-4,2;provenance=minimal\n");
  r = run_cli({"--structured", "eval", "3,5,-2"});
  CHECK(r.out == "kind=matrix;payload=31,14,11,5;provenance=eval\n");
  r = run_cli({"--structured", "canonical", "47,-224,17,-81"});
  CHECK(r.out == "kind=classform;payload=cyclic: -3,2,5;provenance=canonical\n");
  r = run_cli({"--structured", "quiddity", "1,3,1,2,2"});
  CHECK(r.out == "kind=sign;payload=-1;provenance=quiddity\n");
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"minimal", "1,2,3,4"}).code == 1);      // determinant != 1
  CHECK(run_cli({"minimal", "1,2,x"}).code == 2);        // parse error
  CHECK(run_cli({"reduce", "3,1,4,0"}).code == 1);       // not a staircase word
  CHECK(run_cli({"bogus", "1,0,0,1"}).code == 2);        // unknown subcommand
  CHECK(run_cli({}).code == 2);                          // missing subcommand
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("eval, minimal, eval reproduces the matrix") {
  for (const std::string& m : {std::string("17,12,7,5"), std::string("38,-17,9,-4"),
                               std::string("47,-224,17,-81"), std::string("503,152,182,55"),
                               std::string("119,-44,46,-17")}) {
    auto minimal = run_cli({"minimal", m});
    REQUIRE(minimal.code == 0);
    std::string w = minimal.out.substr(0, minimal.out.size() - 1);
    auto back = run_cli({"eval", w});
    REQUIRE(back.code == 0);
    CHECK(back.out == m + "\n");
  }
}
