#include <algorithm>
#include <sstream>

#include "doctest.h"

#include "c2coh/cli.hpp"

using namespace c2coh;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("chart") {
    auto r = run({"chart", "--pmin", "-3", "--pmax", "3", "--qmin", "-3", "--qmax", "3"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 49);
    CHECK(run({"chart", "--pmin", "2", "--pmax", "1"}).code == 2);
  }

  TEST_CASE("algebra calculators") {
    CHECK(run({"asteen", "normalize", "t0*t0"}).out == "a*t1 + a*t0*x1 + u*x1\n");
    CHECK(run({"asteen", "psi", "1"}).out == "a*x1 + t0\n");
    CHECK(run({"psi", "1"}).out == "a*x1 + t0\n");
    CHECK(run({"pn", "1"}).out == "P1 = a*x1\nQ1 = 1\n");
    CHECK(run({"pair", "x1", "t0*t0"}).out == "u\n");
    CHECK(run({"asteen", "coprod", "t0"}).out == "t0 (x) 1 + 1 (x) t0\n");
    CHECK(run({"coeff", "a*th[1,2]"}).out == "th[0,2]\ndegree 2-2*al\n");
  }

  TEST_CASE("parse errors exit 2 with position") {
    auto r = run({"asteen", "normalize", "t0*q"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 3") != std::string::npos);
    CHECK(r.err.find("'q'") != std::string::npos);
    CHECK(run({"coeff", "a^^2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
  }

  TEST_CASE("frames") {
    auto r = run({"frame", "check", "builtin:CP2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("b*t + t^2") != std::string::npos);
    auto j = run({"frame", "check", "builtin:CP2", "--json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"pass\": true") != std::string::npos);
    CHECK(run({"frame", "check", "/nonexistent/model.json"}).code == 2);
    CHECK(run({"frame", "check", "builtin:CP99x"}).code == 2);
    CHECK(run({"purity", "builtin:S2(1+al)"}).code == 0);
    auto s = run({"steinberg", "builtin:CP2", "--class", "t"});
    CHECK(s.out == "St(t) = b*t + t^2\n");
  }

  TEST_CASE("selftest is deterministic") {
    auto a = run({"selftest", "--bound", "4"});
    auto b = run({"selftest", "--bound", "4", "--jobs", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
