#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "fibre/cli.hpp"

using fibre::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count") {
    auto leaf = run({"count", "a:-1=1"});
    CHECK(leaf.code == 0);
    CHECK(leaf.out == "k = a:-1=1\ndegree = 1\nweight = -1\nF = 1\nW = 1\nJ = 1\nL = 1\n");

    auto four = run({"count", "a:1=1,a:0=1,a:-1=2"});
    CHECK(four.code == 0);
    CHECK(four.out.find("F = 2\nW = 3/2\nJ = 3\nL = 36\n") != std::string::npos);

    auto bad = run({"count", "a:0=1"});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("weight must be -1") != std::string::npos);
  }

  TEST_CASE("parse failures exit 2") {
    CHECK(run({"count", "a:0"}).code == 2);
    CHECK(run({"count", "a:-1=1,a:-1=1"}).code == 2);
    CHECK(run({"count", "b:-1=1", "--alphabet", "a"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"count"}).code == 2);
    CHECK(run({"count", "a:-1=1", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("count json round trip") {
    auto first = run({"count", "--format", "json", "b:1=1,a:0=1,a:-1=2"});
    REQUIRE(first.code == 0);
    const auto j = nlohmann::json::parse(first.out);
    CHECK(j["k"] == "a:-1=2,a:0=1,b:1=1");
    CHECK(j["W"]["num"] == 3);
    CHECK(j["W"]["den"] == 2);
    auto again = run({"count", "--format", "json", j["k"].get<std::string>()});
    CHECK(again.out == first.out);
  }

  TEST_CASE("large integers stay exact in json") {
    auto big = run({"count", "--format", "json", "a:0=24,a:-1=1"});
    REQUIRE(big.code == 0);
    const auto j = nlohmann::json::parse(big.out);
    CHECK(j["L"].is_string());
    CHECK(j["L"] == "15511210043330985984000000");  // 25!
    CHECK(j["J"] == "620448401733239439360000");    // 24!
    CHECK(j["W"]["num"] == 1);
  }

  TEST_CASE("series") {
    auto w1 = run({"series", "weighted", "--max-degree", "1", "--alphabet", "a"});
    CHECK(w1.code == 0);
    CHECK(w1.out == "a:-1=1 → 1\n");
    auto o3 = run({"series", "ordinary", "--max-degree", "3"});
    CHECK(o3.out.find("a:-1=2,a:1=1 → 1\n") != std::string::npos);
    auto w3 = run({"series", "weighted", "--max-degree", "3"});
    CHECK(w3.out.find("a:-1=2,a:1=1 → 1/2\n") != std::string::npos);
    auto h = run({"series", "h", "--m", "2", "--max-degree", "2"});
    CHECK(h.out == "a:-1=2 → 1\n");
    CHECK(run({"series", "weighted", "--max-degree", "13"}).code == 4);
    CHECK(run({"series", "weighted", "--max-degree", "0"}).code == 3);
  }

  TEST_CASE("lower, transition, coproduct") {
    CHECK(run({"lower", "a:0=2", "1"}).out == "ℓ = a:0=1, C = 2, target a:-1=1,a:0=1\n");
    CHECK(run({"lower", "a:-1=1", "1"}).out == "0\n");
    CHECK(run({"transition", "a:1=1", "a:-1=1"}).out == "u^2/2\n");
    CHECK(run({"transition", "a:-1=1", "a:0=1"}).out == "0\n");
    CHECK(run({"coproduct", "a:-1=1", "--form", "raw-dbar"}).out == "1 ⊗ a:-1=1 : 1\n");
    const auto c = run({"coproduct", "a:1=1,a:-1=1,b:-1=1", "--form", "refined-C"});
    const auto d = run({"coproduct", "a:1=1,a:-1=1,b:-1=1", "--form", "refined-D"});
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
    const auto ordered = run({"coproduct", "a:1=1,a:-1=1,b:-1=1", "--decomposition", "ordered"});
    CHECK(ordered.out != c.out);
    CHECK(run({"coproduct", "a:-1=1", "--forest-sigma", "sideways"}).code == 2);
  }

  TEST_CASE("alphabet caps") {
    std::string many;
    for (char c = 'a'; c <= 'q'; ++c) many += std::string(many.empty() ? "" : ",") + c;
    CHECK(run({"series", "weighted", "--alphabet", many}).code == 4);
    CHECK(run({"oracle", "--alphabet", "a,b,c", "--max-n", "2"}).code == 4);
    CHECK(run({"oracle", "--max-n", "9"}).code == 4);
  }

  TEST_CASE("oracle") {
    auto one = run({"oracle", "--max-n", "4", "--alphabet", "a,b"});
    CHECK(one.code == 0);
    CHECK(one.out.find("result: pass") != std::string::npos);
    auto many = run({"oracle", "--max-n", "4", "--alphabet", "a,b", "--threads", "3"});
    CHECK(many.out == one.out);
    auto json = run({"oracle", "--max-n", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(json.out)["result"] == "pass");
  }
}
