#include <doctest.h>

#include "fibre/multiindex.hpp"
#include "helpers.hpp"

using namespace fibre;
using namespace fibre::testing;

TEST_SUITE("multiindex") {
  TEST_CASE("degree and weight") {
    CHECK(degree(mi("a:-1=2,a:1=1")) == 3);
    CHECK(degree(MultiIndex{}) == 0);
    CHECK(degree(mi("a:0=1,b:-1=1")) == 2);
    CHECK(weight(mi("a:-1=2,a:1=1")) == -1);
    CHECK(weight(MultiIndex{}) == 0);
    CHECK(weight(mi("a:3=1,a:-1=4")) == -1);
  }

  TEST_CASE("symmetry factor and factorial coincide") {
    CHECK(symmetry_factor(mi("a:-1=2,a:1=1")) == 2);
    CHECK(symmetry_factor(MultiIndex{}) == 1);
    CHECK(symmetry_factor(mi("a:-1=3,b:-1=2")) == 12);
    CHECK(factorial(mi("a:0=2")) == 2);
    CHECK(factorial(mi("a:1=1,a:-1=2")) == 2);
    for (const auto& k : enumerate_multiindices({A, B}, 2, 4)) {
      CHECK(symmetry_factor(k) == factorial(k));
    }
  }

  TEST_CASE("add and subtract") {
    CHECK(mi("a:1=1") + mi("a:1=1,a:-1=2") == mi("a:1=2,a:-1=2"));
    CHECK((mi("a:1=1") - mi("a:1=1")).empty());
    CHECK_THROWS_WITH_AS(subtract(mi("a:-1=1"), mi("a:0=1")), "negative component", DomainError);
    const auto all = enumerate_multiindices({A, B}, 1, 2);
    for (const auto& x : all) {
      for (const auto& y : all) {
        CHECK(x + y == y + x);
        CHECK((x + y) - y == x);
        for (const auto& z : all) CHECK((x + y) + z == x + (y + z));
      }
    }
  }

  TEST_CASE("left shift") {
    CHECK(left_shift(mi("a:1=1")) == mi("a:0=1"));
    CHECK(left_shift(MultiIndex{}).empty());
    CHECK(left_shift(mi("a:0=2,a:2=1")) == mi("a:-1=2,a:1=1"));
    CHECK_THROWS_WITH_AS(left_shift(mi("a:-1=1")), "not a lowering multi-index", DomainError);
    for (const auto& l : enumerate_multiindices({A, B}, 3, 4)) {
      if (!is_lowering(l)) continue;
      CHECK(weight(left_shift(l)) == weight(l) - degree(l));
    }
  }

  TEST_CASE("find_shift examples") {
    auto l = find_shift(mi("a:0=2"), mi("a:-1=1,a:0=1"));
    REQUIRE(l);
    CHECK(*l == mi("a:0=1"));
    CHECK(*shift_target(mi("a:0=2"), *l) == mi("a:-1=1,a:0=1"));

    auto zero = find_shift(mi("a:-1=1"), mi("a:-1=1"));
    REQUIRE(zero);
    CHECK(zero->empty());

    CHECK_FALSE(find_shift(mi("a:-1=1"), mi("a:0=1")));
  }

  TEST_CASE("find_shift round trip over every lowering") {
    for (const auto& k : enumerate_multiindices({A, B}, 2, 3)) {
      for (const auto& l : enumerate_multiindices({A, B}, 2, 3)) {
        if (!is_lowering(l)) continue;
        auto target = shift_target(k, l);
        if (!target) continue;
        auto found = find_shift(k, *target);
        REQUIRE(found);
        CHECK(*found == l);
      }
    }
  }

  TEST_CASE("text grammar") {
    CHECK(str(mi("a:1=1,a:-1=2")) == "a:-1=2,a:1=1");
    CHECK(str(mi("b:0=1,a:0=1")) == "a:0=1,b:0=1");
    CHECK(str(mi("0")) == "0");
    CHECK(mi("0").empty());
    CHECK_THROWS_AS(mi("a:-1=1,a:-1=2"), ParseError);
    CHECK_THROWS_AS(mi("a:-2=1"), ParseError);
    CHECK_THROWS_AS(mi("a:0=0"), ParseError);
    CHECK_THROWS_AS(mi("c:0=1"), ParseError);
    CHECK_THROWS_AS(mi("a:0"), ParseError);
    CHECK_THROWS_AS(mi("a:x=1"), ParseError);
    CHECK_THROWS_AS(mi(""), ParseError);
    for (const auto& k : enumerate_multiindices({A, B}, 2, 3)) CHECK(mi(str(k)) == k);
  }

  TEST_CASE("alphabet inference") {
    CHECK(scan_decoration_names("b:-1=2,a:1=1") == std::vector<std::string>{"a", "b"});
    CHECK(scan_decoration_names("x(y,x)") == std::vector<std::string>{"x", "y"});
  }

  TEST_CASE("submultiindex iteration visits every bounded index once") {
    const MultiIndex k = mi("a:-1=2,a:1=1,b:0=1");
    long visits = 0;
    for_each_submultiindex(k, [&](const MultiIndex& m) {
      CHECK(is_sub_multiindex(m, k));
      ++visits;
      return true;
    });
    CHECK(visits == 3 * 2 * 2);
  }

  TEST_CASE("tree profiles are the weight -1 indices") {
    const auto profiles = tree_profiles({A}, 4);
    // leaf; chain of 2; chain of 3, cherry; four shapes of size 4
    CHECK(profiles.size() == 1 + 1 + 2 + 3);
    for (const auto& k : profiles) CHECK(weight(k) == -1);
  }
}
