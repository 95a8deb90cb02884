#include <doctest.h>

#include "fibre/lowering.hpp"
#include "helpers.hpp"
#include "reference.hpp"

using namespace fibre;
using namespace fibre::testing;

namespace {

Polynomial from_reference(const reference::RefPolynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p) out.add_term(reference::to_multiindex(m), Rational(c));
  return out;
}

}  // namespace

TEST_SUITE("lowering") {
  TEST_CASE("dbar on generators") {
    CHECK(dbar(Polynomial::monomial(mi("a:-1=1"))).is_zero());
    CHECK(dbar(Polynomial::monomial(mi("a:0=2"))) == Polynomial::monomial(mi("a:-1=1,a:0=1"), 2));
    CHECK(dbar(Polynomial::monomial(mi("a:1=1"))) == Polynomial::monomial(mi("a:0=1")));
    CHECK(dbar_power(Polynomial::monomial(mi("a:1=1")), 2) == Polynomial::monomial(mi("a:-1=1")));
  }

  TEST_CASE("dbar agrees with an independent implementation") {
    for (const auto& k : enumerate_multiindices({A, B}, 2, 4)) {
      auto mine = Polynomial::monomial(k);
      auto ref = reference::ref_monomial(k);
      for (int r = 0; r < 4; ++r) {
        CHECK(mine == from_reference(ref));
        for (const auto& [m, c] : mine.terms()) {
          CHECK(degree(m) == degree(k));
          CHECK(weight(m) == weight(k) - r);
        }
        mine = dbar(mine);
        ref = reference::ref_dbar(ref);
      }
    }
  }

  TEST_CASE("nilpotency bound is exact for one decoration") {
    for (const auto& k : enumerate_multiindices({A}, 3, 4)) {
      const long cap = lowering_capacity(k);
      CHECK_FALSE(dbar_power(Polynomial::monomial(k), cap).is_zero());
      CHECK(dbar_power(Polynomial::monomial(k), cap + 1).is_zero());
    }
  }

  TEST_CASE("C coefficient examples") {
    CHECK(c_coefficients(mi("a:0=2"), 0) == std::map<MultiIndex, BigInt>{{MultiIndex{}, 1}});
    CHECK(c_coefficients(mi("a:0=2"), 1) == std::map<MultiIndex, BigInt>{{mi("a:0=1"), 2}});
    CHECK(c_coefficients(mi("a:1=1"), 2) == std::map<MultiIndex, BigInt>{{mi("a:1=1,a:0=1"), 1}});
    CHECK(c_coefficient(mi("a:1=1"), mi("a:1=1,a:0=1")) == 1);
    CHECK(c_coefficient(mi("a:-1=1"), mi("a:0=1")) == 0);
    CHECK_THROWS_AS(c_coefficient(mi("a:0=1"), mi("a:-1=1")), DomainError);
  }

  TEST_CASE("C recursion reproduces iterated dbar") {
    for (const auto& k : enumerate_multiindices({A, B}, 2, 4)) {
      auto ref = reference::ref_monomial(k);
      for (long r = 0; r <= 4; ++r) {
        Polynomial from_c;
        for (const auto& [l, c] : c_coefficients(k, r)) {
          CHECK(c == c_coefficient(k, l));
          from_c.add_term(*shift_target(k, l), Rational(c));
        }
        CHECK(from_c == from_reference(ref));
        ref = reference::ref_dbar(ref);
      }
    }
  }

  TEST_CASE("D coefficient paths") {
    CHECK(d_coefficient(mi("a:0=2"), MultiIndex{}) == 2);
    CHECK(d_coefficient_recursive(mi("a:0=2"), MultiIndex{}) == 2);
    CHECK(d_coefficient(mi("a:0=2"), mi("a:0=1")) == 2);
    CHECK(d_coefficient_recursive(mi("a:0=2"), mi("a:0=1")) == 2);
    CHECK(d_coefficient(mi("a:-1=1"), mi("a:0=1")) == 0);
    CHECK(d_coefficient_recursive(mi("a:-1=1"), mi("a:0=1")) == 0);
    for (const auto& k : enumerate_multiindices({A, B}, 2, 4)) {
      for (long r = 0; r <= 3; ++r) {
        const auto cs = c_coefficients(k, r);
        const auto ds = d_coefficients(k, r);
        CHECK(cs.size() == ds.size());
        for (const auto& [l, c] : cs) {
          const BigInt expected = c * factorial(*shift_target(k, l));
          CHECK(ds.at(l) == expected);
          CHECK(d_coefficient(k, l) == expected);
          CHECK(d_coefficient_recursive(k, l) == expected);
        }
      }
    }
  }

  TEST_CASE("u polynomial formatting") {
    CHECK(to_string(UPolynomial{}) == "0");
    CHECK(to_string(UPolynomial::monomial(0, 1)) == "1");
    CHECK(to_string(UPolynomial::monomial(2, Rational(1, 2))) == "u^2/2");
    CHECK(to_string(UPolynomial::monomial(1, 3)) == "3*u");
    UPolynomial p = UPolynomial::monomial(0, 1);
    p.add_term(1, -2);
    CHECK(to_string(p) == "1 - 2*u");
  }

  TEST_CASE("coefficient generating function") {
    const auto leaf = coefficient_gf(mi("a:-1=1"));
    CHECK(leaf == std::map<MultiIndex, UPolynomial>{{mi("a:-1=1"), UPolynomial::monomial(0, 1)}});

    const auto one = coefficient_gf(mi("a:1=1"));
    CHECK(one.size() == 3);
    CHECK(one.at(mi("a:1=1")) == UPolynomial::monomial(0, 1));
    CHECK(one.at(mi("a:0=1")) == UPolynomial::monomial(1, 1));
    CHECK(one.at(mi("a:-1=1")) == UPolynomial::monomial(2, Rational(1, 2)));

    for (const auto& k : enumerate_multiindices({A, B}, 2, 4)) {
      const auto gf = coefficient_gf(k);
      CHECK(gf == coefficient_gf_by_dbar(k));
      for (const auto& [b, poly] : gf) CHECK(find_shift(k, b));
    }
  }

  TEST_CASE("transport arrays") {
    const auto forced = transport_arrays(mi("a:-1=1"), mi("a:-1=1"));
    REQUIRE(forced.size() == 1);
    CHECK(forced[0].entries == std::map<std::tuple<int, int, int>, long>{{{A, -1, -1}, 1}});

    const auto drop = transport_arrays(mi("a:1=1"), mi("a:-1=1"));
    REQUIRE(drop.size() == 1);
    CHECK(drop[0].entries == std::map<std::tuple<int, int, int>, long>{{{A, 1, -1}, 1}});

    CHECK(transport_arrays(mi("a:-1=1"), mi("a:0=1")).empty());
    CHECK(transport_arrays(mi("a:0=1"), mi("b:0=1")).empty());
    // Rows (2, 1) and columns (1, 2) on a 2x2 lower triangle: two fillings.
    CHECK(transport_arrays(mi("a:0=2,a:1=1"), mi("a:-1=1,a:0=2")).size() == 2);
  }

  TEST_CASE("transition generating function") {
    CHECK(transition_gf(mi("a:1=1"), mi("a:-1=1")) == UPolynomial::monomial(2, Rational(1, 2)));
    CHECK(to_string(transition_gf(mi("a:1=1"), mi("a:-1=1"))) == "u^2/2");
    CHECK(transition_gf(mi("a:0=2,b:1=1"), mi("a:0=2,b:1=1")) == UPolynomial::monomial(0, 1));
    CHECK(transition_gf(mi("a:-1=1"), mi("a:0=1")).is_zero());

    for (const auto& k : enumerate_multiindices({A, B}, 2, 3)) {
      const auto gf = coefficient_gf(k);
      for (const auto& b : enumerate_multiindices({A, B}, 2, 3)) {
        const auto t = transition_gf(k, b);
        auto it = gf.find(b);
        CHECK(t == (it == gf.end() ? UPolynomial{} : it->second));
        const auto l = find_shift(k, b);
        if (!l) {
          CHECK(t.is_zero());
          continue;
        }
        const long r = degree(*l);
        const Rational inv_r(BigInt(1), factorial(static_cast<unsigned>(r)));
        CHECK(t == UPolynomial::monomial(r, inv_r * c_coefficient(k, *l)));
        CHECK(transition_gf_d(k, b) == UPolynomial::monomial(r, inv_r * d_coefficient(k, *l)));
      }
    }
  }

  TEST_CASE("unreachable pair has no lowering") {
    CHECK(reference::scan_lowerings(mi("a:-1=1"), mi("a:0=1"), 3).empty());
    CHECK(reference::scan_lowerings(mi("a:0=2"), mi("a:-1=1,a:0=1"), 3) ==
          std::vector<MultiIndex>{mi("a:0=1")});
  }
}
