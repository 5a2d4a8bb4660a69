#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "permpoly/tower.hpp"

using namespace permpoly;
using gf::Code;

TEST_SUITE("tower") {

TEST_CASE("tower dimensions") {
  const auto t = tower::Tower::make(2, 2);
  CHECK(t.q() == 4);
  CHECK(t.q2() == 16);
  CHECK(t.order() == 64);
  CHECK(t.field().degree() == 6);
  const auto t3 = tower::Tower::make(3, 1);
  CHECK(t3.order() == 27);
  CHECK(t3.field().modulus() == gf::find_irreducible(3, 3));
  CHECK_THROWS(tower::Tower::make(2, 9));
  CHECK_THROWS(tower::Tower::make(2, 0));
}

TEST_CASE("Frobenius is a field automorphism of order 3 fixing F_q") {
  for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {5u, 1u}, {2u, 3u}}) {
    const auto t = tower::Tower::make(p, m);
    const auto& f = t.field();
    const oracle::GfPk o{p, f.modulus()};
    std::uint64_t fixed = 0;
    for (Code x : f.elements()) {
      REQUIRE(t.frob(x) == o.pow(x, t.q()));
      REQUIRE(t.frob(t.frob(t.frob(x))) == x);
      REQUIRE(t.frob2(x) == t.frob(t.frob(x)));
      REQUIRE(tower::frob_q(t, x) == t.frob(x));
      fixed += t.frob(x) == x;
      for (Code y : {Code{1}, Code{2}, static_cast<Code>(f.order() - 1)}) {
        REQUIRE(t.frob(f.add(x, y)) == f.add(t.frob(x), t.frob(y)));
        REQUIRE(t.frob(f.mul(x, y)) == f.mul(t.frob(x), t.frob(y)));
      }
    }
    CHECK(fixed == t.q());
  }
}

TEST_CASE("linear Frobenius table agrees with the power map") {
  for (auto [p, m] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 4u}, {7u, 1u}}) {
    const auto t = tower::Tower::make(p, m);
    const tower::FrobeniusTable table(t);
    CHECK(table.basis_images().size() == t.field().degree());
    for (Code x : t.field().elements()) REQUIRE(table.apply(x) == t.frob(x));
  }
}

TEST_CASE("linearized maps are additive") {
  const auto t = tower::Tower::make(3, 1);
  const auto& f = t.field();
  const tower::LinearizedMap L{1, 2, 5};
  for (Code x : f.elements()) {
    for (Code y : f.elements()) {
      REQUIRE(tower::lmap_eval(t, L, f.add(x, y)) ==
              f.add(tower::lmap_eval(t, L, x), tower::lmap_eval(t, L, y)));
    }
    const Code expect = f.add(f.add(x, f.mul(2, t.frob(x))), f.mul(5, t.frob2(x)));
    CHECK(tower::lmap_eval(t, L, x) == expect);
  }
}

TEST_CASE("cube roots of unity") {
  const auto t2 = tower::Tower::make(2, 2);
  const auto r2 = tower::cube_roots_of_unity(t2);
  REQUIRE(r2.size() == 3);
  CHECK(r2[0] == 1);
  const auto& f = t2.field();
  for (Code a : r2) {
    CHECK(f.pow(a, 3) == 1);
    CHECK(f.in_subfield(a, 4));
  }
  CHECK(r2[1] == f.pow(f.generator(), 21));
  CHECK(r2[2] == f.pow(f.generator(), 42));
  CHECK(tower::cube_roots_of_unity(tower::Tower::make(2, 1)).size() == 1);
  CHECK(tower::cube_roots_of_unity(tower::Tower::make(2, 3)).size() == 1);
  CHECK(tower::cube_roots_of_unity(tower::Tower::make(2, 4)).size() == 3);
  // Over GF(3^3) the only cube root of 1 is 1 itself.
  CHECK(tower::cube_roots_of_unity(tower::Tower::make(3, 1)).size() == 1);
}

TEST_CASE("subfield units") {
  for (auto [p, m] : {std::pair{2u, 2u}, {3u, 1u}, {5u, 1u}, {3u, 2u}}) {
    const auto t = tower::Tower::make(p, m);
    const auto units = tower::subfield_units(t);
    CHECK(units.size() == t.q() - 1);
    CHECK(units[0] == 1);
    std::set<Code> distinct(units.begin(), units.end());
    CHECK(distinct.size() == units.size());
    for (Code u : units) CHECK(t.field().in_subfield(u, t.q()));
  }
  const auto t = tower::Tower::make(3, 1);
  CHECK(tower::subfield_units(t) == std::vector<Code>{1, 2});
}

TEST_CASE("selectors") {
  const auto t = tower::Tower::make(2, 2);
  CHECK(tower::resolve_selector(t, "unity3:0") == 1);
  CHECK(tower::resolve_selector(t, "unity3:2") == tower::cube_roots_of_unity(t)[2]);
  CHECK(tower::resolve_selector(t, "unit:1") == tower::subfield_units(t)[1]);
  CHECK(tower::resolve_selector(t, "coeffs:1,1,0,1") == 1 + 2 + 8);
  CHECK_THROWS_AS(tower::resolve_selector(t, "unity3:3"), std::invalid_argument);
  CHECK_THROWS_AS(tower::resolve_selector(t, "unit:x"), std::invalid_argument);
  CHECK_THROWS_AS(tower::resolve_selector(t, "coeffs:2"), std::invalid_argument);
  CHECK_THROWS_AS(tower::resolve_selector(t, "coeffs:1,0,0,0,0,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(tower::resolve_selector(t, "cube"), std::invalid_argument);
  CHECK_THROWS_AS(tower::resolve_selector(t, "root:1"), std::invalid_argument);
}

}  // TEST_SUITE
