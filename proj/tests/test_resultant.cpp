#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "permpoly/poly.hpp"

using namespace permpoly;
using gf::Code;
using poly::DensePoly;

namespace {

// Leibniz expansion over all permutations; fine up to 8 x 8.
Code leibniz_det(const gf::Field& f, const std::vector<std::vector<Code>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Code det = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Code term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m[i][perm[i]]);
    det = inversions % 2 ? f.sub(det, term) : f.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

DensePoly from_roots(const gf::FieldRef& f, Code lead, const std::vector<Code>& roots) {
  DensePoly p = DensePoly::constant(f, lead);
  for (Code r : roots) p = p * DensePoly(f, {f->neg(r), 1});
  return p;
}

DensePoly random_poly(const gf::FieldRef& f, int degree, std::mt19937_64& rng) {
  std::vector<Code> c(degree + 1);
  for (auto& x : c) x = rng() % f->order();
  while (c.back() == 0) c.back() = rng() % f->order();
  return {f, c};
}

}  // namespace

TEST_SUITE("resultant") {

TEST_CASE("Sylvester matrix layout") {
  const auto f = gf::Field::make(5, 1);
  const DensePoly a(f, {1, 2, 3});  // 3x^2 + 2x + 1
  const DensePoly b(f, {4, 1});     // x + 4
  const auto s = poly::sylvester_matrix(a, b);
  const std::vector<std::vector<Code>> expect{{3, 2, 1}, {1, 4, 0}, {0, 1, 4}};
  CHECK(s == expect);
}

TEST_CASE("Gaussian determinant matches the Leibniz expansion") {
  for (auto [p, k] : {std::pair{2u, 4u}, {3u, 2u}, {7u, 1u}}) {
    const auto f = gf::Field::make(p, k);
    std::mt19937_64 rng(p + k);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      std::vector<std::vector<Code>> m(n, std::vector<Code>(n));
      for (auto& row : m)
        for (auto& x : row) x = rng() % (trial % 3 == 0 ? 2 : f->order());
      CHECK(poly::determinant(*f, m) == leibniz_det(*f, m));
    }
  }
}

TEST_CASE("resultant of linear factors") {
  const auto f = gf::Field::make(7, 1);
  // Res(x - a, x - b) = a - b with f's roots substituted into g.
  for (Code a = 0; a < 7; ++a)
    for (Code b = 0; b < 7; ++b) {
      const DensePoly fa(f, {f->neg(a), 1}), gb(f, {f->neg(b), 1});
      CHECK(poly::sylvester_resultant(fa, gb) == f->sub(a, b));
    }
  CHECK_THROWS_AS(poly::sylvester_resultant(DensePoly::constant(f, 3), DensePoly(f, {1, 1})),
                  std::invalid_argument);
}

TEST_CASE("product formula on polynomials that split in the base field") {
  const auto f = gf::Field::make(3, 3);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Code> roots(1 + rng() % 4);
    for (auto& r : roots) r = rng() % f->order();
    const Code lead = 1 + rng() % (f->order() - 1);
    const auto a = from_roots(f, lead, roots);
    const auto b = random_poly(f, 1 + rng() % 4, rng);
    Code expect = f->pow(lead, static_cast<std::uint64_t>(b.degree()));
    for (Code r : roots) expect = f->mul(expect, b.eval(r));
    CHECK(poly::sylvester_resultant(a, b) == expect);
    CHECK(poly::resultant_by_roots(a, b) == expect);
  }
}

TEST_CASE("Sylvester resultant agrees with the splitting-field oracle") {
  int compared = 0;
  for (auto [p, k] : {std::pair{2u, 3u}, {2u, 5u}, {3u, 2u}, {5u, 1u}, {2u, 4u}}) {
    const auto f = gf::Field::make(p, k);
    std::mt19937_64 rng(100 * p + k);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_poly(f, 1 + rng() % 4, rng);
      const auto b = random_poly(f, 1 + rng() % 4, rng);
      const auto oracle = poly::resultant_by_roots(a, b);
      REQUIRE(oracle.has_value());
      CHECK(poly::sylvester_resultant(a, b) == *oracle);
      ++compared;
    }
  }
  CHECK(compared == 200);
}

TEST_CASE("resultant vanishes exactly on a shared root") {
  const auto f = gf::Field::make(2, 6);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Code r = rng() % f->order();
    const auto a = from_roots(f, 1, {r}) * random_poly(f, rng() % 3, rng);
    const auto b = from_roots(f, 1 + rng() % 63, {r}) * random_poly(f, rng() % 3, rng);
    CHECK(poly::sylvester_resultant(a, b) == 0);
  }
  // Coprime pairs: distinct root sets give a nonzero resultant.
  for (int trial = 0; trial < 50; ++trial) {
    const Code r1 = rng() % 32, r2 = 32 + rng() % 32;
    CHECK(poly::sylvester_resultant(from_roots(f, 1, {r1, r1}), from_roots(f, 1, {r2})) != 0);
  }
}

TEST_CASE("oracle gives up beyond its cap") {
  const auto f = gf::Field::make(2, 8);
  // An irreducible quartic over GF(2^8) needs GF(2^32); a 2^16 cap stops at degree 2.
  std::mt19937_64 rng(9);
  bool saw_none = false;
  for (int i = 0; i < 200 && !saw_none; ++i) {
    const auto a = random_poly(f, 4, rng);
    saw_none = !poly::resultant_by_roots(a, DensePoly(f, {1, 1}), 1u << 16).has_value();
  }
  CHECK(saw_none);
}

}  // TEST_SUITE
