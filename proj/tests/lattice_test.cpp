#include <doctest.h>

#include <limits>
#include <random>

#include "fatpoints/error.hpp"
#include "fatpoints/lattice.hpp"

using namespace fatpoints;

namespace {

DivisorClass random_class(std::mt19937_64& rng, Coeff lo = -9, Coeff hi = 9) {
  std::uniform_int_distribution<Coeff> d(lo, hi);
  DivisorClass::Coefficients c{};
  for (auto& x : c) x = d(rng);
  return DivisorClass(c);
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("basis pairings") {
    for (int i = 0; i < kLatticeRank; ++i)
      for (int j = 0; j < kLatticeRank; ++j) {
        const Coeff expect = i != j ? 0 : (i == 0 ? 1 : -1);
        CHECK(intersect(DivisorClass::basis(i), DivisorClass::basis(j)) == expect);
      }
  }

  TEST_CASE("canonical class") {
    const auto k = canonical_class();
    CHECK(k == DivisorClass({-3, 1, 1, 1, 1, 1, 1}));
    CHECK(anticanonical_class() == -k);
    CHECK(self_intersection(k) == 3);
    CHECK(chi(DivisorClass{}) == 1);
    CHECK(chi(anticanonical_class()) == 4);
    CHECK(chi(DivisorClass::basis(0)) == 3);
    CHECK(chi(DivisorClass::basis(1)) == 1);
  }

  TEST_CASE("constructors agree") {
    const std::array<Coeff, 6> m{1, 0, 2, 1, 1, 0};
    const auto f = DivisorClass::fat(3, m);
    CHECK(f == DivisorClass({3, -1, 0, -2, -1, -1, 0}));
    CHECK(f == DivisorClass::minus_points(3, {1, 3, 3, 4, 5}));
    CHECK(f.multiplicity(3) == 2);
    CHECK(f.degree() == 3);
  }

  TEST_CASE("row format round trip") {
    const auto f = parse_class("3 -1 0 -2 -1 -1 0");
    CHECK(f == DivisorClass({3, -1, 0, -2, -1, -1, 0}));
    CHECK(parse_class(format_row(f)) == f);
    CHECK(parse_class("3,-1, 0,-2,-1,-1,0") == f);
    CHECK_THROWS_AS(parse_class("1 2 3"), Error);
    CHECK_THROWS_AS(parse_class("1 2 3 4 5 6 x"), Error);
    CHECK_THROWS_AS(parse_class("1 2 3 4 5 6 7 8"), Error);
  }

  TEST_CASE("checked arithmetic") {
    const Coeff big = std::numeric_limits<Coeff>::max();
    try {
      (void)checked::add(big, 1);
      FAIL("no overflow reported");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Overflow);
    }
    CHECK_THROWS_AS(checked::mul(big / 2, 3), Error);
    CHECK_THROWS_AS(intersect(DivisorClass({big, 0, 0, 0, 0, 0, 0}), DivisorClass({2, 0, 0, 0, 0, 0, 0})), Error);
  }

  TEST_CASE("form is symmetric and bilinear") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
      const auto a = random_class(rng), b = random_class(rng), c = random_class(rng);
      const Coeff k = std::uniform_int_distribution<Coeff>(-5, 5)(rng);
      CHECK(intersect(a, b) == intersect(b, a));
      CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
      CHECK(intersect(k * a, b) == k * intersect(a, b));
    }
  }

  TEST_CASE("chi steps by degree plus two along E0") {
    std::mt19937_64 rng(12);
    const auto e0 = DivisorClass::basis(0);
    for (int trial = 0; trial < 500; ++trial) {
      const auto f = random_class(rng);
      CHECK(chi(f + e0) - chi(f) == intersect(f, e0) + 2);
    }
  }
}
