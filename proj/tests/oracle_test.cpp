#include <doctest.h>

#include <algorithm>
#include <random>

#include "fatpoints/error.hpp"
#include "fatpoints/oracle.hpp"

using namespace fatpoints;

namespace {

const FixtureCase kAllCases[] = {FixtureCase::I,  FixtureCase::II,      FixtureCase::III,
                                 FixtureCase::IV, FixtureCase::General, FixtureCase::Conic};

std::vector<std::vector<int>> normalized(std::vector<std::vector<int>> lines) {
  for (auto& l : lines) std::sort(l.begin(), l.end());
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("coordinates realize their descriptions") {
    for (auto c : kAllCases) {
      CAPTURE(fixture_case_name(c));
      const auto found = spec_from_points(fixture_points(c));
      const auto expect = fixture_spec(c);
      CHECK(normalized(found.collinear) == normalized(expect.collinear));
      CHECK(found.six_on_conic == expect.six_on_conic);
      CHECK(parse_fixture_case(fixture_case_name(c)) == c);
    }
    CHECK_THROWS_AS(parse_fixture_case("v"), Error);
  }

  TEST_CASE("four collinear triples with a heavy point") {
    const auto pts = fixture_points(FixtureCase::IV);
    const Multiplicities m{2, 2, 6, 2, 2, 2};
    CHECK(ideal_dim(pts, m, 8) == 11);
    CHECK(ideal_dim(pts, m, 5) == 0);
    CHECK(ideal_dim(pts, m, 10) == 30);
    const auto mu = mu_rank_direct(pts, m, 6);
    CHECK(mu.source_dim == 3);
    CHECK(mu.ker() == 0);
    CHECK(mu.cok() == 1);
  }

  TEST_CASE("no conditions and small cases") {
    const auto pts = fixture_points(FixtureCase::IV);
    CHECK(ideal_dim(pts, {0, 0, 0, 0, 0, 0}, 2) == 6);
    CHECK(ideal_dim(pts, {0, 0, 0, 0, 0, 0}, 0) == 1);
    CHECK(ideal_dim(pts, {3, 0, 0, 0, 0, 0}, 1) == 0);
    CHECK(ideal_dim(pts, {1, 0, 0, 0, 0, 0}, 1) == 2);
    CHECK(mu_rank_direct(pts, {1, 0, 2, 1, 1, 0}, 3).cok() == 0);
  }

  TEST_CASE("modular ranks agree with exact ranks") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<Coeff> mult(0, 3), deg(0, 7);
    for (auto c : kAllCases) {
      CAPTURE(fixture_case_name(c));
      const auto pts = fixture_points(c);
      for (int trial = 0; trial < 6; ++trial) {
        Multiplicities m{};
        for (auto& x : m) x = mult(rng);
        const Coeff t = deg(rng);
        CHECK(ideal_dim(pts, m, t) == ideal_dim_exact(pts, m, t));
        const auto a = mu_rank_direct(pts, m, t);
        const auto b = mu_rank_exact(pts, m, t);
        CHECK(a.rank == b.rank);
        CHECK(a.source_dim == b.source_dim);
        CHECK(a.target_dim == b.target_dim);
      }
    }
  }

  TEST_CASE("bad input") {
    const auto pts = fixture_points(FixtureCase::I);
    CHECK_THROWS_AS(ideal_dim(pts, {-1, 0, 0, 0, 0, 0}, 2), Error);
    PointSet repeated = pts;
    repeated[1] = repeated[0];
    CHECK_THROWS_AS(spec_from_points(repeated), Error);
  }
}
