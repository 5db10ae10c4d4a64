#pragma once

// Ground truth from explicit coordinates: a form of degree t vanishes to
// order m at p iff all of its partial derivatives of order m-1 vanish at p.
// Ranks are taken modulo two large primes; if they disagree the rank is
// recomputed over the integers.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fatpoints/config.hpp"
#include "fatpoints/resolution.hpp"

namespace fatpoints {

struct PlanePoint {
  std::array<std::int64_t, 3> xyz{};
};

using PointSet = std::array<PlanePoint, kPointCount>;

enum class FixtureCase { I, II, III, IV, General, Conic };

/// Parses "i", "ii", "iii", "iv", "general", "conic".
FixtureCase parse_fixture_case(std::string_view name);
std::string fixture_case_name(FixtureCase c);

/// Integer coordinates realizing the case.
PointSet fixture_points(FixtureCase c);

/// The combinatorial description matching fixture_points(c).
DistinctSpec fixture_spec(FixtureCase c);

/// Collinear triples and conic membership read off actual coordinates.
DistinctSpec spec_from_points(const PointSet& points);

/// dim I(Z)_t.
Coeff ideal_dim(const PointSet& points, const Multiplicities& m, Coeff t);

struct MuRank {
  Coeff source_dim = 0;  ///< 3 * dim I(Z)_t
  Coeff target_dim = 0;  ///< dim I(Z)_{t+1}
  Coeff rank = 0;
  Coeff ker() const { return source_dim - rank; }
  Coeff cok() const { return target_dim - rank; }
};

/// Rank of I(Z)_t (x) <x, y, z> -> I(Z)_{t+1}.
MuRank mu_rank_direct(const PointSet& points, const Multiplicities& m, Coeff t);

/// Same quantities computed only with exact integer arithmetic.
Coeff ideal_dim_exact(const PointSet& points, const Multiplicities& m, Coeff t);
MuRank mu_rank_exact(const PointSet& points, const Multiplicities& m, Coeff t);

/// How many rank computations fell back to exact arithmetic (diagnostic).
std::uint64_t oracle_exact_fallbacks();

}  // namespace fatpoints
