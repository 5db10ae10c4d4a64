#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fatpoints/lattice.hpp"

namespace fatpoints {

inline constexpr int kSimpleRootCount = 6;
inline constexpr std::size_t kDefaultOrbitCap = 100000;

/// [r0, ..., r5] with r0 = E0-E1-E2-E3 and ri = Ei - E(i+1).
const std::array<DivisorClass, kSimpleRootCount>& simple_roots();

/// s_i(x) = x + (x.r_i) r_i.
DivisorClass reflect(const DivisorClass& x, int i);

/// Closure of {seed} under the six reflections, sorted lexicographically.
/// Throws CapExceeded once more than `cap` classes have been discovered.
std::vector<DivisorClass> orbit(const DivisorClass& seed, std::size_t cap = kDefaultOrbitCap);

/// Coordinates of a root-lattice class (C.K = 0) in the simple-root basis.
/// Throws InvalidArgument if x is not orthogonal to K.
std::array<Coeff, kSimpleRootCount> simple_root_coordinates(const DivisorClass& x);

bool is_positive_root(const DivisorClass& x);

struct Root {
  DivisorClass value;
  bool positive = false;
};

/// All 72 classes with C^2 = -2 and C.K = 0, sorted.
const std::vector<Root>& all_roots();

/// The 27 classes with C^2 = -1 and C.K = -1, sorted.
const std::vector<DivisorClass>& exceptional_classes();

/// E0, E0-E1, 2E0-E1-E2, 3E0-E1-E2-E3, 3E0-E1-..-E4, 3E0-E1-..-E5, -K.
const std::vector<DivisorClass>& orbit_seeds();

/// Union of the orbits of the seeds above, sorted (1279 classes).
const std::vector<DivisorClass>& orbit_union();

/// True iff some element of W6 maps the set `a` onto the set `b`.
/// Searches the orbit of the sorted tuple `a` under the diagonal action.
bool w6_equivalent(std::vector<DivisorClass> a, std::vector<DivisorClass> b,
                   std::size_t cap = kDefaultOrbitCap);

}  // namespace fatpoints
