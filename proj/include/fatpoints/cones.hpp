#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fatpoints/config.hpp"
#include "fatpoints/lattice.hpp"

namespace fatpoints {

/// Result of peeling fixed curves off a class. When `effective`, the
/// original class equals nef_part + sum of fixed_part.
struct Reduction {
  DivisorClass nef_part;
  std::vector<std::pair<DivisorClass, Coeff>> fixed_part;
  std::vector<DivisorClass> trace;  ///< curves in the order subtracted
  bool effective = false;

  DivisorClass fixed_sum() const;
};

bool is_nef(const DivisorClass& f, const NegSet& neg);
bool is_nef(const DivisorClass& f, std::span<const DivisorClass> curves);

/// Subtracts the first C (in the given order) with current.C < 0 until the
/// class is nef or its degree drops below zero.
Reduction reduce(const DivisorClass& f, std::span<const DivisorClass> order);
Reduction reduce(const DivisorClass& f, const NegSet& neg);

Coeff h0(const DivisorClass& f, const NegSet& neg);
/// Requires degree(f) >= -2.
Coeff h1(const DivisorClass& f, const NegSet& neg);

/// A = 19E0-6E1-5E2-4E3-3E4-2E5-E6: every reduction step lowers A.F.
DivisorClass termination_weight();
/// True iff termination_weight().C >= 1 for every member of neg.
bool termination_measure_holds(const NegSet& neg);

struct GeneratorSet {
  std::vector<DivisorClass> raw;
  std::vector<DivisorClass> pared;
};

/// Nef members of the 1279-class orbit union, then those that are not a
/// sum of two of them. Throws Unsupported if -K is not nef.
GeneratorSet nef_generators(const NegSet& neg);

/// Members of `pared` that are not a sum of two nonzero nef classes.
std::vector<DivisorClass> gamma(const NegSet& neg, const GeneratorSet& gens);

}  // namespace fatpoints
