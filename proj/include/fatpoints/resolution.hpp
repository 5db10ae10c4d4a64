#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fatpoints/config.hpp"
#include "fatpoints/lattice.hpp"

namespace fatpoints {

using Multiplicities = std::array<Coeff, kPointCount>;

struct FatPointScheme {
  NegSet neg;
  Multiplicities mult{};
  /// Conic or line with 4+ points: -K not nef; Hilbert functions still
  /// apply, nef-cone verification does not.
  bool anticanonical_nef = true;

  FatPointScheme(const PointConfiguration& config, const Multiplicities& m);
  FatPointScheme(NegSet neg, const Multiplicities& m);

  /// F(Z, t) = tE0 - m1E1 - ... - m6E6.
  DivisorClass divisor(Coeff t) const;
};

/// Moves multiplicity along degree-0 curves until the proximity
/// inequalities hold; the ideal is unchanged. Idempotent.
FatPointScheme proximity_normalize(const FatPointScheme& z);

struct HilbertProfile {
  std::vector<Coeff> values;  ///< values[t] = h_Z(t), t = 0..
  Coeff alpha = 0;
  Coeff tau = 0;
  Coeff sigma = 1;

  Coeff at(Coeff t) const;  ///< 0 for t < 0; throws past the computed range
};

/// Computes h_Z(t) for 0 <= t <= max(t_max, sigma + 3).
HilbertProfile hilbert(const FatPointScheme& z, Coeff t_max = 0);

/// dim cok of I(Z)_i (x) R_1 -> I(Z)_{i+1}, assuming maximal rank on the
/// nef part of F(Z, i).
Coeff mu_cokernel(const FatPointScheme& z, const HilbertProfile& profile, Coeff i);
Coeff mu_cokernel(const FatPointScheme& z, Coeff i);

struct BettiTable {
  std::map<Coeff, Coeff> t;  ///< generators of F0 by degree (nonzero only)
  std::map<Coeff, Coeff> s;  ///< generators of F1 by degree (nonzero only)

  /// "R[-6] + R[-7] + R[-8]^3 + R[-10]^2"
  static std::string render(const std::map<Coeff, Coeff>& shifts);
};

/// Third backward difference of h at i, with h = 0 below degree 0.
Coeff third_difference(const HilbertProfile& profile, Coeff i);

BettiTable betti(const FatPointScheme& z, const HilbertProfile& profile);
BettiTable betti(const FatPointScheme& z);

}  // namespace fatpoints
