#include "fatpoints/resolution.hpp"

#include "fatpoints/cones.hpp"
#include "fatpoints/error.hpp"

namespace fatpoints {

FatPointScheme::FatPointScheme(const PointConfiguration& config, const Multiplicities& m)
    : FatPointScheme(config.neg(), m) {}

FatPointScheme::FatPointScheme(NegSet n, const Multiplicities& m) : neg(std::move(n)), mult(m) {
  for (Coeff x : mult)
    if (x < 0) fail(ErrorCode::InvalidArgument, "multiplicities must be nonnegative");
  anticanonical_nef = fatpoints::anticanonical_nef(neg);
}

DivisorClass FatPointScheme::divisor(Coeff t) const { return DivisorClass::fat(t, mult); }

FatPointScheme proximity_normalize(const FatPointScheme& z) {
  std::vector<DivisorClass> vertical;
  for (const auto& c : z.neg)
    if (c.degree() == 0) vertical.push_back(c);
  // F(Z,t).C does not depend on t for degree-0 curves, so any t works.
  const Reduction r = reduce(z.divisor(0), vertical);
  FatPointScheme out = z;
  for (int i = 1; i <= kPointCount; ++i) out.mult[static_cast<std::size_t>(i - 1)] = r.nef_part.multiplicity(i);
  return out;
}

Coeff HilbertProfile::at(Coeff t) const {
  if (t < 0) return 0;
  if (t >= static_cast<Coeff>(values.size()))
    fail(ErrorCode::InvalidArgument, "degree " + std::to_string(t) + " beyond computed Hilbert function");
  return values[static_cast<std::size_t>(t)];
}

HilbertProfile hilbert(const FatPointScheme& input, Coeff t_max) {
  const FatPointScheme z = proximity_normalize(input);
  HilbertProfile p;

  Coeff first_nef = 0;
  while (!is_nef(z.divisor(first_nef), z.neg)) ++first_nef;

  // Nefness persists upward (E0 is nef) and nef classes have h1 = 0, so
  // only degrees below first_nef can break the polynomial.
  p.tau = first_nef;
  while (p.tau > 0 && h1(z.divisor(p.tau - 1), z.neg) == 0) --p.tau;
  p.sigma = p.tau + 1;

  const Coeff top = std::max(t_max, p.sigma + 3);
  for (Coeff t = 0; t <= top; ++t) p.values.push_back(h0(z.divisor(t), z.neg));
  p.alpha = 0;
  while (p.values[static_cast<std::size_t>(p.alpha)] == 0) ++p.alpha;
  return p;
}

Coeff mu_cokernel(const FatPointScheme& input, const HilbertProfile& profile, Coeff i) {
  const FatPointScheme z = proximity_normalize(input);
  const Coeff here = profile.at(i);
  const Coeff next = profile.at(i + 1);
  if (here == 0) return next;
  const Reduction r = reduce(z.divisor(i), z.neg);
  const Coeff h_nef = chi(r.nef_part);
  const Coeff h_nef_next = h0(r.nef_part + DivisorClass::basis(0), z.neg);
  return std::max<Coeff>(0, h_nef_next - 3 * h_nef) + (next - h_nef_next);
}

Coeff mu_cokernel(const FatPointScheme& z, Coeff i) { return mu_cokernel(z, hilbert(z, i + 1), i); }

Coeff third_difference(const HilbertProfile& profile, Coeff i) {
  return profile.at(i) - 3 * profile.at(i - 1) + 3 * profile.at(i - 2) - profile.at(i - 3);
}

BettiTable betti(const FatPointScheme& z, const HilbertProfile& profile) {
  BettiTable table;
  table.t[profile.alpha] = profile.at(profile.alpha);
  for (Coeff i = profile.alpha; i <= profile.sigma - 1; ++i) {
    const Coeff c = mu_cokernel(z, profile, i);
    if (c != 0) table.t[i + 1] = c;
  }
  for (Coeff i = 0; i <= profile.sigma + 2; ++i) {
    const auto it = table.t.find(i);
    const Coeff ti = it == table.t.end() ? 0 : it->second;
    const Coeff si = ti - third_difference(profile, i);
    if (si < 0)
      fail(ErrorCode::Internal, "negative syzygy count in degree " + std::to_string(i) + "; maximal rank failed");
    if (si != 0) table.s[i] = si;
  }
  return table;
}

BettiTable betti(const FatPointScheme& z) { return betti(z, hilbert(z)); }

std::string BettiTable::render(const std::map<Coeff, Coeff>& shifts) {
  std::string out;
  for (const auto& [deg, count] : shifts) {
    if (count == 0) continue;
    if (!out.empty()) out += " + ";
    out += deg == 0 ? "R" : "R[" + std::to_string(-deg) + "]";
    if (count != 1) out += "^" + std::to_string(count);
  }
  return out.empty() ? "0" : out;
}

}  // namespace fatpoints
