#pragma once

// The rank-7 class lattice of the plane blown up at six points.
//
// A DivisorClass stores the coefficients (c0, c1, ..., c6) of the class
// c0*E0 + c1*E1 + ... + c6*E6 in the exceptional basis. This is exactly the
// signed row format of the printed tables, e.g. "2 0 -1 -1 -1 0 0" is
// 2E0 - E2 - E3 - E4. The fat point multiplicity attached to E_i (i >= 1) is
// therefore the *negated* coefficient; use multiplicity(i) to read it and
// DivisorClass::fat(t, m) to build tE0 - m1E1 - ... - m6E6.
//
// Intersection form: E0^2 = 1, Ei^2 = -1 (i >= 1), Ei.Ej = 0 (i != j).
// All arithmetic is checked; overflow raises Error(ErrorCode::Overflow).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoints {

using Coeff = std::int64_t;

inline constexpr int kLatticeRank = 7;
inline constexpr int kPointCount = 6;

class DivisorClass {
 public:
  using Coefficients = std::array<Coeff, kLatticeRank>;

  constexpr DivisorClass() = default;
  constexpr explicit DivisorClass(const Coefficients& c) : c_(c) {}

  /// E_i for 0 <= i <= 6.
  static DivisorClass basis(int i);

  /// F(Z, t) = tE0 - m1E1 - ... - m6E6.
  static DivisorClass fat(Coeff t, std::span<const Coeff> multiplicities);

  /// a0*E0 - E_{i1} - E_{i2} - ...; indices are 1-based and may repeat.
  static DivisorClass minus_points(Coeff a0, std::initializer_list<int> points);

  constexpr Coeff operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  constexpr const Coefficients& coefficients() const { return c_; }

  constexpr Coeff degree() const { return c_[0]; }
  /// Multiplicity subtracted at point i (1-based): -(coefficient of E_i).
  Coeff multiplicity(int i) const;

  bool is_zero() const;

  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(Coeff k, const DivisorClass& a);

  friend constexpr bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend constexpr auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

 private:
  Coefficients c_{};
};

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& d) const noexcept;
};

/// a0*b0 - sum_{i>=1} ai*bi
Coeff intersect(const DivisorClass& a, const DivisorClass& b);

inline Coeff self_intersection(const DivisorClass& a) { return intersect(a, a); }

/// K = -3E0 + E1 + ... + E6.
DivisorClass canonical_class();
/// -K = 3E0 - E1 - ... - E6.
DivisorClass anticanonical_class();

/// Riemann-Roch: (F^2 - K.F)/2 + 1. The numerator is always even on this
/// lattice; an odd value means the class was corrupted and raises Internal.
Coeff chi(const DivisorClass& f);

/// F.E0
inline Coeff degree(const DivisorClass& f) { return f.degree(); }

/// Row rendering used by every table: "3 -1  0 -2 -1 -1  0".
std::string format_row(const DivisorClass& f);

/// Accepts 7 integers separated by commas and/or whitespace.
DivisorClass parse_class(std::string_view text);

std::vector<Coeff> to_vector(const DivisorClass& f);
DivisorClass from_vector(std::span<const Coeff> coeffs);

namespace checked {
Coeff add(Coeff a, Coeff b);
Coeff sub(Coeff a, Coeff b);
Coeff mul(Coeff a, Coeff b);
}  // namespace checked

}  // namespace fatpoints

template <>
struct std::hash<fatpoints::DivisorClass> : fatpoints::DivisorClassHash {};
