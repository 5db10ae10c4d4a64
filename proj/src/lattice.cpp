#include "fatpoints/lattice.hpp"

#include <cstdio>
#include <sstream>

#include "fatpoints/error.hpp"

namespace fatpoints {

namespace checked {

Coeff add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

Coeff sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

Coeff mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace checked

DivisorClass DivisorClass::basis(int i) {
  if (i < 0 || i >= kLatticeRank) fail(ErrorCode::InvalidArgument, "basis index out of range: " + std::to_string(i));
  Coefficients c{};
  c[static_cast<std::size_t>(i)] = 1;
  return DivisorClass(c);
}

DivisorClass DivisorClass::fat(Coeff t, std::span<const Coeff> multiplicities) {
  if (multiplicities.size() != kPointCount)
    fail(ErrorCode::InvalidArgument, "expected 6 multiplicities, got " + std::to_string(multiplicities.size()));
  Coefficients c{};
  c[0] = t;
  for (std::size_t i = 0; i < kPointCount; ++i) c[i + 1] = checked::sub(0, multiplicities[i]);
  return DivisorClass(c);
}

DivisorClass DivisorClass::minus_points(Coeff a0, std::initializer_list<int> points) {
  Coefficients c{};
  c[0] = a0;
  for (int p : points) {
    if (p < 1 || p > kPointCount) fail(ErrorCode::InvalidArgument, "point index out of range: " + std::to_string(p));
    c[static_cast<std::size_t>(p)] -= 1;
  }
  return DivisorClass(c);
}

Coeff DivisorClass::multiplicity(int i) const {
  if (i < 1 || i > kPointCount) fail(ErrorCode::InvalidArgument, "point index out of range: " + std::to_string(i));
  return checked::sub(0, c_[static_cast<std::size_t>(i)]);
}

bool DivisorClass::is_zero() const {
  for (Coeff x : c_)
    if (x != 0) return false;
  return true;
}

DivisorClass DivisorClass::operator-() const {
  Coefficients c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::sub(0, c_[i]);
  return DivisorClass(c);
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::add(c_[i], other.c_[i]);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::sub(c_[i], other.c_[i]);
  return *this;
}

DivisorClass operator*(Coeff k, const DivisorClass& a) {
  DivisorClass::Coefficients c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::mul(k, a.c_[i]);
  return DivisorClass(c);
}

std::size_t DivisorClassHash::operator()(const DivisorClass& d) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Coeff x : d.coefficients()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Coeff intersect(const DivisorClass& a, const DivisorClass& b) {
  Coeff acc = checked::mul(a[0], b[0]);
  for (int i = 1; i < kLatticeRank; ++i) acc = checked::sub(acc, checked::mul(a[i], b[i]));
  return acc;
}

DivisorClass canonical_class() { return DivisorClass({-3, 1, 1, 1, 1, 1, 1}); }

DivisorClass anticanonical_class() { return DivisorClass({3, -1, -1, -1, -1, -1, -1}); }

Coeff chi(const DivisorClass& f) {
  const Coeff numerator = checked::sub(intersect(f, f), intersect(canonical_class(), f));
  if (numerator % 2 != 0) fail(ErrorCode::Internal, "Riemann-Roch numerator is odd for " + format_row(f));
  return numerator / 2 + 1;
}

std::string format_row(const DivisorClass& f) {
  std::string out = std::to_string(f[0]);
  char buf[32];
  for (int i = 1; i < kLatticeRank; ++i) {
    std::snprintf(buf, sizeof buf, " %2lld", static_cast<long long>(f[i]));
    out += buf;
  }
  return out;
}

DivisorClass parse_class(std::string_view text) {
  std::string cleaned(text);
  for (char& ch : cleaned)
    if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
  std::istringstream in(cleaned);
  std::vector<Coeff> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::Parse, "not an integer: '" + token + "'");
    }
    if (used != token.size()) fail(ErrorCode::Parse, "not an integer: '" + token + "'");
    values.push_back(v);
  }
  if (values.size() != kLatticeRank)
    fail(ErrorCode::Parse, "a class needs 7 coefficients, got " + std::to_string(values.size()));
  return from_vector(values);
}

std::vector<Coeff> to_vector(const DivisorClass& f) {
  return {f.coefficients().begin(), f.coefficients().end()};
}

DivisorClass from_vector(std::span<const Coeff> coeffs) {
  if (coeffs.size() != kLatticeRank)
    fail(ErrorCode::InvalidArgument, "a class needs 7 coefficients, got " + std::to_string(coeffs.size()));
  DivisorClass::Coefficients c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs[i];
  return DivisorClass(c);
}

}  // namespace fatpoints
