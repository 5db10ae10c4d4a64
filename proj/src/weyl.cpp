#include "fatpoints/weyl.hpp"

#include <algorithm>
#include <unordered_set>

#include "fatpoints/error.hpp"

namespace fatpoints {

const std::array<DivisorClass, kSimpleRootCount>& simple_roots() {
  static const std::array<DivisorClass, kSimpleRootCount> roots = {
      DivisorClass({1, -1, -1, -1, 0, 0, 0}), DivisorClass({0, 1, -1, 0, 0, 0, 0}),
      DivisorClass({0, 0, 1, -1, 0, 0, 0}),   DivisorClass({0, 0, 0, 1, -1, 0, 0}),
      DivisorClass({0, 0, 0, 0, 1, -1, 0}),   DivisorClass({0, 0, 0, 0, 0, 1, -1}),
  };
  return roots;
}

DivisorClass reflect(const DivisorClass& x, int i) {
  if (i < 0 || i >= kSimpleRootCount)
    fail(ErrorCode::InvalidArgument, "reflection index out of range: " + std::to_string(i));
  const DivisorClass& r = simple_roots()[static_cast<std::size_t>(i)];
  return x + intersect(x, r) * r;
}

std::vector<DivisorClass> orbit(const DivisorClass& seed, std::size_t cap) {
  std::unordered_set<DivisorClass, DivisorClassHash> seen{seed};
  std::vector<DivisorClass> frontier{seed};
  while (!frontier.empty()) {
    std::vector<DivisorClass> next;
    for (const auto& x : frontier) {
      for (int i = 0; i < kSimpleRootCount; ++i) {
        DivisorClass y = reflect(x, i);
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            fail(ErrorCode::CapExceeded, "orbit of " + format_row(seed) + " exceeds cap " + std::to_string(cap));
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<DivisorClass> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::array<Coeff, kSimpleRootCount> simple_root_coordinates(const DivisorClass& x) {
  if (intersect(x, canonical_class()) != 0)
    fail(ErrorCode::InvalidArgument, "class is not orthogonal to K: " + format_row(x));
  std::array<Coeff, kSimpleRootCount> c{};
  c[0] = x[0];
  c[1] = x[1] + c[0];
  c[2] = x[2] + c[0] + c[1];
  c[3] = x[3] + c[0] + c[2];
  c[4] = x[4] + c[3];
  c[5] = x[5] + c[4];
  return c;
}

bool is_positive_root(const DivisorClass& x) {
  if (intersect(x, x) != -2 || intersect(x, canonical_class()) != 0) return false;
  const auto c = simple_root_coordinates(x);
  return std::all_of(c.begin(), c.end(), [](Coeff v) { return v >= 0; });
}

const std::vector<Root>& all_roots() {
  static const std::vector<Root> roots = [] {
    std::vector<Root> out;
    for (const auto& r : orbit(simple_roots()[0])) out.push_back({r, is_positive_root(r)});
    return out;
  }();
  return roots;
}

const std::vector<DivisorClass>& exceptional_classes() {
  static const std::vector<DivisorClass> lines = orbit(DivisorClass::basis(1));
  return lines;
}

const std::vector<DivisorClass>& orbit_seeds() {
  static const std::vector<DivisorClass> seeds = {
      DivisorClass::minus_points(1, {}),
      DivisorClass::minus_points(1, {1}),
      DivisorClass::minus_points(2, {1, 2}),
      DivisorClass::minus_points(3, {1, 2, 3}),
      DivisorClass::minus_points(3, {1, 2, 3, 4}),
      DivisorClass::minus_points(3, {1, 2, 3, 4, 5}),
      anticanonical_class(),
  };
  return seeds;
}

const std::vector<DivisorClass>& orbit_union() {
  static const std::vector<DivisorClass> all = [] {
    std::vector<DivisorClass> out;
    for (const auto& s : orbit_seeds()) {
      auto o = orbit(s);
      out.insert(out.end(), o.begin(), o.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  return all;
}

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<DivisorClass>& v) const noexcept {
    std::size_t h = v.size();
    DivisorClassHash inner;
    for (const auto& d : v) h = h * 1000003ULL ^ inner(d);
    return h;
  }
};

}  // namespace

bool w6_equivalent(std::vector<DivisorClass> a, std::vector<DivisorClass> b, std::size_t cap) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b) return true;
  std::unordered_set<std::vector<DivisorClass>, TupleHash> seen{a};
  std::vector<std::vector<DivisorClass>> frontier{a};
  while (!frontier.empty()) {
    std::vector<std::vector<DivisorClass>> next;
    for (const auto& tuple : frontier) {
      for (int i = 0; i < kSimpleRootCount; ++i) {
        std::vector<DivisorClass> image;
        image.reserve(tuple.size());
        for (const auto& x : tuple) image.push_back(reflect(x, i));
        std::sort(image.begin(), image.end());
        if (image == b) return true;
        if (seen.insert(image).second) {
          if (seen.size() > cap) fail(ErrorCode::CapExceeded, "set orbit exceeds cap " + std::to_string(cap));
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace fatpoints
