#pragma once

// Published tables used as fixtures. Rows are display coefficients
// (a0 a1 ... a6) of a0 E0 + a1 E1 + ... + a6 E6.

#include <algorithm>
#include <string_view>
#include <vector>

#include "fatpoints/lattice.hpp"

namespace tables {

inline std::vector<fatpoints::DivisorClass> parse_rows(std::initializer_list<std::string_view> rows) {
  std::vector<fatpoints::DivisorClass> out;
  for (auto r : rows) out.push_back(fatpoints::parse_class(r));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<fatpoints::DivisorClass> sorted(std::vector<fatpoints::DivisorClass> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Pared nef generators for four collinear triples {123, 145, 356, 246}.
inline std::vector<fatpoints::DivisorClass> four_lines_generators() {
  return parse_rows({
      "1 0 0 0 0 0 0",    "2 -1 0 -1 0 -1 0",  "3 0 0 -1 -2 -1 -1", "2 0 -1 -1 -1 0 0",
      "2 -1 0 0 -1 0 -1", "3 -1 0 -2 -1 -1 0", "2 0 0 -1 -1 -1 0",  "2 -1 -1 0 0 -1 0",
      "3 0 -1 0 -1 -2 -1", "2 0 0 0 -1 -1 -1", "2 -1 0 -1 0 0 -1", "3 -1 -1 -1 0 0 -2",
      "2 -1 0 -1 -1 0 0", "1 -1 0 0 0 0 0",    "3 -1 -1 -1 -2 0 0", "2 0 -1 0 -1 -1 0",
      "1 0 -1 0 0 0 0",   "3 -1 0 0 -1 -1 -2", "2 0 0 -1 -1 0 -1",  "1 0 0 -1 0 0 0",
      "3 0 -1 -2 -1 0 -1", "2 0 -1 0 0 -1 -1", "1 0 0 0 -1 0 0",    "3 -1 -2 0 -1 -1 0",
      "2 0 -1 -1 0 0 -1", "1 0 0 0 0 -1 0",    "3 0 -2 -1 0 -1 -1", "2 -1 0 0 0 -1 -1",
      "1 0 0 0 0 0 -1",   "3 -1 -1 -1 0 -2 0", "2 -1 -1 0 0 0 -1",  "2 0 -1 -1 -1 -1 0",
      "3 -2 0 -1 0 -1 -1", "2 -1 -1 0 -1 0 0", "2 -1 -1 0 0 -1 -1", "3 -2 -1 0 -1 0 -1",
      "2 0 -1 -1 0 -1 0", "2 -1 0 -1 -1 0 -1", "3 -1 -1 -1 -1 -1 -1",
  });
}

inline std::vector<fatpoints::DivisorClass> four_lines_neg() {
  return parse_rows({
      "1 -1 -1 -1 0 0 0", "1 -1 0 0 -1 -1 0", "1 0 0 -1 0 -1 -1", "1 0 -1 0 -1 0 -1",
      "0 0 0 0 0 0 1",    "0 1 0 0 0 0 0",    "0 0 1 0 0 0 0",    "0 0 0 1 0 0 0",
      "0 0 0 0 1 0 0",    "0 0 0 0 0 1 0",    "1 0 0 -1 -1 0 0",  "1 0 -1 0 0 -1 0",
      "1 -1 0 0 0 0 -1",
  });
}

// Nef generators on which q = 0 (the first chain level).
inline std::vector<fatpoints::DivisorClass> four_lines_first_level() {
  return parse_rows({
      "1 -1 0 0 0 0 0", "1 0 -1 0 0 0 0",   "1 0 0 -1 0 0 0",   "1 0 0 0 -1 0 0",   "1 0 0 0 0 -1 0",
      "1 0 0 0 0 0 -1", "2 0 -1 -1 -1 -1 0", "2 -1 -1 0 0 -1 -1", "2 -1 0 -1 -1 0 -1",
  });
}

// Nef cone generators for monotone multiplicities m1 >= ... >= m6.
inline std::vector<fatpoints::DivisorClass> monotone_generators() {
  return parse_rows({
      "1 0 0 0 0 0 0",     "3 -2 -1 -1 -1 -1 -1", "6 -3 -3 -2 -2 -2 -1", "2 -1 -1 -1 0 0 0",
      "2 -1 -1 0 0 0 0",   "3 -1 -1 -1 -1 -1 0",  "3 -2 -1 -1 -1 -1 0",  "4 -2 -2 -2 -1 -1 0",
      "4 -2 -2 -1 -1 -1 -1", "4 -2 -2 -2 -1 -1 -1", "6 -3 -3 -2 -2 -2 -2", "5 -2 -2 -2 -2 -2 -1",
      "5 -2 -2 -2 -2 -2 -2", "6 -3 -3 -2 -2 -2 0",  "3 -1 -1 -1 -1 -1 -1", "1 -1 0 0 0 0 0",
      "4 -2 -2 -1 -1 -1 0", "2 -1 -1 -1 -1 0 0",  "5 -2 -2 -2 -2 -2 0",
  });
}

}  // namespace tables
