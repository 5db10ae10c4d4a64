#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fatpoints/lattice.hpp"

namespace fatpoints {

/// Six distinct points described by their maximal collinear subsets
/// (1-based indices) and whether all six lie on an irreducible conic.
struct DistinctSpec {
  std::vector<std::vector<int>> collinear;
  bool six_on_conic = false;

  /// Throws InvalidArgument naming the violated rule.
  void validate() const;
};

/// A configuration named by its type, e.g. "A1", "2A1A2", "E6".
struct DynkinSpec {
  std::string type_name;
};

/// An explicit list of (-2)-curve classes.
struct NodalSpec {
  std::vector<DivisorClass> roots;
};

/// The prime classes of negative self-intersection, sorted.
class NegSet {
 public:
  NegSet() = default;
  explicit NegSet(std::vector<DivisorClass> classes);

  const std::vector<DivisorClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool contains(const DivisorClass& c) const;

  /// Members with C^2 = -2.
  std::vector<DivisorClass> nodal() const;
  /// Members with C^2 = -1.
  std::vector<DivisorClass> exceptional() const;

  auto begin() const { return classes_.begin(); }
  auto end() const { return classes_.end(); }

 private:
  std::vector<DivisorClass> classes_;
};

NegSet neg_from_distinct(const DistinctSpec& spec);

/// Nodal classes plus the exceptional classes meeting all of them
/// nonnegatively. Throws InvalidArgument on malformed input.
NegSet neg_from_nodal(const std::vector<DivisorClass>& nodal);

struct CatalogEntry {
  std::string name;
  std::vector<DivisorClass> roots;
};

/// The 20 types with their canonical nodal-root lists, in the published order.
const std::vector<CatalogEntry>& dynkin_catalog();

/// Returns nullptr if the name is not in the catalog.
const CatalogEntry* find_catalog_entry(std::string_view name);

/// Canonical name of the intersection graph of the given (-2)-classes, e.g.
/// "2A1A3". An empty list yields "". Throws InvalidArgument if a component
/// is not of type A, D or E or a pairwise product lies outside {0, 1}.
std::string dynkin_classify(const std::vector<DivisorClass>& nodal);

bool anticanonical_nef(const NegSet& neg);

/// Tagged configuration; `neg()` derives NEG for any variant.
class PointConfiguration {
 public:
  using Spec = std::variant<DistinctSpec, DynkinSpec, NodalSpec>;

  explicit PointConfiguration(Spec spec);

  const Spec& spec() const { return spec_; }
  bool is_distinct() const { return std::holds_alternative<DistinctSpec>(spec_); }
  const NegSet& neg() const { return neg_; }
  /// "distinct", or the Dynkin type name ("" for no (-2)-curves).
  std::string type_name() const { return type_name_; }

  /// Parses the JSON schema {"kind": "distinct"|"dynkin"|"nodal", ...}.
  static PointConfiguration from_json(std::string_view text);

 private:
  Spec spec_;
  NegSet neg_;
  std::string type_name_;
};

}  // namespace fatpoints
