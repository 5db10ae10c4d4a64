#include "fatpoints/config.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "fatpoints/error.hpp"
#include "fatpoints/weyl.hpp"

namespace fatpoints {

namespace {

std::string describe_subset(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

DivisorClass line_through(const std::vector<int>& points) {
  DivisorClass::Coefficients c{};
  c[0] = 1;
  for (int p : points) c[static_cast<std::size_t>(p)] = -1;
  return DivisorClass(c);
}

const DivisorClass& conic_class() {
  static const DivisorClass q({2, -1, -1, -1, -1, -1, -1});
  return q;
}

}  // namespace

void DistinctSpec::validate() const {
  if (six_on_conic && !collinear.empty())
    fail(ErrorCode::InvalidArgument, "six points on an irreducible conic cannot have 3 collinear");
  std::vector<std::set<int>> sets;
  for (const auto& subset : collinear) {
    if (subset.size() < 3)
      fail(ErrorCode::InvalidArgument, "collinear subset " + describe_subset(subset) + " has fewer than 3 points");
    if (subset.size() >= 5)
      fail(ErrorCode::InvalidArgument, "collinear subset " + describe_subset(subset) + " has 5 or more points");
    std::set<int> s;
    for (int p : subset) {
      if (p < 1 || p > kPointCount)
        fail(ErrorCode::InvalidArgument, "point index " + std::to_string(p) + " outside 1..6");
      if (!s.insert(p).second)
        fail(ErrorCode::InvalidArgument, "collinear subset " + describe_subset(subset) + " repeats a point");
    }
    for (const auto& other : sets) {
      std::vector<int> common;
      std::set_intersection(s.begin(), s.end(), other.begin(), other.end(), std::back_inserter(common));
      if (common.size() >= 2) {
        const std::string kind = subset.size() == 3 && other.size() == 3 ? "triples" : "subsets";
        fail(ErrorCode::InvalidArgument, "two collinear " + kind + " share " + std::to_string(common.size()) + " points");
      }
    }
    sets.push_back(std::move(s));
  }
}

NegSet::NegSet(std::vector<DivisorClass> classes) : classes_(std::move(classes)) {
  std::sort(classes_.begin(), classes_.end());
  classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
}

bool NegSet::contains(const DivisorClass& c) const {
  return std::binary_search(classes_.begin(), classes_.end(), c);
}

std::vector<DivisorClass> NegSet::nodal() const {
  std::vector<DivisorClass> out;
  for (const auto& c : classes_)
    if (self_intersection(c) == -2) out.push_back(c);
  return out;
}

std::vector<DivisorClass> NegSet::exceptional() const {
  std::vector<DivisorClass> out;
  for (const auto& c : classes_)
    if (self_intersection(c) == -1) out.push_back(c);
  return out;
}

NegSet neg_from_distinct(const DistinctSpec& spec) {
  spec.validate();
  std::vector<DivisorClass> out;
  for (int i = 1; i <= kPointCount; ++i) out.push_back(DivisorClass::basis(i));

  bool on_line[kPointCount + 1][kPointCount + 1] = {};
  for (const auto& subset : spec.collinear) {
    out.push_back(line_through(subset));
    for (int a : subset)
      for (int b : subset) on_line[a][b] = true;
  }
  for (int i = 1; i <= kPointCount; ++i)
    for (int j = i + 1; j <= kPointCount; ++j)
      if (!on_line[i][j]) out.push_back(line_through({i, j}));

  if (spec.six_on_conic) {
    out.push_back(conic_class());
  } else {
    for (int omitted = 1; omitted <= kPointCount; ++omitted) {
      std::vector<int> five;
      for (int p = 1; p <= kPointCount; ++p)
        if (p != omitted) five.push_back(p);
      bool has_collinear_triple = false;
      for (const auto& subset : spec.collinear) {
        const auto inside = std::count_if(subset.begin(), subset.end(), [&](int p) { return p != omitted; });
        if (inside >= 3) has_collinear_triple = true;
      }
      if (!has_collinear_triple) {
        DivisorClass c = conic_class();
        out.push_back(c + DivisorClass::basis(omitted));
      }
    }
  }
  return NegSet(std::move(out));
}

NegSet neg_from_nodal(const std::vector<DivisorClass>& nodal) {
  const DivisorClass k = canonical_class();
  for (std::size_t a = 0; a < nodal.size(); ++a) {
    if (self_intersection(nodal[a]) != -2 || intersect(nodal[a], k) != 0)
      fail(ErrorCode::InvalidArgument, "not a nodal class (need C^2=-2, C.K=0): " + format_row(nodal[a]));
    for (std::size_t b = a + 1; b < nodal.size(); ++b) {
      if (nodal[a] == nodal[b]) fail(ErrorCode::InvalidArgument, "repeated nodal class: " + format_row(nodal[a]));
      if (intersect(nodal[a], nodal[b]) < 0)
        fail(ErrorCode::InvalidArgument,
             "nodal classes meet negatively: " + format_row(nodal[a]) + " and " + format_row(nodal[b]));
    }
  }
  std::vector<DivisorClass> out(nodal.begin(), nodal.end());
  for (const auto& e : exceptional_classes()) {
    if (std::all_of(nodal.begin(), nodal.end(), [&](const DivisorClass& c) { return intersect(e, c) >= 0; }))
      out.push_back(e);
  }
  return NegSet(std::move(out));
}

const std::vector<CatalogEntry>& dynkin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    const DivisorClass q = conic_class();
    auto diff = [](int i, int j) { return DivisorClass::basis(i) - DivisorClass::basis(j); };
    auto line = [](std::initializer_list<int> pts) { return DivisorClass::minus_points(1, pts); };
    return std::vector<CatalogEntry>{
        {"A1", {q}},
        {"2A1", {q, diff(1, 2)}},
        {"A2", {line({1, 2, 3}), line({4, 5, 6})}},
        {"3A1", {q, diff(1, 2), diff(3, 4)}},
        {"A1A2", {q, diff(1, 2), diff(2, 3)}},
        {"A3", {line({1, 2, 3}), line({1, 4, 5}), diff(1, 6)}},
        {"4A1", {q, diff(1, 2), diff(3, 4), diff(5, 6)}},
        {"2A1A2", {q, diff(1, 2), diff(3, 4), diff(4, 5)}},
        {"A1A3", {q, diff(1, 2), diff(2, 3), diff(3, 4)}},
        {"2A2", {line({1, 2, 3}), line({4, 5, 6}), diff(1, 2), diff(2, 3)}},
        {"A4", {line({1, 2, 3}), line({1, 4, 5}), diff(1, 2), diff(2, 6)}},
        {"D4", {line({1, 3, 5}), diff(1, 2), diff(3, 4), diff(5, 6)}},
        {"A12A2", {q, diff(1, 2), diff(2, 3), diff(4, 5), diff(5, 6)}},
        {"2A1A3", {q, diff(1, 2), diff(3, 4), diff(4, 5), diff(5, 6)}},
        {"A1A4", {q, diff(1, 2), diff(2, 3), diff(3, 4), diff(4, 5)}},
        {"A5", {line({1, 2, 3}), line({1, 4, 5}), diff(1, 2), diff(2, 3), diff(3, 6)}},
        {"D5", {line({1, 3, 4}), diff(1, 2), diff(3, 4), diff(4, 5), diff(5, 6)}},
        {"3A2", {line({1, 2, 3}), line({4, 5, 6}), diff(1, 2), diff(2, 3), diff(4, 5), diff(5, 6)}},
        {"A1A5", {q, diff(1, 2), diff(2, 3), diff(3, 4), diff(4, 5), diff(5, 6)}},
        {"E6", {line({1, 2, 3}), diff(1, 2), diff(2, 3), diff(3, 4), diff(4, 5), diff(5, 6)}},
    };
  }();
  return catalog;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : dynkin_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

std::string dynkin_classify(const std::vector<DivisorClass>& nodal) {
  const std::size_t n = nodal.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (self_intersection(nodal[a]) != -2)
      fail(ErrorCode::InvalidArgument, "not a (-2)-class: " + format_row(nodal[a]));
    for (std::size_t b = a + 1; b < n; ++b) {
      const Coeff x = intersect(nodal[a], nodal[b]);
      if (x != 0 && x != 1)
        fail(ErrorCode::InvalidArgument, "intersection " + std::to_string(x) + " between " + format_row(nodal[a]) +
                                             " and " + format_row(nodal[b]) + " is not 0 or 1");
      if (x == 1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }

  std::vector<std::pair<char, int>> parts;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t nb : adj[comp[k]])
        if (!seen[nb]) {
          seen[nb] = true;
          comp.push_back(nb);
        }
    const int size = static_cast<int>(comp.size());
    std::size_t edges = 0;
    std::vector<std::size_t> branch;
    for (std::size_t v : comp) {
      edges += adj[v].size();
      if (adj[v].size() > 3) fail(ErrorCode::InvalidArgument, "diagram has a vertex of degree > 3");
      if (adj[v].size() == 3) branch.push_back(v);
    }
    edges /= 2;
    if (edges != comp.size() - 1) fail(ErrorCode::InvalidArgument, "diagram component contains a cycle");
    if (branch.empty()) {
      parts.emplace_back('A', size);
      continue;
    }
    if (branch.size() > 1) fail(ErrorCode::InvalidArgument, "diagram component has two branch points");
    std::vector<int> arms;
    for (std::size_t first : adj[branch[0]]) {
      int len = 1;
      std::size_t prev = branch[0], cur = first;
      while (adj[cur].size() == 2) {
        const std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      parts.emplace_back('D', size);
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
      parts.emplace_back('E', size);
    } else {
      fail(ErrorCode::InvalidArgument, "diagram component is not of type A, D or E");
    }
  }

  std::sort(parts.begin(), parts.end());
  std::string name;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (j - i > 1) name += std::to_string(j - i);
    name += parts[i].first + std::to_string(parts[i].second);
    i = j;
  }
  return name;
}

bool anticanonical_nef(const NegSet& neg) {
  const DivisorClass ak = anticanonical_class();
  return std::all_of(neg.begin(), neg.end(), [&](const DivisorClass& c) { return intersect(ak, c) >= 0; });
}

namespace {

NegSet resolve_nodal(const std::vector<DivisorClass>& roots, std::string& type_name) {
  for (const auto& r : roots)
    if (!is_positive_root(r)) fail(ErrorCode::InvalidArgument, "nodal class is not a positive root: " + format_row(r));
  NegSet neg = neg_from_nodal(roots);
  type_name = dynkin_classify(roots);
  if (roots.empty()) return neg;
  const CatalogEntry* entry = find_catalog_entry(type_name);
  if (!entry) fail(ErrorCode::InvalidArgument, "type " + type_name + " is not one of the 20 catalog types");
  if (!w6_equivalent(roots, entry->roots))
    fail(ErrorCode::InvalidArgument, "nodal classes of type " + type_name + " are not equivalent to the catalog entry");
  return neg;
}

}  // namespace

PointConfiguration::PointConfiguration(Spec spec) : spec_(std::move(spec)) {
  if (auto* d = std::get_if<DistinctSpec>(&spec_)) {
    neg_ = neg_from_distinct(*d);
    type_name_ = "distinct";
  } else if (auto* t = std::get_if<DynkinSpec>(&spec_)) {
    const CatalogEntry* entry = find_catalog_entry(t->type_name);
    if (!entry) fail(ErrorCode::InvalidArgument, "unknown Dynkin type '" + t->type_name + "'");
    neg_ = neg_from_nodal(entry->roots);
    type_name_ = entry->name;
  } else {
    neg_ = resolve_nodal(std::get<NodalSpec>(spec_).roots, type_name_);
  }
}

PointConfiguration PointConfiguration::from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("configuration is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    fail(ErrorCode::Parse, "configuration needs a string field \"kind\"");
  const std::string kind = doc["kind"];
  try {
    if (kind == "distinct") {
      DistinctSpec spec;
      if (doc.contains("collinear")) spec.collinear = doc["collinear"].get<std::vector<std::vector<int>>>();
      if (doc.contains("six_on_conic")) spec.six_on_conic = doc["six_on_conic"].get<bool>();
      return PointConfiguration(spec);
    }
    if (kind == "dynkin") {
      if (!doc.contains("type")) fail(ErrorCode::Parse, "dynkin configuration needs a \"type\" field");
      return PointConfiguration(DynkinSpec{doc["type"].get<std::string>()});
    }
    if (kind == "nodal") {
      NodalSpec spec;
      for (const auto& row : doc.value("roots", json::array())) {
        spec.roots.push_back(from_vector(row.get<std::vector<Coeff>>()));
      }
      return PointConfiguration(spec);
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed configuration field: ") + e.what());
  }
  fail(ErrorCode::Parse, "unknown configuration kind '" + kind + "'");
}

}  // namespace fatpoints
