#include "fatpoints/cones.hpp"

#include <algorithm>
#include <unordered_set>

#include "fatpoints/error.hpp"
#include "fatpoints/weyl.hpp"

namespace fatpoints {

namespace {
constexpr int kReductionStepCap = 1 << 20;
}  // namespace

DivisorClass Reduction::fixed_sum() const {
  DivisorClass sum;
  for (const auto& [c, mult] : fixed_part) sum += mult * c;
  return sum;
}

bool is_nef(const DivisorClass& f, std::span<const DivisorClass> curves) {
  return std::all_of(curves.begin(), curves.end(), [&](const DivisorClass& c) { return intersect(f, c) >= 0; });
}

bool is_nef(const DivisorClass& f, const NegSet& neg) { return is_nef(f, neg.classes()); }

Reduction reduce(const DivisorClass& f, std::span<const DivisorClass> order) {
  // A.F drops by at least one per step; the cap only catches a malformed NEG.
  Reduction r;
  DivisorClass cur = f;
  for (int step = 0; step < kReductionStepCap; ++step) {
    if (cur.degree() < 0) {
      r.nef_part = cur;
      r.effective = false;
      return r;
    }
    const auto hit = std::find_if(order.begin(), order.end(), [&](const DivisorClass& c) { return intersect(cur, c) < 0; });
    if (hit == order.end()) {
      r.nef_part = cur;
      r.effective = true;
      return r;
    }
    cur -= *hit;
    r.trace.push_back(*hit);
    auto slot = std::find_if(r.fixed_part.begin(), r.fixed_part.end(), [&](const auto& p) { return p.first == *hit; });
    if (slot == r.fixed_part.end())
      r.fixed_part.emplace_back(*hit, 1);
    else
      ++slot->second;
  }
  fail(ErrorCode::Internal, "reduction of " + format_row(f) + " did not terminate");
}

Reduction reduce(const DivisorClass& f, const NegSet& neg) { return reduce(f, std::span(neg.classes())); }

Coeff h0(const DivisorClass& f, const NegSet& neg) {
  // Same loop as reduce() without recording the trace.
  DivisorClass cur = f;
  const auto& curves = neg.classes();
  for (int step = 0; step < kReductionStepCap; ++step) {
    if (cur.degree() < 0) return 0;
    bool moved = false;
    for (const auto& c : curves) {
      if (intersect(cur, c) < 0) {
        cur -= c;
        moved = true;
        break;
      }
    }
    if (!moved) return chi(cur);
  }
  fail(ErrorCode::Internal, "reduction of " + format_row(f) + " did not terminate");
}

Coeff h1(const DivisorClass& f, const NegSet& neg) {
  if (f.degree() < -2) fail(ErrorCode::InvalidArgument, "h1 needs degree >= -2: " + format_row(f));
  const Coeff value = h0(f, neg) - chi(f);
  if (value < 0) fail(ErrorCode::Internal, "negative h1 for " + format_row(f));
  return value;
}

DivisorClass termination_weight() { return DivisorClass({19, -6, -5, -4, -3, -2, -1}); }

bool termination_measure_holds(const NegSet& neg) {
  const DivisorClass a = termination_weight();
  return std::all_of(neg.begin(), neg.end(), [&](const DivisorClass& c) { return intersect(a, c) >= 1; });
}

GeneratorSet nef_generators(const NegSet& neg) {
  if (!anticanonical_nef(neg)) fail(ErrorCode::Unsupported, "-K is not nef; nef-cone generators are not available");
  GeneratorSet gens;
  for (const auto& f : orbit_union())
    if (is_nef(f, neg)) gens.raw.push_back(f);

  // Removing sums against the shrinking set never removes more than the
  // first pass against the raw list, so the loop stops after one round.
  std::vector<DivisorClass> current = gens.raw;
  for (;;) {
    std::unordered_set<DivisorClass, DivisorClassHash> members(current.begin(), current.end());
    std::vector<DivisorClass> kept;
    for (const auto& f : current) {
      const bool is_sum = std::any_of(current.begin(), current.end(), [&](const DivisorClass& a) {
        return a != f && members.count(f - a) && f - a != f;
      });
      if (!is_sum) kept.push_back(f);
    }
    if (kept.size() == current.size()) break;
    current = std::move(kept);
  }
  gens.pared = std::move(current);
  return gens;
}

std::vector<DivisorClass> gamma(const NegSet& neg, const GeneratorSet& gens) {
  // Any nonzero nef class dominates some pared generator, so it suffices
  // to test the pared generators as the smaller summand.
  std::vector<DivisorClass> out;
  for (const auto& g : gens.pared) {
    const bool splits = std::any_of(gens.pared.begin(), gens.pared.end(), [&](const DivisorClass& h) {
      if (h == g) return false;
      const DivisorClass rest = g - h;
      return !rest.is_zero() && is_nef(rest, neg);
    });
    if (!splits) out.push_back(g);
  }
  return out;
}

}  // namespace fatpoints
