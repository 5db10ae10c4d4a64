// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fatpoints/cones.hpp"
#include "fatpoints/config.hpp"
#include "fatpoints/murank.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/resolution.hpp"
#include "fatpoints/weyl.hpp"
#include "tables.hpp"

using namespace fatpoints;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  std::string info;  // printed under the result line

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      note << what;
      ok = false;
    }
  }
};

int failures = 0;

void run(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0) out.expect(secs < budget_s, "over the " + std::to_string(budget_s) + " s budget");
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << timing << ")";
  if (!out.ok) std::cout << ": " << out.note.str();
  std::cout << "\n";
  if (!out.info.empty()) std::cout << "      " << out.info << "\n";
  std::cout << std::flush;
  if (!out.ok) ++failures;
}

NegSet four_lines() { return neg_from_distinct(fixture_spec(FixtureCase::IV)); }

std::string sizes_text(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

// Multiplicity vectors of the injectivity list, all orderings, families up
// to the given multiple.
std::vector<DivisorClass> injectivity_list(Coeff max_multiple) {
  std::vector<std::pair<Coeff, Multiplicities>> rows = {
      {0, {0, 0, 0, 0, 0, 0}}, {4, {2, 2, 2, 1, 1, 1}}, {5, {2, 2, 2, 2, 2, 2}},
      {6, {3, 3, 2, 2, 2, 2}}, {8, {4, 3, 3, 3, 3, 3}}, {10, {4, 4, 4, 4, 4, 4}},
  };
  for (Coeff k = 1; k <= max_multiple; ++k) {
    rows.push_back({2 * k, {k, k, k, k, 0, 0}});
    rows.push_back({3 * k, {2 * k, k, k, k, k, k}});
  }
  std::set<DivisorClass> out;
  for (auto [d, m] : rows) {
    std::sort(m.begin(), m.end());
    do out.insert(DivisorClass::fat(d, m));
    while (std::next_permutation(m.begin(), m.end()));
  }
  return {out.begin(), out.end()};
}

}  // namespace

int main() {
  run(1, "orbit census: 72+27+216+720+216+27+1 = 1279", 1.0, [](Outcome& o) {
    const std::vector<std::size_t> expect{72, 27, 216, 720, 216, 27, 1};
    std::vector<std::size_t> got;
    for (const auto& seed : orbit_seeds()) got.push_back(orbit(seed).size());
    o.expect(got == expect, "orbit sizes " + sizes_text(got));
    o.expect(orbit_union().size() == 1279, "union has " + std::to_string(orbit_union().size()));
  });

  run(2, "four collinear triples: 212 raw, 39 pared generators, table match", 10.0, [](Outcome& o) {
    const auto gens = nef_generators(four_lines());
    o.expect(gens.raw.size() == 212, "raw " + std::to_string(gens.raw.size()));
    o.expect(gens.pared.size() == 39, "pared " + std::to_string(gens.pared.size()));
    o.expect(tables::sorted(gens.pared) == tables::four_lines_generators(), "pared set differs from table");
  });

  run(3, "four collinear triples: 13 negative curves", 1.0, [](Outcome& o) {
    const auto neg = four_lines();
    o.expect(neg.classes() == tables::four_lines_neg(), "NEG differs (" + std::to_string(neg.size()) + " classes)");
  });

  run(4, "bounds for 3E0-E1-2E3-E4-E5: q = 1, q* = 0", 0, [](Outcome& o) {
    const auto b = ql_bounds(parse_class("3 -1 0 -2 -1 -1 0"), four_lines());
    o.expect(b.q == 1, "q = " + std::to_string(b.q));
    o.expect(b.q_star == 0, "q* = " + std::to_string(b.q_star));
  });

  run(5, "four collinear triples: 9 classes with q = 0, stable at k = 1 with C_F = F", 0, [](Outcome& o) {
    const auto chain = s_chain(four_lines(), 4);
    o.expect(!chain.levels.empty() && tables::sorted(chain.levels[0]) == tables::four_lines_first_level(),
             "first level differs");
    const auto st = check_stabilization(chain, 1, 1);
    o.expect(st.found, "no stabilization at (1,1): " + st.failure);
    for (const auto& [f, c] : st.witness) o.expect(f == c, "C_F != F for " + format_row(f));
  });

  run(6, "multiplicities 2,2,6,2,2,2: Hilbert function and Betti numbers", 1.0, [](Outcome& o) {
    const FatPointScheme z(PointConfiguration(fixture_spec(FixtureCase::IV)), {2, 2, 6, 2, 2, 2});
    const auto p = hilbert(z, 12);
    const std::vector<Coeff> expect{0, 1, 4, 11, 19, 30};
    for (Coeff t = 5; t <= 10; ++t)
      o.expect(p.at(t) == expect[static_cast<std::size_t>(t - 5)], "h(" + std::to_string(t) + ")");
    o.expect(p.alpha == 6, "alpha");
    o.expect(p.sigma == 10, "sigma");
    const auto b = betti(z, p);
    o.expect(b.t == std::map<Coeff, Coeff>{{6, 1}, {7, 1}, {8, 3}, {10, 2}}, "F0 = " + BettiTable::render(b.t));
    o.expect(b.s == std::map<Coeff, Coeff>{{8, 1}, {9, 3}, {11, 2}}, "F1 = " + BettiTable::render(b.s));
  });

  run(7, "Dynkin catalog: 20 types, recognition round trip, -K nef", 0, [](Outcome& o) {
    const auto& cat = dynkin_catalog();
    o.expect(cat.size() == 20, "catalog size " + std::to_string(cat.size()));
    for (const auto& e : cat) {
      o.expect(dynkin_classify(e.roots) == e.name, "recognition of " + e.name);
      o.expect(anticanonical_nef(neg_from_nodal(e.roots)), "-K not nef for " + e.name);
      o.expect(PointConfiguration::from_json(R"({"kind":"dynkin","type":")" + e.name + "\"}").type_name() == e.name,
               "json round trip of " + e.name);
    }
  });

  run(8, "type A1: chain sizes 58,140,150,150,150 and stabilization at (2,2)", 0, [](Outcome& o) {
    const auto neg = neg_from_nodal({parse_class("0 1 -1 0 0 0 0")});
    const auto chain = s_chain(neg, 5);
    const std::vector<std::size_t> expect{58, 140, 150, 150, 150};
    o.expect(chain.sizes() == expect, "sizes " + sizes_text(chain.sizes()));
    const auto st = check_stabilization(chain, 2, 2);
    o.expect(st.found, "(2,2) rejected: " + st.failure);
    const auto report = verify_frame(neg, 6);
    o.expect(report.inconclusive() == 0, std::to_string(report.inconclusive()) + " inconclusive");
  });

  run(9, "type 4A1: 17 nef line classes", 0, [](Outcome& o) {
    const auto n = e0_classes(neg_from_nodal(find_catalog_entry("4A1")->roots)).size();
    o.expect(n == 17, std::to_string(n) + " classes");
  });

  run(10, "injectivity dimension counts", 0, [](Outcome& o) {
    const auto a5 = neg_from_nodal({parse_class("0 1 -1 0 0 0 0"), parse_class("0 0 1 -1 0 0 0"),
                                    parse_class("0 0 0 1 -1 0 0"), parse_class("0 0 0 0 1 -1 0"),
                                    parse_class("0 0 0 0 0 1 -1")});
    const auto gens = tables::monotone_generators();
    o.expect(gens.size() == 19, "generator table size");
    for (const auto& g : gens) {
      o.expect(is_nef(g, a5), format_row(g) + " not nef");
      o.expect(2 * h0(g, a5) >= g.degree() + 1, "2h < d+1 for " + format_row(g));
    }
    std::vector<NegSet> configs{neg_from_distinct({})};
    for (auto c : {FixtureCase::I, FixtureCase::II, FixtureCase::III, FixtureCase::IV, FixtureCase::Conic})
      configs.push_back(neg_from_distinct(fixture_spec(c)));
    for (const auto& e : dynkin_catalog()) configs.push_back(neg_from_nodal(e.roots));
    std::size_t checked = 0;
    for (const auto& neg : configs)
      for (const auto& f : injectivity_list(6)) {
        if (!is_nef(f, neg)) continue;
        ++checked;
        o.expect(2 * h0(f, neg) <= f.degree() + 2, "2h > d+2 for " + format_row(f));
      }
    o.expect(checked > 0, "no nef class from the list");
  });

  run(11, "oracle equivalence on six point sets, 200 samples each", 300.0, [](Outcome& o) {
    std::mt19937_64 rng(20261017);
    std::size_t dims = 0, maps = 0;
    for (auto c : {FixtureCase::I, FixtureCase::II, FixtureCase::III, FixtureCase::IV, FixtureCase::General,
                   FixtureCase::Conic}) {
      const PointConfiguration config(fixture_spec(c));
      const auto pts = fixture_points(c);
      for (int sample = 0; sample < 200; ++sample) {
        Multiplicities m{};
        const Coeff total = std::uniform_int_distribution<Coeff>(0, 12)(rng);
        std::uniform_int_distribution<std::size_t> pick(0, kPointCount - 1);
        for (Coeff k = 0; k < total; ++k) ++m[pick(rng)];
        const FatPointScheme z(config, m);
        const auto p = hilbert(z);
        for (Coeff t = 0; t <= p.sigma + 1; ++t) {
          const std::string where = fixture_case_name(c) + " " + format_row(z.divisor(t));
          ++dims;
          o.expect(ideal_dim(pts, m, t) == p.at(t), "dim at " + where);
          if (!is_nef(z.divisor(t), z.neg)) continue;
          ++maps;
          const auto mu = mu_rank_direct(pts, m, t);
          o.expect(mu.cok() == mu_cokernel(z, p, t), "cokernel at " + where);
          o.expect(mu.ker() == std::max<Coeff>(0, 3 * p.at(t) - p.at(t + 1)), "kernel at " + where);
        }
      }
    }
    o.info = std::to_string(dims) + " dimensions and " + std::to_string(maps) + " multiplication maps compared";
  });

  run(12, "full sweep: four point cases and 20 types over all line classes", 1800.0, [](Outcome& o) {
    std::vector<PointConfiguration> configs;
    for (auto c : {FixtureCase::I, FixtureCase::II, FixtureCase::III, FixtureCase::IV})
      configs.emplace_back(fixture_spec(c));
    for (const auto& e : dynkin_catalog()) configs.emplace_back(DynkinSpec{e.name});
    std::size_t frames = 0;
    for (const auto& config : configs) {
      const auto report = verify_configuration(config, true);
      frames += report.frames.size();
      o.expect(report.inconclusive() == 0,
               config.type_name() + ": " + std::to_string(report.inconclusive()) + " inconclusive");
      for (const auto& f : report.frames)
        o.expect(f.stabilization.found, config.type_name() + ": frame " + format_row(f.frame[0]) + " not stable");
    }
    o.info = std::to_string(configs.size()) + " configurations, " + std::to_string(frames) + " frames";
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
