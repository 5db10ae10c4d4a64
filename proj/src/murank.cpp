#include "fatpoints/murank.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "fatpoints/error.hpp"
#include "fatpoints/weyl.hpp"

namespace fatpoints {

namespace {

const DivisorClass kE0 = DivisorClass::basis(0);

DivisorClass point_class(int j) { return DivisorClass::basis(j); }
DivisorClass line_class(int j) { return kE0 - DivisorClass::basis(j); }

MuBounds assemble(const DivisorClass& f, int j, auto&& h0_of) {
  MuBounds b;
  b.j = j;
  const DivisorClass minus_point = f - point_class(j);
  const DivisorClass minus_line = f - line_class(j);
  b.q = h0_of(minus_point);
  b.l = h0_of(minus_line);
  b.q_star = b.q - chi(minus_point);
  b.l_star = b.l - chi(minus_line);
  b.h = h0_of(f);
  b.h_next = h0_of(f + kE0);
  b.expected_ker = std::max<Coeff>(0, 3 * b.h - b.h_next);
  b.expected_cok = std::max<Coeff>(0, b.h_next - 3 * b.h);
  return b;
}

bool attention_from(const MuBounds& b) { return b.q == 0 || b.l == 0 || b.q_star > 0 || b.l_star > 0; }

const std::vector<DivisorClass>& smooth_rational_classes() {
  static const std::vector<DivisorClass> all = [] {
    std::vector<DivisorClass> out;
    for (const auto& seed : {DivisorClass::minus_points(1, {}), DivisorClass::minus_points(1, {1}),
                             DivisorClass::minus_points(2, {1, 2})}) {
      auto o = orbit(seed);
      out.insert(out.end(), o.begin(), o.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return all;
}

}  // namespace

int preferred_index(const DivisorClass& f) {
  int best = 1;
  for (int i = 2; i <= kPointCount; ++i)
    if (f.multiplicity(i) > f.multiplicity(best)) best = i;
  return best;
}

std::vector<int> proper_points(const NegSet& neg) {
  std::vector<bool> near(kPointCount + 1, false);
  for (const auto& c : neg)
    if (c.degree() == 0)
      for (int i = 1; i <= kPointCount; ++i)
        if (c[i] < 0) near[static_cast<std::size_t>(i)] = true;
  std::vector<int> out;
  for (int i = 1; i <= kPointCount; ++i)
    if (!near[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

MuBounds ql_bounds_at(const DivisorClass& f, const NegSet& neg, int j) {
  if (j < 1 || j > kPointCount) fail(ErrorCode::InvalidArgument, "point index out of range: " + std::to_string(j));
  if (fatpoints::h0(f, neg) == 0) fail(ErrorCode::InvalidArgument, "class is not effective: " + format_row(f));
  return assemble(f, j, [&](const DivisorClass& x) { return fatpoints::h0(x, neg); });
}

MuBounds ql_bounds(const DivisorClass& f, const NegSet& neg, bool e0_index_rule) {
  return ql_bounds_at(f, neg, e0_index_rule ? preferred_index(f) : 1);
}

bool needs_attention(const DivisorClass& f, const NegSet& neg) { return attention_from(ql_bounds(f, neg)); }

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Surjective: return "Surjective";
    case CertStatus::Injective: return "Injective";
    case CertStatus::MaximalRank: return "MaximalRank";
    case CertStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Certifier

Certifier::Certifier(NegSet neg, GeneratorSet gens, CertifierOptions options)
    : neg_(std::move(neg)), gens_(std::move(gens)), options_(std::move(options)), proper_(proper_points(neg_)) {
  for (const auto& c : smooth_rational_classes())
    if (is_nef(c, neg_)) smooth_.push_back(c);
  std::set<DivisorClass> low;
  for (const auto& c : neg_)
    if (c.degree() <= 2) low.insert(c);
  for (const auto& c : smooth_)
    if (c.degree() <= 2) low.insert(c);
  low_degree_.assign(low.begin(), low.end());
  std::set<DivisorClass> transfer;
  for (const auto& c : neg_)
    if (c.degree() >= 2) transfer.insert(c);
  for (const auto& c : smooth_)
    if (c.degree() >= 2) transfer.insert(c);
  transfer_curves_.assign(transfer.begin(), transfer.end());
  for (const auto& g : gens_.pared)
    if (!needs_attention(g)) good_generators_.push_back(g);
  conic_effective_ = h0(DivisorClass({2, -1, -1, -1, -1, -1, -1})) > 0;
}

Coeff Certifier::h0(const DivisorClass& f) {
  if (f.degree() < 0) return 0;
  auto it = h0_cache_.find(f);
  if (it != h0_cache_.end()) return it->second;
  const Coeff v = fatpoints::h0(f, neg_);
  h0_cache_.emplace(f, v);
  return v;
}

Coeff Certifier::h1(const DivisorClass& f) {
  if (f.degree() < -2) fail(ErrorCode::InvalidArgument, "h1 needs degree >= -2: " + format_row(f));
  return h0(f) - chi(f);
}

MuBounds Certifier::bounds(const DivisorClass& f, int j) {
  return assemble(f, j, [this](const DivisorClass& x) { return h0(x); });
}

bool Certifier::needs_attention(const DivisorClass& f) { return attention_from(bounds(f, preferred_index(f))); }

bool Certifier::curve_step_applies(const DivisorClass& f, const DivisorClass& c) const {
  const Coeff fc = intersect(f, c);
  return std::any_of(proper_.begin(), proper_.end(), [&](int j) {
    return fc >= std::max(intersect(c, point_class(j)), intersect(c, line_class(j)));
  });
}

std::optional<Certificate> Certifier::direct(const DivisorClass& f) {
  std::vector<MuBounds> all;
  for (int j : proper_) all.push_back(bounds(f, j));
  for (const auto& b : all)
    if (b.q_star + b.l_star == 0)
      return Certificate{CertStatus::Surjective, "qstar+lstar=0", "j=" + std::to_string(b.j)};
  for (const auto& b : all)
    if (b.q + b.l == 0) return Certificate{CertStatus::Injective, "l=q=0", "j=" + std::to_string(b.j)};
  // With q = 0 the kernel is exactly l; maximal rank iff l is the forced value.
  for (const auto& b : all) {
    if (b.q != 0 || b.l != b.expected_ker) continue;
    const Coeff cok = b.l + b.h_next - 3 * b.h;
    const CertStatus s = cok == 0 ? CertStatus::Surjective : CertStatus::Injective;
    return Certificate{s, "q=0 pins kernel", "j=" + std::to_string(b.j)};
  }
  return std::nullopt;
}

std::optional<Certificate> Certifier::prove_surjective(const DivisorClass& f, int depth) {
  if (auto it = surj_success_.find(f); it != surj_success_.end()) return it->second;
  if (auto it = surj_failed_depth_.find(f); it != surj_failed_depth_.end() && it->second >= depth) return std::nullopt;

  auto succeed = [&](Certificate c) {
    surj_success_.emplace(f, c);
    return std::optional<Certificate>(std::move(c));
  };

  if (auto d = direct(f); d && d->status == CertStatus::Surjective) return succeed(*d);

  if (h0(f + kE0) == 3 * h0(f))
    if (auto inj = prove_injective(f, options_.recursion_depth))
      return succeed({CertStatus::Surjective, "kernel transfer, square map", inj->detail});

  for (const auto& g : good_generators_) {
    if (g == f) continue;
    if (is_nef(f - g, neg_)) return succeed({CertStatus::Surjective, "split off good generator", format_row(g)});
  }

  if (depth > 0) {
    for (const auto& c : smooth_) {
      const DivisorClass rest = f - c;
      if (!curve_step_applies(f, c) || !is_nef(rest, neg_)) continue;
      if (prove_surjective(rest, depth - 1)) return succeed({CertStatus::Surjective, "curve step", format_row(c)});
    }
    for (const auto& c : low_degree_) {
      const DivisorClass rest = f - c;
      if (intersect(f, c) < 0 || !is_nef(rest, neg_)) continue;
      if (prove_surjective(rest, depth - 1))
        return succeed({CertStatus::Surjective, "low-degree curve step", format_row(c)});
    }
  }
  surj_failed_depth_[f] = std::max(depth, surj_failed_depth_[f]);
  return std::nullopt;
}

std::optional<Certificate> Certifier::prove_injective(const DivisorClass& f, int depth) {
  const Reduction r = reduce(f, neg_);
  if (!r.effective) return Certificate{CertStatus::Injective, "no sections", ""};
  const DivisorClass& m = r.nef_part;
  for (int j : proper_) {
    const MuBounds b = bounds(m, j);
    if (b.q + b.l == 0) return Certificate{CertStatus::Injective, "l=q=0", "j=" + std::to_string(j)};
  }
  if (depth <= 0) return std::nullopt;
  for (const auto& c : transfer_curves_) {
    if (intersect(m, c) != 0) continue;
    if (auto sub = prove_injective(m - c, depth - 1)) {
      std::string detail = format_row(c);
      if (!sub->detail.empty() && sub->reason == "kernel transfer") detail += "; " + sub->detail;
      return Certificate{CertStatus::Injective, "kernel transfer", detail};
    }
  }
  return std::nullopt;
}

Certificate Certifier::certify(const DivisorClass& f) {
  if (!is_nef(f, neg_)) fail(ErrorCode::InvalidArgument, "certify needs a nef class: " + format_row(f));
  if (auto d = direct(f)) return *d;
  if (auto s = prove_surjective(f, options_.recursion_depth)) return *s;
  if (auto i = prove_injective(f, options_.recursion_depth)) return *i;
  if (options_.allow_conic_fact && conic_effective_) return {CertStatus::Surjective, "points on a conic", ""};
  if (options_.points) {
    bool plain = true;
    Multiplicities m{};
    for (int i = 1; i <= kPointCount; ++i) {
      m[static_cast<std::size_t>(i - 1)] = f.multiplicity(i);
      if (f.multiplicity(i) < 0) plain = false;
    }
    if (plain) {
      const MuRank r = mu_rank_direct(*options_.points, m, f.degree());
      if (r.cok() == 0) return {CertStatus::Surjective, "oracle", ""};
      if (r.ker() == 0) return {CertStatus::Injective, "oracle", ""};
      return {CertStatus::Inconclusive, "oracle: not maximal rank", ""};
    }
  }
  return {CertStatus::Inconclusive, "no rule applies", ""};
}

// ---------------------------------------------------------------------------
// Chains and stabilization

std::vector<std::size_t> SChain::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.size());
  return out;
}

SChain s_chain(Certifier& certifier, const std::vector<DivisorClass>& gamma_classes, int depth) {
  SChain chain;
  if (depth < 1) return chain;
  std::vector<DivisorClass> first;
  for (const auto& g : gamma_classes)
    if (certifier.needs_attention(g)) first.push_back(g);
  std::sort(first.begin(), first.end());
  chain.levels.push_back(first);
  for (int level = 1; level < depth; ++level) {
    std::set<DivisorClass> next;
    for (const auto& a : chain.levels.back())
      for (const auto& b : first) {
        const DivisorClass sum = a + b;
        if (!next.count(sum) && certifier.needs_attention(sum)) next.insert(sum);
      }
    chain.levels.emplace_back(next.begin(), next.end());
  }
  return chain;
}

SChain s_chain(const NegSet& neg, int depth) {
  GeneratorSet gens = nef_generators(neg);
  const auto g = gamma(neg, gens);
  Certifier certifier(neg, std::move(gens));
  return s_chain(certifier, g, depth);
}

Stabilization check_stabilization(const SChain& chain, int j, int k) {
  Stabilization st;
  st.j = j;
  st.k = k;
  const int depth = static_cast<int>(chain.levels.size());
  if (j < 1 || k < 1 || j + k > depth) {
    st.failure = "chain too short for j=" + std::to_string(j) + ", k=" + std::to_string(k);
    return st;
  }
  auto level = [&](int i) -> const std::vector<DivisorClass>& { return chain.levels[static_cast<std::size_t>(i - 1)]; };
  auto in_level = [&](int i, const DivisorClass& x) {
    const auto& l = level(i);
    return std::binary_search(l.begin(), l.end(), x);
  };
  const auto& first = level(1);
  for (const auto& f : level(j)) {
    std::vector<DivisorClass> candidates;
    for (const auto& c : first)
      if (in_level(j + k, f + k * c)) candidates.push_back(c);
    if (candidates.size() != 1) {
      st.failure = std::to_string(candidates.size()) + " candidate steps for " + format_row(f);
      return st;
    }
    st.witness.emplace(f, candidates.front());
  }
  // The families must exhaust every available level, not only 1..k.
  for (int i = 1; j + i <= depth; ++i) {
    std::set<DivisorClass> image;
    for (const auto& [f, c] : st.witness) image.insert(f + i * c);
    const auto& target = level(j + i);
    if (!std::equal(image.begin(), image.end(), target.begin(), target.end())) {
      st.failure = "level " + std::to_string(j + i) + " is not {F + " + std::to_string(i) + " C_F}";
      st.witness.clear();
      return st;
    }
  }
  st.found = true;
  return st;
}

Stabilization verify_stabilization(const SChain& chain) {
  Stabilization last;
  last.failure = "chain too short";
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 2; ++k) {
      if (j + k > static_cast<int>(chain.levels.size())) continue;
      Stabilization st = check_stabilization(chain, j, k);
      if (st.found) return st;
      last = std::move(st);
    }
  last.found = false;
  return last;
}

// ---------------------------------------------------------------------------
// Frames

std::vector<DivisorClass> e0_classes(const NegSet& neg) {
  std::vector<DivisorClass> out;
  for (const auto& h : orbit(kE0))
    if (is_nef(h, neg)) out.push_back(h);
  return out;
}

std::array<DivisorClass, kLatticeRank> exceptional_configuration(const DivisorClass& h, const NegSet& neg) {
  if (self_intersection(h) != 1 || intersect(h, anticanonical_class()) != 3)
    fail(ErrorCode::InvalidArgument, "not an E0 class: " + format_row(h));
  std::vector<DivisorClass> lines;
  for (const auto& e : exceptional_classes())
    if (intersect(e, h) == 0) lines.push_back(e);
  if (lines.size() != kPointCount) fail(ErrorCode::Internal, "expected 6 exceptional classes orthogonal to " + format_row(h));
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b)
      if (intersect(lines[a], lines[b]) != 0) fail(ErrorCode::Internal, "exceptional classes are not orthogonal");

  // Topological order of "Ea - Eb effective"; among ready classes take the
  // lexicographically largest, which makes H = E0 the identity frame.
  const std::size_t n = lines.size();
  std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
  std::vector<int> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && h0(lines[a] - lines[b], neg) > 0) {
        before[a][b] = true;
        ++indegree[b];
      }
  std::array<DivisorClass, kLatticeRank> frame;
  frame[0] = h;
  std::vector<bool> used(n, false);
  for (std::size_t slot = 1; slot <= n; ++slot) {
    std::optional<std::size_t> pick;
    for (std::size_t a = 0; a < n; ++a)
      if (!used[a] && indegree[a] == 0 && (!pick || lines[*pick] < lines[a])) pick = a;
    if (!pick) fail(ErrorCode::Internal, "effectiveness order on exceptional classes has a cycle");
    used[*pick] = true;
    frame[slot] = lines[*pick];
    for (std::size_t b = 0; b < n; ++b)
      if (before[*pick][b]) --indegree[b];
  }
  return frame;
}

DivisorClass to_frame(const DivisorClass& x, const std::array<DivisorClass, kLatticeRank>& frame) {
  DivisorClass::Coefficients c{};
  c[0] = intersect(x, frame[0]);
  for (std::size_t i = 1; i < frame.size(); ++i) c[i] = -intersect(x, frame[i]);
  return DivisorClass(c);
}

bool injectivity_class(const DivisorClass& f) {
  std::array<Coeff, kPointCount> m{};
  for (int i = 1; i <= kPointCount; ++i) m[static_cast<std::size_t>(i - 1)] = f.multiplicity(i);
  std::sort(m.begin(), m.end(), std::greater<>());
  const Coeff d = f.degree();
  using Row = std::pair<Coeff, std::array<Coeff, kPointCount>>;
  static const Row sporadic[] = {
      {0, {0, 0, 0, 0, 0, 0}}, {4, {2, 2, 2, 1, 1, 1}}, {5, {2, 2, 2, 2, 2, 2}},
      {6, {3, 3, 2, 2, 2, 2}}, {8, {4, 3, 3, 3, 3, 3}}, {10, {4, 4, 4, 4, 4, 4}},
  };
  for (const auto& [deg, mult] : sporadic)
    if (d == deg && m == mult) return true;
  static const Row families[] = {{2, {1, 1, 1, 1, 0, 0}}, {3, {2, 1, 1, 1, 1, 1}}};
  for (const auto& [deg, mult] : families) {
    if (d < 0 || d % deg != 0) continue;
    const Coeff k = d / deg;
    bool match = true;
    for (std::size_t i = 0; i < m.size(); ++i) match = match && m[i] == k * mult[i];
    if (match) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

// Tail rules for G + iC, i >= 1, given G already handled.
std::string tail_rule(Certifier& cert, const DivisorClass& g, const DivisorClass& c, CertStatus g_status) {
  const auto& smooth = cert.smooth_curves();
  const bool smooth_curve = std::binary_search(smooth.begin(), smooth.end(), c);
  const Coeff c2 = self_intersection(c);
  if (c2 >= 0 && g_status == CertStatus::Surjective) {
    if (smooth_curve && cert.curve_step_applies(g + c, c)) return "repeated curve step";
    const auto& low = cert.low_degree_curves();
    if (std::binary_search(low.begin(), low.end(), c) && intersect(g + c, c) >= 0) return "repeated low-degree curve step";
  }
  for (int j : cert.proper()) {
    const DivisorClass minus_point = g - point_class(j);
    const DivisorClass minus_line = g - line_class(j);
    if (smooth_curve && c2 >= 0) {
      const MuBounds b = cert.bounds(g, j);
      if (b.q_star == 0 && b.l_star == 0 && intersect(c, minus_point + c) >= -1 && intersect(c, minus_line + c) >= -1)
        return "h1 vanishing propagates";
    }
    if (c2 == 0 && is_nef(c, cert.neg()) && intersect(minus_point, c) < 0 && intersect(minus_line, c) < 0)
      return "q and l stay zero";
  }
  return "";
}

}  // namespace

std::size_t FrameReport::inconclusive() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.cert.status == CertStatus::Inconclusive) ++n;
  for (const auto& t : tails)
    if (!t.covered()) ++n;
  if (!stabilization.found) ++n;
  return n;
}

bool FrameReport::verified() const { return inconclusive() == 0; }

std::map<std::string, std::size_t> FrameReport::reason_counts() const {
  std::map<std::string, std::size_t> out;
  for (const auto& e : entries) ++out[e.cert.reason];
  for (const auto& t : tails) ++out[t.covered() ? "tail: " + t.rule : "tail: uncovered"];
  return out;
}

FrameReport verify_frame(const NegSet& neg, int depth, CertifierOptions options) {
  if (depth < 2) fail(ErrorCode::InvalidArgument, "verification depth must be at least 2");
  FrameReport report;
  report.neg = neg;
  GeneratorSet gens = nef_generators(neg);
  const auto gamma_classes = gamma(neg, gens);
  report.raw_count = gens.raw.size();
  report.pared_count = gens.pared.size();
  report.gamma_count = gamma_classes.size();
  const auto pared = gens.pared;
  Certifier cert(neg, std::move(gens), std::move(options));

  for (const auto& g : pared) report.entries.push_back({g, 0, cert.certify(g)});

  const SChain chain = s_chain(cert, gamma_classes, depth);
  report.s_sizes = chain.sizes();
  std::map<DivisorClass, CertStatus> status;
  for (std::size_t lvl = 0; lvl < chain.levels.size(); ++lvl)
    for (const auto& f : chain.levels[lvl]) {
      Certificate c = cert.certify(f);
      status[f] = c.status;
      report.entries.push_back({f, static_cast<int>(lvl + 1), std::move(c)});
    }

  report.stabilization = verify_stabilization(chain);
  if (report.stabilization.found) {
    const int j = report.stabilization.j;
    for (const auto& [f, c] : report.stabilization.witness) {
      TailFamily tail;
      tail.step = c;
      for (int i0 = depth - j; i0 >= 0 && !tail.covered(); --i0) {
        const DivisorClass g = f + i0 * c;
        const auto it = status.find(g);
        const CertStatus s = it != status.end() ? it->second : cert.certify(g).status;
        if (s == CertStatus::Inconclusive) continue;
        tail.base = g;
        tail.offset = i0;
        tail.rule = tail_rule(cert, g, c, s);
      }
      if (!tail.covered()) {
        tail.base = f + (depth - j) * c;
        tail.offset = depth - j;
      }
      report.tails.push_back(std::move(tail));
    }
  }
  return report;
}

std::size_t VerificationReport::inconclusive() const {
  std::size_t n = 0;
  for (const auto& f : frames) n += f.inconclusive();
  return n;
}

bool VerificationReport::verified() const { return inconclusive() == 0; }

VerificationReport verify_configuration(const PointConfiguration& config, bool all_e0, int depth,
                                        std::optional<PointSet> points, unsigned threads) {
  const NegSet& neg = config.neg();
  if (!anticanonical_nef(neg)) fail(ErrorCode::Unsupported, "-K is not nef; verification is not available");
  VerificationReport report;
  report.type_name = config.type_name();
  std::vector<DivisorClass> heads = all_e0 ? e0_classes(neg) : std::vector<DivisorClass>{kE0};
  // Identity frame first.
  std::stable_partition(heads.begin(), heads.end(), [](const DivisorClass& h) { return h == kE0; });
  report.frames.resize(heads.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next++;
      if (idx >= heads.size()) return;
      try {
        const auto frame = exceptional_configuration(heads[idx], neg);
        std::vector<DivisorClass> moved;
        for (const auto& c : neg) {
          const DivisorClass x = to_frame(c, frame);
          if (self_intersection(x) == -2 && !is_positive_root(x))
            fail(ErrorCode::Internal, "frame change produced a negative root " + format_row(x));
          moved.push_back(x);
        }
        CertifierOptions options;
        if (heads[idx] == kE0 && config.is_distinct()) options.points = points;
        FrameReport fr = verify_frame(NegSet(std::move(moved)), depth, std::move(options));
        fr.frame = frame;
        report.frames[idx] = std::move(fr);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(heads.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return report;
}

}  // namespace fatpoints
