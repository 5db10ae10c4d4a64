#include "fatpoints/oracle.hpp"

#include <atomic>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "fatpoints/error.hpp"

namespace fatpoints {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using u64 = std::uint64_t;

constexpr u64 kPrimes[2] = {1000000007ULL, 998244353ULL};

std::atomic<u64> g_exact_fallbacks{0};

struct Monomial {
  int x, y, z;
};

std::vector<Monomial> monomials(Coeff degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const int d = static_cast<int>(degree);
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

// Position of x^a y^b z^c among monomials(a + b + c).
std::size_t monomial_index(int a, int b, int c) {
  const int d = a + b + c;
  const int before = (d - a) * (d - a + 1) / 2;  // monomials with larger x-exponent
  return static_cast<std::size_t>(before + (d - a - b));
}

cpp_int falling(int n, int k) {
  cpp_int r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

cpp_int ipow(std::int64_t base, int e) {
  cpp_int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Rows: partial derivatives of order m-1 at each point; columns: monomials.
// Below degree m-1 those partials vanish identically, and the only form of
// degree t < m with a point of order m is zero, so order t is used instead.
std::vector<std::vector<cpp_int>> conditions(const PointSet& points, const Multiplicities& m, Coeff t) {
  const auto cols = monomials(t);
  std::vector<std::vector<cpp_int>> rows;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (m[p] <= 0) continue;
    const auto [px, py, pz] = points[p].xyz;
    for (const auto& der : monomials(std::min<Coeff>(m[p] - 1, t))) {
      std::vector<cpp_int> row(cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& mon = cols[c];
        if (mon.x < der.x || mon.y < der.y || mon.z < der.z) continue;
        row[c] = falling(mon.x, der.x) * falling(mon.y, der.y) * falling(mon.z, der.z) * ipow(px, mon.x - der.x) *
                 ipow(py, mon.y - der.y) * ipow(pz, mon.z - der.z);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

using ModMatrix = std::vector<std::vector<u64>>;

ModMatrix reduce_mod(const std::vector<std::vector<cpp_int>>& a, u64 p) {
  ModMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].resize(a[i].size());
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      cpp_int r = a[i][j] % p;
      if (r < 0) r += p;
      out[i][j] = static_cast<u64>(r);
    }
  }
  return out;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_mod(ModMatrix& a, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = powmod(a[r][c], p - 2, p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename T>
std::vector<std::vector<T>> nullspace_from_rref(const std::vector<std::vector<T>>& a, const std::vector<std::size_t>& pivots,
                                                std::size_t cols, auto negate) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = negate(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Multiplies each degree-t vector by x, y and z.
template <typename T>
std::vector<std::vector<T>> times_linear_forms(const std::vector<std::vector<T>>& basis, Coeff t) {
  const auto mons = monomials(t);
  const std::size_t target = static_cast<std::size_t>((t + 2) * (t + 3) / 2);
  std::vector<std::vector<T>> out;
  for (const auto& v : basis) {
    for (int var = 0; var < 3; ++var) {
      std::vector<T> w(target, T(0));
      for (std::size_t c = 0; c < mons.size(); ++c) {
        const auto& mon = mons[c];
        w[monomial_index(mon.x + (var == 0), mon.y + (var == 1), mon.z + (var == 2))] = v[c];
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

Coeff bareiss_rank(std::vector<std::vector<cpp_int>> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  cpp_int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<Coeff>(r);
}

std::size_t monomial_count(Coeff t) { return t < 0 ? 0 : static_cast<std::size_t>((t + 1) * (t + 2) / 2); }

struct ModResult {
  Coeff dim_t = 0;
  Coeff mu_rank = 0;
};

ModResult modular(const std::vector<std::vector<cpp_int>>& cond, Coeff t, u64 p, bool with_mu) {
  const std::size_t cols = monomial_count(t);
  ModMatrix a = reduce_mod(cond, p);
  const auto pivots = rref_mod(a, cols, p);
  ModResult res;
  res.dim_t = static_cast<Coeff>(cols - pivots.size());
  if (!with_mu || res.dim_t == 0) return res;
  auto basis = nullspace_from_rref(a, pivots, cols, [p](u64 x) { return (p - x) % p; });
  auto products = times_linear_forms(basis, t);
  res.mu_rank = static_cast<Coeff>(rref_mod(products, monomial_count(t + 1), p).size());
  return res;
}

void check_points(const PointSet& points) {
  for (const auto& pt : points)
    if (pt.xyz[0] == 0 && pt.xyz[1] == 0 && pt.xyz[2] == 0) fail(ErrorCode::InvalidArgument, "point (0:0:0) is not allowed");
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const auto& p = points[a].xyz;
      const auto& q = points[b].xyz;
      const bool same = cpp_int(p[0]) * q[1] == cpp_int(p[1]) * q[0] && cpp_int(p[0]) * q[2] == cpp_int(p[2]) * q[0] &&
                        cpp_int(p[1]) * q[2] == cpp_int(p[2]) * q[1];
      if (same)
        fail(ErrorCode::InvalidArgument,
             "points " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " coincide");
    }
}

void check_points(const PointSet& points, const Multiplicities& m) {
  check_points(points);
  for (Coeff x : m)
    if (x < 0) fail(ErrorCode::InvalidArgument, "multiplicities must be nonnegative");
}

cpp_int det3(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  const auto& [a0, a1, a2] = a.xyz;
  const auto& [b0, b1, b2] = b.xyz;
  const auto& [c0, c1, c2] = c.xyz;
  return cpp_int(a0) * (cpp_int(b1) * c2 - cpp_int(b2) * c1) - cpp_int(a1) * (cpp_int(b0) * c2 - cpp_int(b2) * c0) +
         cpp_int(a2) * (cpp_int(b0) * c1 - cpp_int(b1) * c0);
}

bool on_common_conic(const PointSet& points) {
  Multiplicities ones{1, 1, 1, 1, 1, 1};
  return bareiss_rank(conditions(points, ones, 2)) < 6;
}

}  // namespace

FixtureCase parse_fixture_case(std::string_view name) {
  if (name == "i") return FixtureCase::I;
  if (name == "ii") return FixtureCase::II;
  if (name == "iii") return FixtureCase::III;
  if (name == "iv") return FixtureCase::IV;
  if (name == "general") return FixtureCase::General;
  if (name == "conic") return FixtureCase::Conic;
  fail(ErrorCode::InvalidArgument, "unknown fixture case '" + std::string(name) + "' (use i|ii|iii|iv|general|conic)");
}

std::string fixture_case_name(FixtureCase c) {
  switch (c) {
    case FixtureCase::I: return "i";
    case FixtureCase::II: return "ii";
    case FixtureCase::III: return "iii";
    case FixtureCase::IV: return "iv";
    case FixtureCase::General: return "general";
    case FixtureCase::Conic: return "conic";
  }
  return "?";
}

PointSet fixture_points(FixtureCase c) {
  auto affine = [](std::initializer_list<std::array<std::int64_t, 2>> xy) {
    PointSet out;
    std::size_t i = 0;
    for (const auto& p : xy) out[i++].xyz = {p[0], p[1], 1};
    return out;
  };
  switch (c) {
    case FixtureCase::I: return affine({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 3}, {3, 2}});
    case FixtureCase::II: return affine({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {3, 5}});
    case FixtureCase::III: return affine({{0, 0}, {1, 0}, {4, 0}, {0, 1}, {0, 4}, {1, 3}});
    case FixtureCase::IV: {
      // Pairwise meets of x=0, y=0, z=0, x+y+z=0.
      PointSet out;
      out[0].xyz = {0, 0, 1};
      out[1].xyz = {0, 1, -1};
      out[2].xyz = {0, 1, 0};
      out[3].xyz = {1, 0, -1};
      out[4].xyz = {1, 0, 0};
      out[5].xyz = {1, -1, 0};
      return out;
    }
    case FixtureCase::Conic: {
      PointSet out;
      for (std::int64_t t = 0; t < kPointCount; ++t) out[static_cast<std::size_t>(t)].xyz = {1, t, t * t};
      return out;
    }
    case FixtureCase::General: {
      std::mt19937_64 rng(20260417);
      std::uniform_int_distribution<std::int64_t> coord(-40, 40);
      for (;;) {
        PointSet out;
        for (auto& p : out) p.xyz = {coord(rng), coord(rng), 1};
        bool distinct = true;
        for (std::size_t a = 0; a < out.size(); ++a)
          for (std::size_t b = a + 1; b < out.size(); ++b)
            if (out[a].xyz == out[b].xyz) distinct = false;
        if (!distinct) continue;
        const DistinctSpec found = spec_from_points(out);
        if (found.collinear.empty() && !found.six_on_conic) return out;
      }
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown fixture case");
}

DistinctSpec fixture_spec(FixtureCase c) {
  DistinctSpec spec;
  switch (c) {
    case FixtureCase::I: spec.collinear = {{1, 2, 3}}; break;
    case FixtureCase::II: spec.collinear = {{1, 2, 3}, {1, 4, 5}}; break;
    case FixtureCase::III: spec.collinear = {{1, 2, 3}, {1, 4, 5}, {3, 5, 6}}; break;
    case FixtureCase::IV: spec.collinear = {{1, 2, 3}, {1, 4, 5}, {3, 5, 6}, {2, 4, 6}}; break;
    case FixtureCase::General: break;
    case FixtureCase::Conic: spec.six_on_conic = true; break;
  }
  return spec;
}

DistinctSpec spec_from_points(const PointSet& points) {
  check_points(points);
  DistinctSpec spec;
  const int n = kPointCount;
  std::vector<std::vector<int>> lines;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> line{a + 1, b + 1};
      for (int c = 0; c < n; ++c)
        if (c != a && c != b && det3(points[a], points[b], points[c]) == 0) line.push_back(c + 1);
      if (line.size() < 3) continue;
      std::sort(line.begin(), line.end());
      if (std::find(lines.begin(), lines.end(), line) == lines.end()) lines.push_back(line);
    }
  std::sort(lines.begin(), lines.end());
  spec.collinear = lines;
  spec.six_on_conic = lines.empty() && on_common_conic(points);
  return spec;
}

Coeff ideal_dim_exact(const PointSet& points, const Multiplicities& m, Coeff t) {
  check_points(points, m);
  if (t < 0) return 0;
  return static_cast<Coeff>(monomial_count(t)) - bareiss_rank(conditions(points, m, t));
}

MuRank mu_rank_exact(const PointSet& points, const Multiplicities& m, Coeff t) {
  check_points(points, m);
  MuRank out;
  out.target_dim = ideal_dim_exact(points, m, t + 1);
  if (t < 0) return out;
  const auto cond = conditions(points, m, t);
  const std::size_t cols = monomial_count(t);
  std::vector<std::vector<cpp_rational>> a(cond.size());
  for (std::size_t i = 0; i < cond.size(); ++i) a[i].assign(cond[i].begin(), cond[i].end());

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const cpp_rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const cpp_rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  auto basis = nullspace_from_rref(a, pivots, cols, [](const cpp_rational& x) { return cpp_rational(-x); });
  out.source_dim = static_cast<Coeff>(3 * basis.size());
  if (basis.empty()) return out;

  std::vector<std::vector<cpp_int>> integral;
  for (const auto& v : basis) {
    cpp_int scale = 1;
    for (const auto& x : v) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(x));
    std::vector<cpp_int> w;
    for (const auto& x : v) w.push_back(boost::multiprecision::numerator(x) * (scale / boost::multiprecision::denominator(x)));
    integral.push_back(std::move(w));
  }
  out.rank = bareiss_rank(times_linear_forms(integral, t));
  return out;
}

Coeff ideal_dim(const PointSet& points, const Multiplicities& m, Coeff t) {
  check_points(points, m);
  if (t < 0) return 0;
  const auto cond = conditions(points, m, t);
  const Coeff d0 = modular(cond, t, kPrimes[0], false).dim_t;
  const Coeff d1 = modular(cond, t, kPrimes[1], false).dim_t;
  if (d0 == d1) return d0;
  ++g_exact_fallbacks;
  return ideal_dim_exact(points, m, t);
}

MuRank mu_rank_direct(const PointSet& points, const Multiplicities& m, Coeff t) {
  check_points(points, m);
  MuRank out;
  if (t < 0) {
    out.target_dim = ideal_dim(points, m, t + 1);
    return out;
  }
  const auto cond = conditions(points, m, t);
  const auto cond_next = conditions(points, m, t + 1);
  const ModResult r0 = modular(cond, t, kPrimes[0], true);
  const ModResult r1 = modular(cond, t, kPrimes[1], true);
  const Coeff n0 = modular(cond_next, t + 1, kPrimes[0], false).dim_t;
  const Coeff n1 = modular(cond_next, t + 1, kPrimes[1], false).dim_t;
  if (r0.dim_t != r1.dim_t || r0.mu_rank != r1.mu_rank || n0 != n1) {
    ++g_exact_fallbacks;
    return mu_rank_exact(points, m, t);
  }
  out.source_dim = 3 * r0.dim_t;
  out.target_dim = n0;
  out.rank = r0.mu_rank;
  return out;
}

std::uint64_t oracle_exact_fallbacks() { return g_exact_fallbacks.load(); }

}  // namespace fatpoints
