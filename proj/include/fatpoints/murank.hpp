#pragma once

// Maximal-rank certificates for the multiplication map
//   mu_F : H0(F) (x) H0(E0) -> H0(F + E0)
// on nef classes, the chains of "stubborn" classes whose certificates do
// not follow from splitting off a well-behaved summand, and the sweep over
// all exceptional configurations of a surface.

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fatpoints/cones.hpp"
#include "fatpoints/config.hpp"
#include "fatpoints/oracle.hpp"

namespace fatpoints {

/// Kernel/cokernel bounds at point j:
///   q  = h0(F - Ej),  l  = h0(F - (E0 - Ej)),
///   q* = h1(F - Ej),  l* = h1(F - (E0 - Ej)).
struct MuBounds {
  int j = 1;
  Coeff q = 0, l = 0, q_star = 0, l_star = 0;
  Coeff h = 0, h_next = 0;
  Coeff expected_ker = 0, expected_cok = 0;
};

/// Largest F.Ej, smallest j on ties.
int preferred_index(const DivisorClass& f);

/// Points not infinitely near another one: j such that no degree-0 member
/// of neg has a negative Ej coefficient.
std::vector<int> proper_points(const NegSet& neg);

MuBounds ql_bounds_at(const DivisorClass& f, const NegSet& neg, int j);
/// Uses preferred_index(f) when e0_index_rule, otherwise j = 1. Throws
/// InvalidArgument if f is not effective.
MuBounds ql_bounds(const DivisorClass& f, const NegSet& neg, bool e0_index_rule = true);

/// q = 0, l = 0, q* > 0 or l* > 0 at the preferred index.
bool needs_attention(const DivisorClass& f, const NegSet& neg);

enum class CertStatus { Surjective, Injective, MaximalRank, Inconclusive };
const char* to_string(CertStatus s);

struct Certificate {
  CertStatus status = CertStatus::Inconclusive;
  std::string reason;  ///< rule tag, e.g. "qstar+lstar=0"
  std::string detail;  ///< supporting class or point index, may be empty
};

struct CertifierOptions {
  int recursion_depth = 4;
  /// Accept surjectivity when 2E0-E1-...-E6 is effective (points on a conic).
  bool allow_conic_fact = true;
  /// Coordinates for the oracle fallback; only meaningful in the identity
  /// frame of a distinct configuration.
  std::optional<PointSet> points;
};

/// Memoizing certificate search for one NEG set. Not thread-safe; use one
/// instance per worker.
class Certifier {
 public:
  Certifier(NegSet neg, GeneratorSet gens, CertifierOptions options = {});

  const NegSet& neg() const { return neg_; }
  const GeneratorSet& generators() const { return gens_; }
  const std::vector<int>& proper() const { return proper_; }
  /// Nef classes of smooth rational curves with C^2 >= 0.
  const std::vector<DivisorClass>& smooth_curves() const { return smooth_; }
  /// Curves of degree at most 2: NEG members and smooth curves. E0 restricts
  /// to them with globally generated sections, so mu splits along them.
  const std::vector<DivisorClass>& low_degree_curves() const { return low_degree_; }

  Coeff h0(const DivisorClass& f);
  Coeff h1(const DivisorClass& f);
  MuBounds bounds(const DivisorClass& f, int j);
  bool needs_attention(const DivisorClass& f);

  /// Throws InvalidArgument unless f is nef.
  Certificate certify(const DivisorClass& f);

  /// Proves surjectivity of mu_f (f nef) or returns nullopt.
  std::optional<Certificate> prove_surjective(const DivisorClass& f, int depth);

  /// Proves injectivity of mu_f for any class f (the fixed part does not
  /// change the kernel). Uses ker mu_f <= ker mu_{f-C} for an irreducible
  /// curve C of degree >= 2 with f.C = 0.
  std::optional<Certificate> prove_injective(const DivisorClass& f, int depth);

  /// Curve-step hypothesis: (f).C >= max(C.Ej, C.(E0-Ej)) for a proper j.
  bool curve_step_applies(const DivisorClass& f, const DivisorClass& c) const;

 private:
  std::optional<Certificate> direct(const DivisorClass& f);

  NegSet neg_;
  GeneratorSet gens_;
  CertifierOptions options_;
  std::vector<int> proper_;
  std::vector<DivisorClass> smooth_;
  std::vector<DivisorClass> low_degree_;
  std::vector<DivisorClass> good_generators_;
  bool conic_effective_ = false;
  std::unordered_map<DivisorClass, Coeff, DivisorClassHash> h0_cache_;
  std::unordered_map<DivisorClass, Certificate, DivisorClassHash> surj_success_;
  std::unordered_map<DivisorClass, int, DivisorClassHash> surj_failed_depth_;
  std::vector<DivisorClass> transfer_curves_;
};

/// levels[0] = S1, levels[i] = S_{i+1}.
struct SChain {
  std::vector<std::vector<DivisorClass>> levels;
  std::vector<std::size_t> sizes() const;
};

SChain s_chain(Certifier& certifier, const std::vector<DivisorClass>& gamma_classes, int depth);
SChain s_chain(const NegSet& neg, int depth);

struct Stabilization {
  bool found = false;
  int j = 0;
  int k = 0;
  std::map<DivisorClass, DivisorClass> witness;  ///< F in S_j -> C_F in S_1
  std::string failure;                           ///< why the last attempt failed
};

/// Tries j = 1..3, k = 1..2 in order; uniqueness of C_F is checked
/// exhaustively at level j + k.
Stabilization verify_stabilization(const SChain& chain);
/// Checks a single (j, k).
Stabilization check_stabilization(const SChain& chain, int j, int k);

/// Nef members of the orbit of E0.
std::vector<DivisorClass> e0_classes(const NegSet& neg);

/// [H, E1'', ..., E6''] where the Ei'' are the exceptional classes
/// orthogonal to H, ordered so that Ei'' - Ej'' effective implies i < j.
std::array<DivisorClass, kLatticeRank> exceptional_configuration(const DivisorClass& h, const NegSet& neg);

/// Coordinates of x with respect to the frame: (x.E0'', -x.E1'', ..., -x.E6'').
DivisorClass to_frame(const DivisorClass& x, const std::array<DivisorClass, kLatticeRank>& frame);

/// F is, up to permuting E1..E6, one of the classes on which mu can be
/// injective.
bool injectivity_class(const DivisorClass& f);

struct CertifiedClass {
  DivisorClass cls;
  int level = 0;  ///< 0 for a nef generator, i for a member of S_i
  Certificate cert;
};

struct TailFamily {
  DivisorClass base;   ///< G = F + i0 C_F, the last directly checked term
  DivisorClass step;   ///< C_F
  Coeff offset = 0;    ///< i0
  std::string rule;    ///< empty when no rule applied
  bool covered() const { return !rule.empty(); }
};

struct FrameReport {
  std::array<DivisorClass, kLatticeRank> frame;
  NegSet neg;  ///< NEG in frame coordinates
  std::size_t raw_count = 0, pared_count = 0, gamma_count = 0;
  std::vector<std::size_t> s_sizes;
  Stabilization stabilization;
  std::vector<CertifiedClass> entries;
  std::vector<TailFamily> tails;

  std::size_t inconclusive() const;
  bool verified() const;
  std::map<std::string, std::size_t> reason_counts() const;
};

/// Runs the full check for one NEG set given in its own coordinates.
FrameReport verify_frame(const NegSet& neg, int depth, CertifierOptions options = {});

struct VerificationReport {
  std::string type_name;
  std::vector<FrameReport> frames;
  std::size_t inconclusive() const;
  bool verified() const;
};

/// Identity frame only, or every E0'' when all_e0. `threads` = 0 picks the
/// hardware concurrency.
VerificationReport verify_configuration(const PointConfiguration& config, bool all_e0, int depth = 6,
                                        std::optional<PointSet> points = std::nullopt, unsigned threads = 0);

}  // namespace fatpoints
