#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "semiloc/locality.hpp"
#include "semiloc/module_structure.hpp"

namespace semiloc {

enum class BridgeKind { Step1Psi, Spectral, Dual, Chi, BigPhi, Pair, Top };
std::string to_string(BridgeKind k);

/// End(X)/J(End(X)) for X an injective envelope or a projective cover, with
/// J cut out by its linear description (kills the socle, resp. lands in the
/// radical). Certified on construction: J is a nilpotent two-sided ideal
/// and dim End(X)/J = sum m_i^2 k_i over the socle (resp. top) types.
struct EndoQuotient {
  EndoAlgebra end;
  Subspace radical;
  QuotientAlgebra quotient;
};

/// Realizes End_Spec(X) as End(E(X))/J: an endomorphism f of X is extended
/// along the envelope and reduced mod J.
struct SpectralTarget {
  Module object;
  InjectiveEnvelope envelope;
  EndoQuotient target;
  FpMatrix system;  ///< columns: flattened iota·g_t for the basis g_t of End(E)

  /// Coordinates in End(E) of an extension of f. With rng, a uniformly
  /// random extension instead of the solver's canonical one.
  Vec extension(const FpMatrix& f, std::mt19937_64* rng = nullptr) const;
  Vec class_of(const FpMatrix& f, std::mt19937_64* rng = nullptr) const;
};
SpectralTarget spectral_target(const Module& x, const AlgebraAnalysis& an);

/// Realizes End_C'(X) as End(P(X))/J: f is lifted along the cover.
struct DualTarget {
  Module object;
  ProjectiveCover cover;
  EndoQuotient target;
  FpMatrix system;  ///< columns: flattened g_t·pi

  Vec lifting(const FpMatrix& f, std::mt19937_64* rng = nullptr) const;
  Vec class_of(const FpMatrix& f, std::mt19937_64* rng = nullptr) const;
};
DualTarget dual_target(const Module& x, const AlgebraAnalysis& an);

struct BridgeMorphism {
  BridgeKind kind = BridgeKind::Spectral;
  /// Nonzero target factors in order; a zero factor (e.g. End(L1) for
  /// injective M) is dropped, so chi of an injective module equals the
  /// spectral bridge.
  std::vector<Algebra> target_factors;
  AlgebraMorphism morphism;  ///< End(M) -> product of target_factors
};

struct IdealPair {
  Subspace essential_kernel;    ///< I: {f : soc M ⊆ ker f}
  Subspace superfluous_image;   ///< K: {f : im f ⊆ rad M}
};

struct BoundsReport {
  std::size_t codim_end = 0;
  std::size_t dim = 0;          ///< Goldie dimension of M
  std::size_t codim = 0;        ///< dual Goldie dimension of M
  std::size_t dim_cokernel = 0; ///< Goldie dimension of E(M)/M
  std::size_t codim_kernel = 0; ///< dual Goldie dimension of ker(P(M) -> M)
  bool b1 = false;  ///< codim End <= dim + dim(E/M)
  bool b2 = false;  ///< codim End <= dim + codim
  bool b3 = false;  ///< codim End <= codim + codim K
  bool b1_equal = false, b2_equal = false, b3_equal = false;
  bool all() const { return b1 && b2 && b3; }
};

struct BiuniformClass {
  int which_case = 0;  ///< 1: End local with maximal ideal I + K; 2: I, K the two maximal ideals
  IdealPair ideals;
  Subspace radical;  ///< J(End M)
};

/// Per-module cache of End(M), envelopes, covers and their quotient rings.
/// All bridge constructions go through here so a suite computes each piece
/// once. The seed drives the independent second lifting used to re-verify
/// well-definedness.
class BridgeContext {
 public:
  BridgeContext(Module m, AlgebraAnalysis an, std::uint64_t seed = 0xb41d9eULL,
                std::uint64_t budget = kDefaultEnumerationBudget);

  const Module& module() const { return m_; }
  const AlgebraAnalysis& analysis() const { return an_; }
  const EndoAlgebra& end();
  const StructuralSeries& series();
  const SpectralTarget& spectral();
  const DualTarget& dual();
  /// E(M)/M with its projection from E(M).
  const QuotientModule& cokernel();
  const SubmoduleData& cover_kernel();

  BridgeMorphism spectral_bridge();
  BridgeMorphism dual_bridge();
  BridgeMorphism chi_bridge();
  BridgeMorphism bigphi_bridge();
  BridgeMorphism pair_bridge();
  /// Requires top(M) free, so the projective cover is a free module F with
  /// K = ker(F -> M) ⊆ F·J; throws CoverViolation otherwise.
  BridgeMorphism step1_psi();
  /// End(M) -> End(M/MJ), f -> induced map on the top. Local whenever A is
  /// commutative; in general it can fail to be.
  BridgeMorphism top_bridge();

  IdealPair ideal_pair();
  BoundsReport bounds();
  /// Throws NotBiuniform unless Goldie dimensions are (1, 1).
  BiuniformClass biuniform_classify();

  /// Radical and Wedderburn data of End(M) itself.
  const AlgebraAnalysis& end_analysis();
  std::size_t codim_end() { return end_analysis().codim(); }

 private:
  // f -> class of f in each target, for the basis of End(M). Run twice,
  // the second time with random liftings; the matrices must agree.
  template <class Columns>
  BridgeMorphism assemble(BridgeKind kind, std::vector<Algebra> factors, Columns&& columns);

  Module m_;
  AlgebraAnalysis an_;
  std::uint64_t seed_;
  std::uint64_t budget_;
  std::optional<EndoAlgebra> end_;
  std::optional<StructuralSeries> series_;
  std::optional<SpectralTarget> spectral_;
  std::optional<DualTarget> dual_;
  std::optional<QuotientModule> cokernel_;
  std::optional<SpectralTarget> cokernel_spectral_;
  std::optional<SubmoduleData> cover_kernel_;
  std::optional<DualTarget> cover_kernel_dual_;
  std::optional<AlgebraAnalysis> end_analysis_;
};

BridgeMorphism spectral_bridge(const Module& m, const AlgebraAnalysis& an);
BridgeMorphism dual_bridge(const Module& m, const AlgebraAnalysis& an);
BridgeMorphism chi_bridge(const Module& m, const AlgebraAnalysis& an);
BridgeMorphism bigphi_bridge(const Module& m, const AlgebraAnalysis& an);
BridgeMorphism pair_bridge(const Module& m, const AlgebraAnalysis& an);
BridgeMorphism step1_psi(const Module& m, const AlgebraAnalysis& an);
BridgeMorphism top_bridge(const Module& m, const AlgebraAnalysis& an);
IdealPair ideal_pair(const Module& m, const AlgebraAnalysis& an);
BoundsReport bounds_report(const Module& m, const AlgebraAnalysis& an);
BiuniformClass biuniform_classify(const Module& m, const AlgebraAnalysis& an);

}  // namespace semiloc
