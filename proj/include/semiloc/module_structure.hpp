#pragma once

#include <vector>

#include "semiloc/module.hpp"
#include "semiloc/wedderburn.hpp"

namespace semiloc {

/// Analysis of A^op reusing the data of A: J(A^op) = J(A) as a subspace, and
/// idempotents of A stay idempotent (and primitive, central) in A^op.
AlgebraAnalysis opposite_analysis(const AlgebraAnalysis& a);

/// Multiplicity of each simple type (indexed like analysis.blocks) in a
/// semisimple subquotient spanned by `span` modulo `below`, computed as
/// dim(U·e_i)/(n_i·k_i) with lifted central idempotents e_i.
std::vector<std::size_t> semisimple_multiplicities(const Module& m, const AlgebraAnalysis& an,
                                                   const Subspace& span, const Subspace& below);

struct StructuralSeries {
  Subspace socle;    ///< {v : v·J = 0}
  Subspace radical;  ///< M·J
  std::vector<std::size_t> socle_multiplicities;
  std::vector<std::size_t> top_multiplicities;
  std::size_t socle_length = 0;
  std::size_t top_length = 0;
};
StructuralSeries structural_series(const Module& m, const AlgebraAnalysis& an);

struct GoldieDims {
  std::size_t dim = 0;    ///< socle length
  std::size_t codim = 0;  ///< top length
};
GoldieDims goldie_dims(const Module& m, const AlgebraAnalysis& an);

struct Position {
  bool essential = false;
  bool superfluous = false;
};
/// Throws NotASubmodule. At finite length: essential iff U ⊇ soc M,
/// superfluous iff U ⊆ M·J.
Position submodule_position(const Module& m, const Subspace& u, const AlgebraAnalysis& an);
Position submodule_position(const Module& m, const Subspace& u, const StructuralSeries& s);

/// f·A as a right ideal, realized as a module on the canonical basis of f·A.
SubmoduleData principal_projective(const AlgebraAnalysis& an, std::size_t block);

struct ProjectiveCover {
  Module cover;
  ModuleHom pi;
  Subspace kernel;
  /// Block index of each indecomposable summand f_i·A, in order.
  std::vector<std::size_t> summand_blocks;
};
/// Throws CoverViolation if the kernel is not superfluous or pi is not onto
/// (both are certified on every call).
ProjectiveCover projective_cover(const Module& m, const AlgebraAnalysis& an);

struct InjectiveEnvelope {
  Module envelope;
  ModuleHom iota;
};
/// E(M) = D(P(DM)) computed over the opposite algebra. Throws CoverViolation
/// unless iota is injective with essential image. With `baer_check`, also
/// runs the cyclic extension test (throws CoverViolation on failure).
InjectiveEnvelope injective_envelope(const Module& m, const AlgebraAnalysis& an, bool baer_check = false);

/// Extension test: every hom a·A -> E extends to A -> E, for the given
/// elements a (callers pass basis vectors plus random samples).
bool cyclic_extension_property(const Module& e, const std::vector<Vec>& elements);

struct TopComplement {
  Module complement;
  /// Rank n of the free top: top(M ⊕ N) ≅ (A/J)^n.
  std::size_t free_rank = 0;
  /// Copies of each simple type added, as (block, count).
  std::vector<std::size_t> added;
};
/// N = ⊕ copies of A/(1 - f_i)A for the missing simple tops, so that
/// top(M) ⊕ top(N) is free of minimal rank. Verified before returning.
TopComplement build_top_complement(const Module& m, const AlgebraAnalysis& an);

}  // namespace semiloc
