#pragma once

#include <cstdint>
#include <vector>

#include "semiloc/algebra.hpp"
#include "semiloc/radical.hpp"

namespace semiloc {

/// One simple block M_n(GF(p^k)) of a semisimple algebra.
struct WedderburnBlock {
  std::size_t n = 0;
  std::size_t k = 0;
  Vec central_idempotent;
  /// Certificate: an element of e·Z whose minimal polynomial (unit e) is
  /// irreducible of degree k.
  Vec center_generator;
};

struct SemisimpleDecomposition {
  std::vector<WedderburnBlock> blocks;
  std::size_t total_dim() const;
  /// Length of the regular module: sum of the n_i.
  std::size_t codim() const;
};

struct SplitOptions {
  std::size_t random_trials = 64;
  std::uint64_t seed = 0x5b1177ULL;
  /// Only use basis elements of the center (no random fallback).
  bool basis_only = false;
};

/// Central primitive idempotents by splitting the center with minimal
/// polynomials. Requires J(S) = 0; a repeated factor in a minimal polynomial
/// raises ValidationError. Throws SplitBudgetExceeded when the trials run out.
SemisimpleDecomposition wedderburn_decompose(const Algebra& s, SplitOptions options = {});

/// A primitive idempotent f of S inside the block with central idempotent e,
/// so that f S f has dimension k.
Vec primitive_idempotent_in_block(const Algebra& s, const WedderburnBlock& block,
                                  std::uint64_t seed = 0x1de7ULL, std::size_t trials = 512);

/// Everything the module layer needs about A: radical, A/J, and per block a
/// lifted primitive idempotent and a lifted central idempotent.
struct BlockLift {
  std::size_t n = 0;
  std::size_t k = 0;
  Vec central;    ///< idempotent of A lifting the block's central idempotent
  Vec primitive;  ///< primitive idempotent of A in this block
};

struct AlgebraAnalysis {
  Algebra algebra;
  RadicalReport radical;
  QuotientAlgebra quotient;
  SemisimpleDecomposition decomposition;
  std::vector<BlockLift> blocks;
  std::size_t codim() const { return decomposition.codim(); }
};

AlgebraAnalysis analyze(const Algebra& a, std::uint64_t budget = kDefaultEnumerationBudget);

/// codim(A) = sum of n_i over the blocks of A/J(A).
std::size_t ring_codim(const Algebra& a, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace semiloc
