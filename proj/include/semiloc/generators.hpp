#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "semiloc/algebra.hpp"
#include "semiloc/module_structure.hpp"

namespace semiloc {

using Rng = std::mt19937_64;

/// Uniform residue in [0, p); avoids std distributions so sequences are
/// identical across standard libraries.
inline Residue random_residue(Rng& rng, Residue p) { return static_cast<Residue>(rng() % p); }
Vec random_vector(Rng& rng, Residue p, std::size_t n);
FpMatrix random_invertible(Rng& rng, Residue p, std::size_t n);

// ---------------------------------------------------------------------------
// Algebra families

/// UT_n(GF(p)).
Algebra gen_triangular(std::size_t n, Residue p);
/// GF(p)[x]/(x^n).
Algebra gen_truncated_poly(std::size_t n, Residue p);

struct Quiver {
  std::size_t vertices = 1;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  ///< (source, target)
};
/// kQ modulo paths longer than max_len. Paths compose left to right: a·b is
/// "a then b" and is nonzero iff target(a) = source(b).
Algebra gen_path_algebra(const Quiver& q, std::size_t max_len, Residue p);

/// GF(p^k) ⋉ GF(p^k)^d with right action twisted by the Frobenius power
/// x -> x^(p^twist). The radical is the V part.
Algebra gen_trivial_ext(Residue p, std::size_t k, std::size_t d, std::size_t twist);

/// Random change of basis; the isomorphism is discarded.
Algebra scramble(const Algebra& a, Rng& rng);

struct AlgebraCaps {
  std::vector<Residue> primes{2, 3, 5};
  std::size_t max_dim = 8;
  /// p^dim must stay at or below this.
  std::uint64_t max_elements = std::uint64_t{1} << 16;
  /// Require p > dim (trace-form radical applicable).
  bool large_char = false;
  bool allow_scramble = true;
};

struct GeneratedAlgebra {
  std::string description;  ///< family and parameters
  Algebra algebra;
};

/// One algebra from a random family whose size fits the caps.
GeneratedAlgebra random_algebra(Rng& rng, const AlgebraCaps& caps);

/// Named family interface for the CLI. Unknown family or bad parameter count
/// throws ValidationError; instances breaking `max_elements` throw BudgetExceeded.
std::vector<GeneratedAlgebra> generate_algebras(const std::string& family,
                                                const std::vector<std::string>& params,
                                                std::uint64_t seed, std::size_t count,
                                                std::uint64_t max_elements);

// ---------------------------------------------------------------------------
// Module families

struct ModuleCaps {
  std::size_t max_dim = 8;
  /// Allow direct sums of two generated modules.
  bool allow_sums = true;
};

struct GeneratedModule {
  std::string description;
  Module module;
};

/// Simple module of a block: f·A / f·J.
Module simple_module(const AlgebraAnalysis& an, std::size_t block);
/// Indecomposable injective of a block: D(A·f) computed over the opposite algebra.
Module indecomposable_injective(const AlgebraAnalysis& an, std::size_t block);

/// One module from a random family (regular, principal projective, simple,
/// indecomposable injective, cyclic quotient, cyclic submodule, sums).
/// Falls back to a simple module when nothing fits max_dim.
GeneratedModule random_module(Rng& rng, const AlgebraAnalysis& an, const ModuleCaps& caps);

// ---------------------------------------------------------------------------
// Morphism families

struct GeneratedMorphism {
  std::string description;
  AlgebraMorphism morphism;
  /// Set when the codomain is an explicit product of fields.
  std::optional<ProductAlgebra> field_target;
};

/// UT_n(GF(p^k)) -> M_n(GF(p^k)).
GeneratedMorphism triangular_inclusion(Residue p, std::size_t k, std::size_t n);
/// GF(p^k) -> M_k(GF(p)) by right multiplication on the monomial basis.
GeneratedMorphism field_regular_representation(Residue p, std::size_t k);

/// A morphism from a family whose members are local: projections modulo
/// ideals inside J, triangular inclusions, regular representations of
/// fields, diagonal and graph maps, M_2 of a radical projection, field
/// product presentations, and composites of these. The domain has at most
/// caps.max_elements elements, so locality can be certified exhaustively.
GeneratedMorphism random_local_morphism(Rng& rng, const AlgebraCaps& caps);

/// A local morphism into an explicit product of fields: A -> A/J(A) split
/// into its field blocks, with factors possibly duplicated or replaced by
/// a degree-2 extension. Requires A/J commutative; retries until it is.
GeneratedMorphism random_field_product_morphism(Rng& rng, const AlgebraCaps& caps);

/// Composable pair (phi, psi), phi: R -> S, psi: S -> T. When `local_phi`
/// is false, phi is a projection onto one factor of a product, which is
/// never local.
std::pair<GeneratedMorphism, GeneratedMorphism> random_morphism_pair(Rng& rng, const AlgebraCaps& caps,
                                                                      bool local_phi);

}  // namespace semiloc
