#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiloc/algebra.hpp"
#include "semiloc/wedderburn.hpp"

namespace semiloc {

inline constexpr std::uint64_t kDefaultSamplingBudget = 100000;

enum class LocalityVerdict { Local, NotLocal, UnknownBudget };
enum class LocalityMethod { Exhaustive, Sampled };
std::string to_string(LocalityVerdict v);
std::string to_string(LocalityMethod m);

struct LocalityReport {
  LocalityVerdict verdict = LocalityVerdict::UnknownBudget;
  /// Non-unit r with phi(r) a unit; present iff verdict is NotLocal.
  std::optional<Vec> witness;
  std::uint64_t elements_checked = 0;
  LocalityMethod method = LocalityMethod::Exhaustive;

  /// Re-verifies the witness against phi; throws AssertionFailure otherwise.
  static LocalityReport make(const AlgebraMorphism& phi, LocalityVerdict verdict,
                             std::optional<Vec> witness, std::uint64_t checked, LocalityMethod method);
  bool certain() const { return method == LocalityMethod::Exhaustive; }
};

struct LocalityOptions {
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  std::uint64_t sampling_budget = kDefaultSamplingBudget;
  std::uint64_t seed = 0x10ca1ULL;
  /// Sampling budget for the M_n(phi) checks in lemma21_suite, whose domains
  /// are far past exhaustive range and cost O((n^2 dim)^3) per sample.
  std::uint64_t lift_sampling_budget = 2000;
};

/// Exhaustive when p^dim(R) fits the enumeration budget, otherwise seeded
/// sampling that can only refute.
LocalityReport is_local(const AlgebraMorphism& phi, const LocalityOptions& options = {});

/// p^d, saturating at UINT64_MAX.
std::uint64_t element_count(Residue p, std::size_t d);

// ---------------------------------------------------------------------------
// Calculus of local morphisms

struct ClauseResult {
  std::string clause;
  bool checked = false;  ///< false when the hypothesis did not apply
  std::string detail;
};

struct CompositionCalculus {
  LocalityReport phi;
  std::optional<LocalityReport> psi;
  std::optional<LocalityReport> composite;
  std::vector<ClauseResult> clauses;
};

/// Checks the four clauses on phi (and on psi∘phi when psi is given).
/// Throws AssertionFailure naming the first violated clause.
CompositionCalculus lemma21_suite(const AlgebraMorphism& phi, const std::optional<AlgebraMorphism>& psi,
                                  const LocalityOptions& options = {});

// ---------------------------------------------------------------------------
// Morphisms into products of finite fields

/// Throws CodomainNotFieldProduct unless every factor is a field and
/// phi's codomain is the product algebra.
void require_field_product(const AlgebraMorphism& phi, const ProductAlgebra& target);

/// Indices i with tau_i(x) != 0.
std::vector<std::size_t> support(const ProductAlgebra& target, std::span<const Residue> image);

struct SupportProfile {
  std::size_t factors = 0;
  /// Least nonzero support size over the elements checked; 0 iff phi = 0.
  std::size_t least_support = 0;
  /// Lexicographically first element of R achieving it.
  Vec least_element;
  bool approximate = false;
  std::uint64_t elements_checked = 0;
};
SupportProfile support_profile(const AlgebraMorphism& phi, const ProductAlgebra& target,
                               const LocalityOptions& options = {});

struct ProducteResult {
  std::vector<std::size_t> selected;  ///< i_1 < ... < i_m
  std::size_t m() const { return selected.size(); }
  std::vector<Subspace> maximal_ideals;  ///< ker tau_{i_j} in R
  std::vector<std::size_t> residue_degrees;  ///< dim tau_{i_j}(R), i.e. [D'_j : GF(p)]
  AlgebraMorphism assembled;  ///< (tau_{i_1}, ..., tau_{i_m})
  LocalityReport assembled_locality;
  Subspace radical;  ///< J(R)
  std::size_t idempotent_splits = 0;
  std::size_t support_reductions = 0;
};

/// Follows the support induction on the image of phi; every clause of the
/// result is re-verified before returning. Throws NotLocal,
/// CodomainNotFieldProduct, or AssertionFailure on a failed certificate.
ProducteResult producte_decompose(const AlgebraMorphism& phi, const ProductAlgebra& target,
                                  const LocalityOptions& options = {});

struct DichotomyResult {
  int which_case = 0;  ///< 1: R local, 2: two maximal ideals
  /// Case 1: the factor whose tau is local. Unused in case 2.
  std::size_t local_factor = 0;
  std::vector<Subspace> maximal_ideals;
  Subspace radical;
};
/// Two-factor specialization. Throws NotLocal or CodomainNotFieldProduct.
DichotomyResult dos_classify(const AlgebraMorphism& phi, const ProductAlgebra& target,
                             const LocalityOptions& options = {});

struct CampsDicks {
  std::size_t codim_domain = 0;
  std::size_t codim_codomain = 0;
  bool holds = false;
};
/// codim(R) <= codim(S); a false `holds` on a certified-local phi is a
/// soundness alarm for the caller to raise.
CampsDicks camps_dicks_check(const AlgebraMorphism& phi, std::uint64_t budget = kDefaultEnumerationBudget);

/// A/J(A) presented as an explicit product of fields, with the composite
/// A -> prod. nullopt when some block of A/J has matrix size n > 1.
struct FieldProductPresentation {
  ProductAlgebra target;
  AlgebraMorphism morphism;
};
std::optional<FieldProductPresentation> to_field_product(const AlgebraAnalysis& an);

}  // namespace semiloc
