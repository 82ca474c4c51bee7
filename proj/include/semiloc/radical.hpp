#pragma once

#include <cstdint>
#include <string>

#include "semiloc/algebra.hpp"

namespace semiloc {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

enum class RadicalMethod { TraceForm, BruteForce };
std::string to_string(RadicalMethod m);

struct RadicalReport {
  Subspace radical;
  /// Smallest t >= 1 with radical^t = 0.
  std::size_t nilpotency_index = 1;
  RadicalMethod method = RadicalMethod::TraceForm;
};

/// J(A) = {x : 1 - a x is a unit for every a in A}, by a spanning search over
/// coset representatives of the part found so far. Every certified member is
/// checked against all p^dim elements a. Throws BudgetExceeded when p^dim
/// exceeds `budget`.
RadicalReport radical_bruteforce(const Algebra& a, std::uint64_t budget = kDefaultEnumerationBudget,
                                 std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// Kernel of the trace form (x, y) -> Tr(L_{xy}). Requires p > dim(A);
/// throws CharTooSmall otherwise.
RadicalReport radical_trace(const Algebra& a);

/// Brute force when p <= dim(A), trace form otherwise.
RadicalReport radical(const Algebra& a, std::uint64_t budget = kDefaultEnumerationBudget);

/// Smallest t >= 1 with I^t = 0; throws ValidationError if I is not nilpotent.
std::size_t nilpotency_index(const Algebra& a, const Subspace& ideal);

QuotientAlgebra semisimple_quotient(const Algebra& a, const RadicalReport& report);
QuotientAlgebra semisimple_quotient(const Algebra& a);

/// Refines a preimage of an idempotent of A/J with e <- 3e^2 - 2e^3,
/// ceil(log2(index)) times. Result is an exact idempotent of A mapping to `ebar`.
Vec lift_idempotent(const QuotientAlgebra& q, std::span<const Residue> ebar,
                    std::size_t nilpotency_index);

}  // namespace semiloc
