#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semiloc/fp_matrix.hpp"
#include "semiloc/fp_poly.hpp"
#include "semiloc/subspace.hpp"

namespace semiloc {

inline constexpr std::size_t kAlgebraDimCap = 64;

struct AlgebraOptions {
  /// Lift the dimension cap used to bound the O(n^4) associativity check.
  bool allow_large = false;
};

/// Finite-dimensional associative unital algebra over GF(p) given by
/// structure constants: b_i * b_j = sum_k c[i][j][k] b_k.
///
/// Values are immutable and cheap to copy (shared state). Every algebra gets
/// a fresh identity token at construction; elements, subspaces and morphisms
/// record it so that mixing algebras is caught instead of silently computed.
class Algebra {
 public:
  /// `constants` is the flat array c[(i*dim + j)*dim + k]. Throws
  /// AssociativityViolation or UnitViolation on invalid data.
  static Algebra make(Residue p, std::size_t dim, std::vector<Residue> constants, Vec unit,
                      std::string name = {}, AlgebraOptions options = {});

  /// The zero ring over GF(p) (dimension 0, where 1 = 0).
  static Algebra zero(Residue p);

  Residue p() const;
  std::size_t dim() const;
  std::uint64_t id() const;
  const std::string& name() const;
  Algebra with_name(std::string name) const;

  Residue constant(std::size_t i, std::size_t j, std::size_t k) const;
  const std::vector<Residue>& constants() const;
  const Vec& unit() const;
  Vec zero_element() const { return Vec(dim(), 0); }
  Vec basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

  Vec multiply(std::span<const Residue> a, std::span<const Residue> b) const;
  Vec add(std::span<const Residue> a, std::span<const Residue> b) const { return vec_add(a, b, p()); }
  Vec sub(std::span<const Residue> a, std::span<const Residue> b) const { return vec_sub(a, b, p()); }
  Vec scale(std::span<const Residue> a, Residue s) const { return vec_scale(a, s, p()); }

  /// L_a with L_a * x = a x (column convention).
  FpMatrix left_multiplication(std::span<const Residue> a) const;
  /// R_a with R_a * x = x a (column convention).
  FpMatrix right_multiplication(std::span<const Residue> a) const;
  const FpMatrix& left_basis(std::size_t i) const;

  /// True iff L_a is nonsingular, which in a finite-dimensional unital algebra
  /// is equivalent to two-sided invertibility.
  bool is_unit(std::span<const Residue> a) const;
  std::optional<Vec> inverse(std::span<const Residue> a) const;
  bool is_idempotent(std::span<const Residue> a) const;
  bool is_commutative() const;
  bool is_central(std::span<const Residue> a) const;
  /// Indices of basis elements that, with 1, generate A as an algebra
  /// (greedy in basis order; computed once).
  const std::vector<std::size_t>& generator_indices() const;

  /// Validates that v has length dim and reduced entries.
  void check_element(std::span<const Residue> v) const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.id() == b.id(); }

 private:
  struct Data;
  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Structural equality of the defining data (ignores identity tokens).
bool same_structure(const Algebra& a, const Algebra& b);

/// An element bound to its algebra.
class Element {
 public:
  Element(Algebra owner, Vec coords);
  const Algebra& owner() const { return owner_; }
  const Vec& coords() const { return coords_; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  bool is_unit() const { return owner_.is_unit(coords_); }
  std::optional<Element> inverse() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.owner_ == b.owner_ && a.coords_ == b.coords_;
  }

 private:
  void same_owner(const Element& o) const;
  Algebra owner_;
  Vec coords_;
};

/// Unital algebra morphism stored as a codomain.dim x domain.dim matrix.
class AlgebraMorphism {
 public:
  /// Throws UnitNotPreserved or NotMultiplicative (with the first failing basis pair).
  static AlgebraMorphism make(Algebra domain, Algebra codomain, FpMatrix matrix);
  static AlgebraMorphism identity(const Algebra& a);

  const Algebra& domain() const { return domain_; }
  const Algebra& codomain() const { return codomain_; }
  const FpMatrix& matrix() const { return matrix_; }

  Vec apply(std::span<const Residue> x) const { return matrix_.apply(x); }
  Subspace kernel() const;
  Subspace image() const;
  bool is_onto() const;
  bool is_injective() const;

 private:
  AlgebraMorphism(Algebra d, Algebra c, FpMatrix m)
      : domain_(std::move(d)), codomain_(std::move(c)), matrix_(std::move(m)) {}
  Algebra domain_;
  Algebra codomain_;
  FpMatrix matrix_;
};

/// outer ∘ inner
AlgebraMorphism compose(const AlgebraMorphism& outer, const AlgebraMorphism& inner);

/// Alias kept for the harness: constructs only when unit and multiplicativity hold.
inline AlgebraMorphism validate_morphism(const FpMatrix& matrix, const Algebra& a, const Algebra& b) {
  return AlgebraMorphism::make(a, b, matrix);
}

// ---------------------------------------------------------------------------
// Ideals, quotients, subalgebras

bool is_left_ideal(const Algebra& a, const Subspace& s);
bool is_right_ideal(const Algebra& a, const Subspace& s);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);
bool is_subalgebra(const Algebra& a, const Subspace& s);

/// Smallest two-sided ideal containing `gens`, by closure iteration.
Subspace ideal_generated(const Algebra& a, const std::vector<Vec>& gens);
/// Span of all products x*y with x in I, y in J.
Subspace ideal_product(const Algebra& a, const Subspace& i, const Subspace& j);
Subspace center(const Algebra& a);

struct QuotientAlgebra {
  Algebra algebra;
  AlgebraMorphism projection;
  Subspace ideal;
  /// Coordinates of A kept in the quotient (non-pivot columns of the ideal basis).
  std::vector<std::size_t> complement;
  /// Preimage supported on the complement coordinates.
  Vec lift(std::span<const Residue> q) const;
};

/// Quotient on the complement basis chosen by the pivot columns of I.
/// Throws IdealContainsUnit; throws ValidationError if I is not an ideal.
QuotientAlgebra quotient_by_ideal(const Algebra& a, const Subspace& ideal);

/// Subalgebra (possibly with a different unit, e.g. a corner eAe) realized on
/// the canonical basis of the subspace.
struct Subalgebra {
  Algebra algebra;
  Subspace span;  ///< in the ambient coordinates
  Vec to_ambient(std::span<const Residue> coords) const { return span.combination(coords); }
  Vec from_ambient(std::span<const Residue> v) const;
};
Subalgebra subalgebra_on(const Algebra& a, const Subspace& s, std::span<const Residue> unit);
/// The corner e A e with unit e, for an idempotent e.
Subalgebra corner_algebra(const Algebra& a, std::span<const Residue> e);

Algebra opposite(const Algebra& a);

struct Reparametrized {
  Algebra algebra;
  AlgebraMorphism to_new;  ///< isomorphism a -> algebra
};
/// New basis given by the rows of an invertible matrix (row i = new b_i in old coordinates).
Reparametrized change_of_basis(const Algebra& a, const FpMatrix& new_basis_rows);

// ---------------------------------------------------------------------------
// Polynomials in an element

/// Monic minimal polynomial of `a` inside the (sub)algebra whose unit is `unit`.
FpPoly minimal_polynomial(const Algebra& alg, std::span<const Residue> a,
                          std::span<const Residue> unit);
inline FpPoly minimal_polynomial(const Algebra& alg, std::span<const Residue> a) {
  return minimal_polynomial(alg, a, alg.unit());
}
Vec evaluate(const Algebra& alg, const FpPoly& f, std::span<const Residue> a,
             std::span<const Residue> unit);

// ---------------------------------------------------------------------------
// Standard constructions

/// M_n(A); basis index ((r*n + s)*dim(A) + i) for E_rs ⊗ b_i.
Algebra matrix_extension(const Algebra& a, std::size_t n);
/// Entrywise M_n(φ).
AlgebraMorphism lift(const AlgebraMorphism& phi, std::size_t n, const Algebra& domain_ext,
                     const Algebra& codomain_ext);
AlgebraMorphism lift(const AlgebraMorphism& phi, std::size_t n);

struct EmbeddedAlgebra {
  Algebra algebra;
  AlgebraMorphism inclusion;
};
/// Upper-triangular n×n matrices over D with its inclusion into M_n(D).
EmbeddedAlgebra upper_triangular(const Algebra& d, std::size_t n);

/// K-K-bimodule V given by action matrices in the column convention:
/// k·v = sum k_i left[i] v, v·k = sum k_i right[i] v.
struct BimoduleData {
  std::size_t dim = 0;
  std::vector<FpMatrix> left;
  std::vector<FpMatrix> right;
};
/// K ⋉ V with (k,v)(k',v') = (kk', kv' + vk'). Throws BimoduleViolation.
Algebra trivial_extension(const Algebra& k, const BimoduleData& v);

struct ProductAlgebra {
  Algebra algebra;
  std::vector<Algebra> factors;
  std::vector<AlgebraMorphism> projections;
  std::vector<std::size_t> offsets;
  Vec inject(std::size_t factor, std::span<const Residue> x) const;
};
ProductAlgebra direct_product(const std::vector<Algebra>& factors);
inline ProductAlgebra direct_product(const Algebra& a, const Algebra& b) {
  return direct_product(std::vector<Algebra>{a, b});
}

/// GF(p)[x]/(f) on the monomial basis.
Algebra polynomial_quotient(const FpPoly& f, std::string name = {});
/// GF(p)[x]/(x^n).
Algebra truncated_polynomial(Residue p, std::size_t n);
/// GF(p^k) as a GF(p)-algebra, via the first irreducible of degree k.
Algebra field_algebra(Residue p, std::size_t k);
/// M_n(GF(p)).
Algebra full_matrix_algebra(Residue p, std::size_t n);

}  // namespace semiloc
