#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semiloc/algebra.hpp"

namespace semiloc {

/// Finite-dimensional right module over a structure-constant algebra.
///
/// Elements are row vectors and b_i acts by v -> v·action(i), so
/// action(a)·action(b) = action(ab). Immutable with an identity token.
class Module {
 public:
  /// Throws ValidationError if rho(1) != I or rho(b_i)rho(b_j) != rho(b_i b_j).
  static Module make(Algebra algebra, std::vector<FpMatrix> actions, std::string name = {});
  static Module zero(const Algebra& algebra);

  const Algebra& algebra() const;
  Residue p() const { return algebra().p(); }
  std::size_t dim() const;
  std::uint64_t id() const;
  const std::string& name() const;
  Module with_name(std::string name) const;

  const FpMatrix& action(std::size_t i) const;
  const std::vector<FpMatrix>& actions() const;
  /// rho(a) for an algebra element a.
  FpMatrix action_of(std::span<const Residue> a) const;
  Vec act(std::span<const Residue> v, std::span<const Residue> a) const;

  Subspace zero_subspace() const { return Subspace::zero(p(), dim(), id()); }
  Subspace full_subspace() const { return Subspace::full(p(), dim(), id()); }

  friend bool operator==(const Module& a, const Module& b) { return a.id() == b.id(); }

 private:
  struct Data;
  explicit Module(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Module homomorphism v -> v·matrix, matrix of shape domain.dim x codomain.dim.
class ModuleHom {
 public:
  /// Throws ValidationError unless rho_M(b_i)·X = X·rho_N(b_i) for every i.
  static ModuleHom make(Module domain, Module codomain, FpMatrix matrix);
  static ModuleHom identity(const Module& m);
  static ModuleHom zero(const Module& domain, const Module& codomain);

  const Module& domain() const { return domain_; }
  const Module& codomain() const { return codomain_; }
  const FpMatrix& matrix() const { return matrix_; }

  Vec apply(std::span<const Residue> v) const { return matrix_.apply_left(v); }
  Subspace kernel() const;
  Subspace image() const;
  bool is_injective() const;
  bool is_surjective() const;

 private:
  ModuleHom(Module d, Module c, FpMatrix m)
      : domain_(std::move(d)), codomain_(std::move(c)), matrix_(std::move(m)) {}
  friend class HomSpace;
  Module domain_;
  Module codomain_;
  FpMatrix matrix_;
};

/// g ∘ f
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);

bool intertwines(const Module& m, const Module& n, const FpMatrix& x);

/// Solution space of the intertwining equations, stored as row-major
/// flattenings of the hom matrices in canonical (rref) form.
class HomSpace {
 public:
  HomSpace(Module domain, Module codomain);
  const Module& domain() const { return domain_; }
  const Module& codomain() const { return codomain_; }
  std::size_t dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }

  FpMatrix basis_matrix(std::size_t i) const;
  std::vector<ModuleHom> basis() const;
  FpMatrix combination(std::span<const Residue> coords) const;
  /// Coordinates of a hom matrix; nullopt if it does not intertwine.
  std::optional<Vec> coordinates(const FpMatrix& x) const;

 private:
  Module domain_;
  Module codomain_;
  Subspace space_;
};

inline std::vector<ModuleHom> hom_basis(const Module& m, const Module& n) { return HomSpace(m, n).basis(); }

/// End(M) with f·g = f∘g (matrix X_g·X_f), unit the identity.
struct EndoAlgebra {
  Module module;
  HomSpace homs;
  Algebra algebra;

  FpMatrix to_matrix(std::span<const Residue> coords) const { return homs.combination(coords); }
  Vec to_coords(const FpMatrix& x) const;
};
EndoAlgebra endo_algebra(const Module& m);

// ---------------------------------------------------------------------------
// Constructions

Module regular_module(const Algebra& a);

bool is_submodule(const Module& m, const Subspace& u);
/// Smallest submodule containing the vectors.
Subspace submodule_generated(const Module& m, const std::vector<Vec>& vectors);

struct SubmoduleData {
  Module module;
  ModuleHom inclusion;
};
/// Throws NotASubmodule.
SubmoduleData submodule(const Module& m, const Subspace& u);

struct QuotientModule {
  Module module;
  ModuleHom projection;
  std::vector<std::size_t> complement;  ///< coordinates of M kept in the quotient
  Vec lift(std::span<const Residue> q) const;
};
QuotientModule quotient_module(const Module& m, const Subspace& u);

struct DirectSum {
  Module module;
  std::vector<Module> summands;
  std::vector<std::size_t> offsets;
  std::vector<ModuleHom> injections;
  std::vector<ModuleHom> projections;
};
DirectSum direct_sum(const std::vector<Module>& summands, const Algebra& algebra);
inline DirectSum direct_sum(const Module& a, const Module& b) { return direct_sum({a, b}, a.algebra()); }

/// Block-diagonal hom between direct sums.
FpMatrix block_diagonal(const std::vector<FpMatrix>& blocks, Residue p);

/// Presentation matrix P (rows x cols, entries in A): M = A^rows / sum_j col_j·A
/// where col_j = (P[0][j], ..., P[rows-1][j]).
struct Presentation {
  Module module;
  Module free;          ///< A^rows
  ModuleHom epi;        ///< A^rows -> module
  Subspace relations;   ///< kernel of epi inside A^rows
};
Presentation module_from_presentation(const Algebra& a, std::size_t rows,
                                      const std::vector<std::vector<Vec>>& entries);

/// Linear dual of a right A-module as a right module over `op` (which must
/// be the opposite of A): actions are transposes.
Module dual_module(const Module& m, const Algebra& op);
/// Linear dual of a right A^op-module back to a right A-module.
Module dual_module_back(const Module& n, const Algebra& a);

/// Restriction along phi: R -> S of a module over S.
Module restrict_scalars(const AlgebraMorphism& phi, const Module& m);

}  // namespace semiloc
