#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semiloc/fp_matrix.hpp"

namespace semiloc {

/// A subspace of GF(p)^n stored as the nonzero rows of its reduced row echelon
/// basis. The canonical form makes equality plain matrix equality.
///
/// `owner` is the identity token of the algebra or module whose coordinate
/// space this lives in (0 when unattached).
class Subspace {
 public:
  Subspace() = default;
  /// Span of the rows of `spanning`.
  explicit Subspace(const FpMatrix& spanning, std::uint64_t owner = 0);
  static Subspace zero(Residue p, std::size_t ambient, std::uint64_t owner = 0);
  static Subspace full(Residue p, std::size_t ambient, std::uint64_t owner = 0);
  static Subspace span(Residue p, std::size_t ambient, const std::vector<Vec>& vectors,
                       std::uint64_t owner = 0);

  Residue p() const { return basis_.p(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::uint64_t owner() const { return owner_; }
  const FpMatrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Non-pivot columns; the standard basis vectors at these positions span a complement.
  std::vector<std::size_t> complement_columns() const;

  /// Residual of v after eliminating the pivot columns; zero iff v is contained.
  Vec reduce(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates with respect to the canonical basis, or nullopt when v is outside.
  std::optional<Vec> coordinates(std::span<const Residue> v) const;
  Vec combination(std::span<const Residue> coords) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  /// Annihilator {x : <x, u> = 0 for all u} under the standard pairing.
  Subspace annihilator() const;
  Subspace with_owner(std::uint64_t owner) const;

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
  std::uint64_t owner_ = 0;
};

}  // namespace semiloc
