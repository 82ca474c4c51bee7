#include "semiloc/subspace.hpp"

#include "semiloc/errors.hpp"

namespace semiloc {

Subspace::Subspace(const FpMatrix& spanning, std::uint64_t owner) : owner_(owner) {
  Reduction red = semiloc::reduce(spanning);
  std::vector<std::size_t> rows(red.rank);
  for (std::size_t i = 0; i < red.rank; ++i) rows[i] = i;
  basis_ = red.rref.select_rows(rows);
  pivots_ = std::move(red.pivots);
}

Subspace Subspace::zero(Residue p, std::size_t ambient, std::uint64_t owner) {
  return Subspace(FpMatrix(p, 0, ambient), owner);
}

Subspace Subspace::full(Residue p, std::size_t ambient, std::uint64_t owner) {
  return Subspace(FpMatrix::identity(p, ambient), owner);
}

Subspace Subspace::span(Residue p, std::size_t ambient, const std::vector<Vec>& vectors,
                        std::uint64_t owner) {
  return Subspace(FpMatrix::from_rows(p, vectors, ambient), owner);
}

std::vector<std::size_t> Subspace::complement_columns() const {
  std::vector<bool> pivot(ambient_dim(), false);
  for (auto c : pivots_) pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_dim(); ++c)
    if (!pivot[c]) out.push_back(c);
  return out;
}

Vec Subspace::reduce(std::span<const Residue> v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("subspace: vector length");
  Vec r(v.begin(), v.end());
  const Residue q = p();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Residue c = r[pivots_[i]];
    if (c != 0) vec_axpy(r, neg_mod(c, q), basis_.row(i), q);
  }
  return r;
}

bool Subspace::contains(std::span<const Residue> v) const { return semiloc::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("subspace: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(std::span<const Residue> v) const {
  if (!contains(v)) return std::nullopt;
  Vec coords(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

Vec Subspace::combination(std::span<const Residue> coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("subspace: coordinate length");
  Vec out(ambient_dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) vec_axpy(out, coords[i], basis_.row(i), p());
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("subspace: ambient mismatch");
  return Subspace(basis_.vstack(other.basis_), owner_);
}

Subspace Subspace::intersection(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("subspace: ambient mismatch");
  // U ∩ W = ann(ann U + ann W)
  return annihilator().sum(other.annihilator()).annihilator().with_owner(owner_);
}

Subspace Subspace::annihilator() const {
  Reduction red = semiloc::reduce(basis_);
  Subspace out;
  out.owner_ = owner_;
  out.basis_ = red.kernel;
  Reduction kr = semiloc::reduce(red.kernel);
  out.pivots_ = kr.pivots;
  return out;
}

Subspace Subspace::with_owner(std::uint64_t owner) const {
  Subspace s = *this;
  s.owner_ = owner;
  return s;
}

}  // namespace semiloc
