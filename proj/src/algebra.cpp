#include "semiloc/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "semiloc/errors.hpp"

namespace semiloc {

namespace {

std::uint64_t next_token() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

using SparseVec = std::vector<std::pair<std::uint32_t, Residue>>;

// Rank test on bit rows; rows are consumed.
bool gf2_full_rank(std::vector<std::uint64_t>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t piv = col;
    while (piv < n && !(rows[piv] & bit)) ++piv;
    if (piv == n) return false;
    std::swap(rows[piv], rows[col]);
    for (std::size_t r = col + 1; r < n; ++r)
      if (rows[r] & bit) rows[r] ^= rows[col];
  }
  return true;
}

}  // namespace

struct Algebra::Data {
  Residue p = 2;
  std::size_t dim = 0;
  std::vector<Residue> c;
  Vec unit;
  std::string name;
  std::uint64_t id = 0;
  std::vector<SparseVec> products;  // index i*dim + j
  std::vector<FpMatrix> left;       // L_{b_i}
  // p = 2 and dim <= 64: left_bits[i][r] is row r of L_{b_i}.
  std::vector<std::vector<std::uint64_t>> left_bits;
  mutable std::once_flag generators_once;
  mutable std::vector<std::size_t> generators;

  const SparseVec& prod(std::size_t i, std::size_t j) const { return products[i * dim + j]; }
};

Algebra Algebra::make(Residue p, std::size_t dim, std::vector<Residue> constants, Vec unit,
                      std::string name, AlgebraOptions options) {
  require_prime(p);
  if (dim > kAlgebraDimCap && !options.allow_large)
    throw ValidationError("algebra dimension " + std::to_string(dim) + " exceeds the cap of " +
                          std::to_string(kAlgebraDimCap));
  if (constants.size() != dim * dim * dim) throw DimensionMismatch("structure constants size");
  if (unit.size() != dim) throw DimensionMismatch("unit length");
  for (auto v : constants)
    if (v >= p) throw ValidationError("structure constant not reduced mod p");
  for (auto v : unit)
    if (v >= p) throw ValidationError("unit coordinate not reduced mod p");

  auto d = std::make_shared<Data>();
  d->p = p;
  d->dim = dim;
  d->c = std::move(constants);
  d->unit = std::move(unit);
  d->name = std::move(name);
  d->id = next_token();
  d->products.resize(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const Residue v = d->c[(i * dim + j) * dim + k];
        if (v != 0) d->products[i * dim + j].emplace_back(static_cast<std::uint32_t>(k), v);
      }

  // Sparse product of coordinate vectors, local to validation.
  auto mul_sparse = [&](const SparseVec& a, std::size_t right) {
    Vec out(dim, 0);
    for (auto [m, am] : a)
      for (auto [k, v] : d->prod(m, right)) out[k] = add_mod(out[k], mul_mod(am, v, p), p);
    return out;
  };
  auto left_sparse = [&](std::size_t left, const SparseVec& a) {
    Vec out(dim, 0);
    for (auto [m, am] : a)
      for (auto [k, v] : d->prod(left, m)) out[k] = add_mod(out[k], mul_mod(am, v, p), p);
    return out;
  };

  SparseVec unit_sparse;
  for (std::size_t i = 0; i < dim; ++i)
    if (d->unit[i] != 0) unit_sparse.emplace_back(static_cast<std::uint32_t>(i), d->unit[i]);
  for (std::size_t i = 0; i < dim; ++i) {
    const Vec bi = unit_vector(dim, i);
    if (mul_sparse(unit_sparse, i) != bi || left_sparse(i, unit_sparse) != bi)
      throw UnitViolation(i);
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        // (b_i b_j) b_k against b_i (b_j b_k)
        if (mul_sparse(d->prod(i, j), k) != left_sparse(i, d->prod(j, k)))
          throw AssociativityViolation(i, j, k);
      }

  d->left.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    FpMatrix l(p, dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (auto [k, v] : d->prod(i, j)) l(k, j) = v;
    d->left.push_back(std::move(l));
  }
  if (p == 2 && dim <= 64) {
    d->left_bits.assign(dim, std::vector<std::uint64_t>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t col = 0; col < dim; ++col)
          if (d->left[i](r, col)) d->left_bits[i][r] |= std::uint64_t{1} << col;
  }
  return Algebra(std::move(d));
}

Algebra Algebra::zero(Residue p) { return make(p, 0, {}, {}, "0"); }

Residue Algebra::p() const { return d_->p; }
std::size_t Algebra::dim() const { return d_->dim; }
std::uint64_t Algebra::id() const { return d_->id; }
const std::string& Algebra::name() const { return d_->name; }

Algebra Algebra::with_name(std::string name) const {
  return make(d_->p, d_->dim, d_->c, d_->unit, std::move(name), AlgebraOptions{true});
}

Residue Algebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t n = d_->dim;
  return d_->c[(i * n + j) * n + k];
}
const std::vector<Residue>& Algebra::constants() const { return d_->c; }
const Vec& Algebra::unit() const { return d_->unit; }
const FpMatrix& Algebra::left_basis(std::size_t i) const { return d_->left.at(i); }

void Algebra::check_element(std::span<const Residue> v) const {
  if (v.size() != d_->dim) throw DimensionMismatch("element length does not match algebra dimension");
  for (auto x : v)
    if (x >= d_->p) throw ValidationError("element coordinate not reduced mod p");
}

Vec Algebra::multiply(std::span<const Residue> a, std::span<const Residue> b) const {
  const std::size_t n = d_->dim;
  const Residue q = d_->p;
  if (a.size() != n || b.size() != n) throw DimensionMismatch("multiply: operand length");
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const Residue s = mul_mod(a[i], b[j], q);
      for (auto [k, v] : d_->prod(i, j)) out[k] = add_mod(out[k], mul_mod(s, v, q), q);
    }
  }
  return out;
}

FpMatrix Algebra::left_multiplication(std::span<const Residue> a) const {
  check_element(a);
  FpMatrix out(d_->p, d_->dim, d_->dim);
  for (std::size_t i = 0; i < d_->dim; ++i)
    if (a[i] != 0) out.add_scaled(d_->left[i], a[i]);
  return out;
}

FpMatrix Algebra::right_multiplication(std::span<const Residue> a) const {
  check_element(a);
  const std::size_t n = d_->dim;
  FpMatrix out(d_->p, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    // column i = b_i * a
    Vec col = multiply(unit_vector(n, i), a);
    for (std::size_t k = 0; k < n; ++k) out(k, i) = col[k];
  }
  return out;
}

bool Algebra::is_unit(std::span<const Residue> a) const {
  check_element(a);
  const std::size_t n = d_->dim;
  if (n == 0) return true;
  if (!d_->left_bits.empty()) {
    std::vector<std::uint64_t> rows(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (a[i])
        for (std::size_t r = 0; r < n; ++r) rows[r] ^= d_->left_bits[i][r];
    return gf2_full_rank(rows);
  }
  return is_nonsingular(left_multiplication(a));
}

std::optional<Vec> Algebra::inverse(std::span<const Residue> a) const {
  check_element(a);
  if (!is_unit(a)) return std::nullopt;
  auto x = solve(left_multiplication(a), d_->unit);
  if (!x) return std::nullopt;
  return x;
}

bool Algebra::is_idempotent(std::span<const Residue> a) const {
  check_element(a);
  Vec sq = multiply(a, a);
  return std::equal(sq.begin(), sq.end(), a.begin(), a.end());
}

bool Algebra::is_commutative() const {
  const std::size_t n = d_->dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d_->prod(i, j) != d_->prod(j, i)) return false;
  return true;
}

bool Algebra::is_central(std::span<const Residue> a) const {
  check_element(a);
  for (std::size_t i = 0; i < d_->dim; ++i) {
    Vec b = basis_vector(i);
    if (multiply(a, b) != multiply(b, a)) return false;
  }
  return true;
}

const std::vector<std::size_t>& Algebra::generator_indices() const {
  std::call_once(d_->generators_once, [this] {
    const std::size_t n = d_->dim;
    if (n == 0) return;
    // W = subalgebra generated so far, closed under right multiplication by the chosen generators
    Subspace w = Subspace::span(d_->p, n, {d_->unit});
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < n && !w.is_full(); ++i) {
      if (w.contains(basis_vector(i))) continue;
      gens.push_back(i);
      std::vector<Vec> pending;
      for (std::size_t r = 0; r < w.dim(); ++r) pending.push_back(w.basis_vector(r));
      while (!pending.empty()) {
        Vec v = std::move(pending.back());
        pending.pop_back();
        for (std::size_t g : gens) {
          Vec x = multiply(v, basis_vector(g));
          if (w.contains(x)) continue;
          w = w.sum(Subspace::span(d_->p, n, {x}));
          pending.push_back(std::move(x));
        }
      }
    }
    d_->generators = std::move(gens);
  });
  return d_->generators;
}

bool same_structure(const Algebra& a, const Algebra& b) {
  return a.p() == b.p() && a.dim() == b.dim() && a.constants() == b.constants() &&
         a.unit() == b.unit();
}

// ---------------------------------------------------------------------------

Element::Element(Algebra owner, Vec coords) : owner_(std::move(owner)), coords_(std::move(coords)) {
  owner_.check_element(coords_);
}

void Element::same_owner(const Element& o) const {
  if (!(owner_ == o.owner_)) throw OwnerMismatch("elements belong to different algebras");
}

Element Element::operator+(const Element& o) const {
  same_owner(o);
  return Element(owner_, owner_.add(coords_, o.coords_));
}
Element Element::operator-(const Element& o) const {
  same_owner(o);
  return Element(owner_, owner_.sub(coords_, o.coords_));
}
Element Element::operator*(const Element& o) const {
  same_owner(o);
  return Element(owner_, owner_.multiply(coords_, o.coords_));
}
std::optional<Element> Element::inverse() const {
  auto inv = owner_.inverse(coords_);
  if (!inv) return std::nullopt;
  return Element(owner_, std::move(*inv));
}

// ---------------------------------------------------------------------------

AlgebraMorphism AlgebraMorphism::make(Algebra domain, Algebra codomain, FpMatrix matrix) {
  if (domain.p() != codomain.p()) throw ModulusMismatch("morphism: algebras over different primes");
  if (matrix.p() != domain.p()) throw ModulusMismatch("morphism: matrix modulus");
  if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim())
    throw DimensionMismatch("morphism matrix must be codomain.dim x domain.dim");
  if (matrix.apply(domain.unit()) != codomain.unit()) throw UnitNotPreserved();
  const std::size_t n = domain.dim();
  std::vector<Vec> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = matrix.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = matrix.apply(domain.multiply(domain.basis_vector(i), domain.basis_vector(j)));
      if (lhs != codomain.multiply(images[i], images[j])) throw NotMultiplicative(i, j);
    }
  return AlgebraMorphism(std::move(domain), std::move(codomain), std::move(matrix));
}

AlgebraMorphism AlgebraMorphism::identity(const Algebra& a) {
  return AlgebraMorphism(a, a, FpMatrix::identity(a.p(), a.dim()));
}

Subspace AlgebraMorphism::kernel() const {
  return Subspace(reduce(matrix_).kernel, domain_.id());
}

Subspace AlgebraMorphism::image() const { return Subspace(matrix_.transpose(), codomain_.id()); }

bool AlgebraMorphism::is_onto() const { return rank(matrix_) == codomain_.dim(); }
bool AlgebraMorphism::is_injective() const { return rank(matrix_) == domain_.dim(); }

AlgebraMorphism compose(const AlgebraMorphism& outer, const AlgebraMorphism& inner) {
  if (!(inner.codomain() == outer.domain()))
    throw OwnerMismatch("compose: codomain of the inner map is not the domain of the outer map");
  return AlgebraMorphism::make(inner.domain(), outer.codomain(), outer.matrix() * inner.matrix());
}

// ---------------------------------------------------------------------------

FpPoly minimal_polynomial(const Algebra& alg, std::span<const Residue> a,
                          std::span<const Residue> unit) {
  alg.check_element(a);
  alg.check_element(unit);
  const Residue p = alg.p();
  const std::size_t n = alg.dim();
  struct Row {
    Vec v;
    Vec combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  Vec power(unit.begin(), unit.end());
  for (std::size_t d = 0; d <= n + 1; ++d) {
    Vec w = power;
    Vec combo(d + 1, 0);
    combo[d] = 1;
    for (const Row& r : rows) {
      const Residue c = w[r.pivot];
      if (c == 0) continue;
      vec_axpy(w, neg_mod(c, p), r.v, p);
      for (std::size_t j = 0; j < r.combo.size(); ++j)
        combo[j] = sub_mod(combo[j], mul_mod(c, r.combo[j], p), p);
    }
    std::size_t piv = 0;
    while (piv < n && w[piv] == 0) ++piv;
    if (piv == n) return FpPoly::from_residues(p, std::move(combo));
    const Residue inv = inv_mod(w[piv], p);
    rows.push_back({vec_scale(w, inv, p), vec_scale(combo, inv, p), piv});
    power = alg.multiply(power, a);
  }
  throw Error("minimal polynomial: degree bound exceeded");
}

Vec evaluate(const Algebra& alg, const FpPoly& f, std::span<const Residue> a,
             std::span<const Residue> unit) {
  const Residue p = alg.p();
  Vec r(alg.dim(), 0);
  for (long k = f.degree(); k >= 0; --k) {
    r = alg.multiply(r, a);
    vec_axpy(r, f.coeff(static_cast<std::size_t>(k)), unit, p);
  }
  return r;
}

}  // namespace semiloc
