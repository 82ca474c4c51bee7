#include "semiloc/algebra.hpp"
#include "semiloc/errors.hpp"

namespace semiloc {

namespace {

void check_owner(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("subspace ambient does not match algebra");
  if (s.owner() != 0 && s.owner() != a.id())
    throw OwnerMismatch("subspace belongs to a different algebra");
}

AlgebraOptions internal() { return AlgebraOptions{true}; }

}  // namespace

bool is_left_ideal(const Algebra& a, const Subspace& s) {
  check_owner(a, s);
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.multiply(a.basis_vector(i), s.basis().row(r)))) return false;
  return true;
}

bool is_right_ideal(const Algebra& a, const Subspace& s) {
  check_owner(a, s);
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.multiply(s.basis().row(r), a.basis_vector(i)))) return false;
  return true;
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  return is_left_ideal(a, s) && is_right_ideal(a, s);
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  check_owner(a, s);
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t t = 0; t < s.dim(); ++t)
      if (!s.contains(a.multiply(s.basis().row(r), s.basis().row(t)))) return false;
  return true;
}

Subspace ideal_generated(const Algebra& a, const std::vector<Vec>& gens) {
  for (const auto& g : gens) a.check_element(g);
  Subspace w = Subspace::span(a.p(), a.dim(), gens, a.id());
  std::vector<Vec> pending;
  for (std::size_t r = 0; r < w.dim(); ++r) pending.push_back(w.basis_vector(r));
  while (!pending.empty()) {
    Vec v = std::move(pending.back());
    pending.pop_back();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vec b = a.basis_vector(i);
      for (Vec x : {a.multiply(b, v), a.multiply(v, b)}) {
        if (w.contains(x)) continue;
        w = w.sum(Subspace::span(a.p(), a.dim(), {x}));
        pending.push_back(std::move(x));
      }
    }
  }
  return w;
}

Subspace ideal_product(const Algebra& a, const Subspace& i, const Subspace& j) {
  check_owner(a, i);
  check_owner(a, j);
  std::vector<Vec> prods;
  for (std::size_t r = 0; r < i.dim(); ++r)
    for (std::size_t t = 0; t < j.dim(); ++t) prods.push_back(a.multiply(i.basis().row(r), j.basis().row(t)));
  return Subspace::span(a.p(), a.dim(), prods, a.id());
}

Subspace center(const Algebra& a) {
  const std::size_t n = a.dim();
  FpMatrix stacked(a.p(), 0, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec b = a.basis_vector(i);
    stacked = stacked.vstack(a.left_multiplication(b) - a.right_multiplication(b));
  }
  if (n == 0) return Subspace::zero(a.p(), 0, a.id());
  return Subspace(reduce(stacked).kernel, a.id());
}

// ---------------------------------------------------------------------------

Vec QuotientAlgebra::lift(std::span<const Residue> q) const {
  if (q.size() != complement.size()) throw DimensionMismatch("quotient element length");
  Vec out(projection.domain().dim(), 0);
  for (std::size_t s = 0; s < complement.size(); ++s) out[complement[s]] = q[s];
  return out;
}

QuotientAlgebra quotient_by_ideal(const Algebra& a, const Subspace& ideal) {
  check_owner(a, ideal);
  if (!is_two_sided_ideal(a, ideal)) throw ValidationError("quotient_by_ideal: not a two-sided ideal");
  if (a.dim() > 0 && ideal.contains(a.unit())) throw IdealContainsUnit();
  const Residue p = a.p();
  const std::vector<std::size_t> comp = ideal.complement_columns();
  const std::size_t m = comp.size();
  auto project = [&](std::span<const Residue> x) {
    Vec r = ideal.reduce(x);
    Vec out(m);
    for (std::size_t s = 0; s < m; ++s) out[s] = r[comp[s]];
    return out;
  };
  std::vector<Residue> c(m * m * m, 0);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      Vec prod = project(a.multiply(a.basis_vector(comp[s]), a.basis_vector(comp[t])));
      std::copy(prod.begin(), prod.end(), c.begin() + static_cast<std::ptrdiff_t>((s * m + t) * m));
    }
  Algebra q = Algebra::make(p, m, std::move(c), project(a.unit()),
                            a.name().empty() ? std::string{} : a.name() + "/I", internal());
  FpMatrix proj(p, m, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vec col = project(a.basis_vector(j));
    for (std::size_t s = 0; s < m; ++s) proj(s, j) = col[s];
  }
  AlgebraMorphism pi = AlgebraMorphism::make(a, q, std::move(proj));
  return QuotientAlgebra{q, pi, ideal.with_owner(a.id()), comp};
}

Vec Subalgebra::from_ambient(std::span<const Residue> v) const {
  auto coords = span.coordinates(v);
  if (!coords) throw ValidationError("element lies outside the subalgebra");
  return *coords;
}

Subalgebra subalgebra_on(const Algebra& a, const Subspace& s, std::span<const Residue> unit) {
  check_owner(a, s);
  a.check_element(unit);
  const std::size_t m = s.dim();
  auto coords = [&](std::span<const Residue> v) {
    auto c = s.coordinates(v);
    if (!c) throw ValidationError("subalgebra_on: subspace not closed under multiplication");
    return *c;
  };
  std::vector<Residue> c(m * m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec prod = coords(a.multiply(s.basis().row(i), s.basis().row(j)));
      std::copy(prod.begin(), prod.end(), c.begin() + static_cast<std::ptrdiff_t>((i * m + j) * m));
    }
  Algebra sub = Algebra::make(a.p(), m, std::move(c), coords(unit), {}, internal());
  return Subalgebra{sub, s.with_owner(a.id())};
}

Subalgebra corner_algebra(const Algebra& a, std::span<const Residue> e) {
  if (!a.is_idempotent(e)) throw ValidationError("corner_algebra: element is not idempotent");
  std::vector<Vec> span;
  for (std::size_t i = 0; i < a.dim(); ++i) span.push_back(a.multiply(a.multiply(e, a.basis_vector(i)), e));
  return subalgebra_on(a, Subspace::span(a.p(), a.dim(), span, a.id()), e);
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Residue> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a.constant(j, i, k);
  return Algebra::make(a.p(), n, std::move(c), a.unit(),
                       a.name().empty() ? std::string{} : a.name() + "^op", internal());
}

Reparametrized change_of_basis(const Algebra& a, const FpMatrix& new_basis_rows) {
  const std::size_t n = a.dim();
  if (new_basis_rows.rows() != n || new_basis_rows.cols() != n)
    throw DimensionMismatch("change_of_basis: matrix shape");
  auto inv = invert(new_basis_rows.transpose());
  if (!inv) throw ValidationError("change_of_basis: matrix is singular");
  // old coordinates x map to new coordinates inv * x
  std::vector<Residue> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = inv->apply(a.multiply(new_basis_rows.row(i), new_basis_rows.row(j)));
      std::copy(prod.begin(), prod.end(), c.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
    }
  Algebra b = Algebra::make(a.p(), n, std::move(c), inv->apply(a.unit()), a.name(), internal());
  return Reparametrized{b, AlgebraMorphism::make(a, b, *inv)};
}

// ---------------------------------------------------------------------------

Algebra matrix_extension(const Algebra& a, std::size_t n) {
  if (n == 0) throw ValidationError("matrix_extension: n must be at least 1");
  const std::size_t d = a.dim();
  const std::size_t dim = n * n * d;
  auto idx = [&](std::size_t r, std::size_t s, std::size_t i) { return (r * n + s) * d + i; };
  std::vector<Residue> c(dim * dim * dim, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
              const Residue v = a.constant(i, j, k);
              if (v != 0) c[(idx(r, s, i) * dim + idx(s, u, j)) * dim + idx(r, u, k)] = v;
            }
  Vec unit(dim, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < d; ++i) unit[idx(r, r, i)] = a.unit()[i];
  std::string name = a.name().empty() ? std::string{} : "M" + std::to_string(n) + "(" + a.name() + ")";
  return Algebra::make(a.p(), dim, std::move(c), std::move(unit), std::move(name), internal());
}

AlgebraMorphism lift(const AlgebraMorphism& phi, std::size_t n, const Algebra& domain_ext,
                     const Algebra& codomain_ext) {
  const std::size_t d = phi.domain().dim();
  const std::size_t e = phi.codomain().dim();
  if (domain_ext.dim() != n * n * d || codomain_ext.dim() != n * n * e)
    throw DimensionMismatch("lift: extension dimensions");
  FpMatrix m(phi.domain().p(), n * n * e, n * n * d);
  for (std::size_t rs = 0; rs < n * n; ++rs)
    for (std::size_t k = 0; k < e; ++k)
      for (std::size_t i = 0; i < d; ++i) m(rs * e + k, rs * d + i) = phi.matrix()(k, i);
  return AlgebraMorphism::make(domain_ext, codomain_ext, std::move(m));
}

AlgebraMorphism lift(const AlgebraMorphism& phi, std::size_t n) {
  return lift(phi, n, matrix_extension(phi.domain(), n), matrix_extension(phi.codomain(), n));
}

EmbeddedAlgebra upper_triangular(const Algebra& dalg, std::size_t n) {
  if (n == 0) throw ValidationError("upper_triangular: n must be at least 1");
  const std::size_t d = dalg.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  std::vector<std::size_t> index(n * n, SIZE_MAX);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r; s < n; ++s) {
      index[r * n + s] = pos.size();
      pos.emplace_back(r, s);
    }
  const std::size_t dim = pos.size() * d;
  std::vector<Residue> c(dim * dim * dim, 0);
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = 0; b < pos.size(); ++b) {
      if (pos[a].second != pos[b].first) continue;
      const std::size_t out = index[pos[a].first * n + pos[b].second];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k)
            c[((a * d + i) * dim + (b * d + j)) * dim + out * d + k] = dalg.constant(i, j, k);
    }
  Vec unit(dim, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < d; ++i) unit[index[r * n + r] * d + i] = dalg.unit()[i];
  std::string name = dalg.name().empty() ? std::string{} : "UT" + std::to_string(n) + "(" + dalg.name() + ")";
  Algebra ut = Algebra::make(dalg.p(), dim, std::move(c), std::move(unit), std::move(name), internal());
  Algebra full = matrix_extension(dalg, n);
  FpMatrix inc(dalg.p(), full.dim(), dim);
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t i = 0; i < d; ++i) inc((pos[a].first * n + pos[a].second) * d + i, a * d + i) = 1;
  return EmbeddedAlgebra{ut, AlgebraMorphism::make(ut, full, std::move(inc))};
}

Algebra trivial_extension(const Algebra& k, const BimoduleData& v) {
  const Residue p = k.p();
  const std::size_t kd = k.dim();
  const std::size_t vd = v.dim;
  if (v.left.size() != kd || v.right.size() != kd)
    throw BimoduleViolation("bimodule data must give one left and one right matrix per basis element");
  for (std::size_t i = 0; i < kd; ++i)
    for (const FpMatrix* m : {&v.left[i], &v.right[i]})
      if (m->rows() != vd || m->cols() != vd || m->p() != p)
        throw BimoduleViolation("bimodule action matrix has the wrong shape or modulus");
  auto act = [&](const std::vector<FpMatrix>& mats, std::span<const Residue> x) {
    FpMatrix out(p, vd, vd);
    for (std::size_t i = 0; i < kd; ++i)
      if (x[i]) out.add_scaled(mats[i], x[i]);
    return out;
  };
  const FpMatrix id = FpMatrix::identity(p, vd);
  if (act(v.left, k.unit()) != id) throw BimoduleViolation("unit does not act as identity on the left");
  if (act(v.right, k.unit()) != id) throw BimoduleViolation("unit does not act as identity on the right");
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = 0; j < kd; ++j) {
      Vec prod = k.multiply(k.basis_vector(i), k.basis_vector(j));
      if (act(v.left, prod) != v.left[i] * v.left[j])
        throw BimoduleViolation("left action is not multiplicative");
      // v(ab) = (va)b, column convention
      if (act(v.right, prod) != v.right[j] * v.right[i])
        throw BimoduleViolation("right action is not multiplicative");
      if (v.left[i] * v.right[j] != v.right[j] * v.left[i])
        throw BimoduleViolation("left and right actions do not commute");
    }
  const std::size_t dim = kd + vd;
  std::vector<Residue> c(dim * dim * dim, 0);
  auto put = [&](std::size_t i, std::size_t j, std::size_t t, Residue val) {
    c[(i * dim + j) * dim + t] = val;
  };
  for (std::size_t i = 0; i < kd; ++i) {
    for (std::size_t j = 0; j < kd; ++j)
      for (std::size_t t = 0; t < kd; ++t) put(i, j, t, k.constant(i, j, t));
    for (std::size_t a = 0; a < vd; ++a)
      for (std::size_t t = 0; t < vd; ++t) {
        put(i, kd + a, kd + t, v.left[i](t, a));
        put(kd + a, i, kd + t, v.right[i](t, a));
      }
  }
  Vec unit(dim, 0);
  std::copy(k.unit().begin(), k.unit().end(), unit.begin());
  return Algebra::make(p, dim, std::move(c), std::move(unit), {}, internal());
}

Vec ProductAlgebra::inject(std::size_t factor, std::span<const Residue> x) const {
  if (x.size() != factors.at(factor).dim()) throw DimensionMismatch("inject: element length");
  Vec out(algebra.dim(), 0);
  std::copy(x.begin(), x.end(), out.begin() + static_cast<std::ptrdiff_t>(offsets[factor]));
  return out;
}

ProductAlgebra direct_product(const std::vector<Algebra>& factors) {
  if (factors.empty()) throw ValidationError("direct_product: no factors");
  const Residue p = factors.front().p();
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;
  for (const auto& f : factors) {
    if (f.p() != p) throw ModulusMismatch("direct_product: factors over different primes");
    offsets.push_back(dim);
    dim += f.dim();
  }
  std::vector<Residue> c(dim * dim * dim, 0);
  Vec unit(dim, 0);
  std::string name;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const Algebra& a = factors[f];
    const std::size_t o = offsets[f];
    for (std::size_t i = 0; i < a.dim(); ++i) {
      unit[o + i] = a.unit()[i];
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k)
          c[((o + i) * dim + o + j) * dim + o + k] = a.constant(i, j, k);
    }
    if (!a.name().empty()) name += (name.empty() ? "" : "x") + a.name();
  }
  Algebra prod = Algebra::make(p, dim, std::move(c), std::move(unit), std::move(name), internal());
  std::vector<AlgebraMorphism> projections;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    FpMatrix m(p, factors[f].dim(), dim);
    for (std::size_t i = 0; i < factors[f].dim(); ++i) m(i, offsets[f] + i) = 1;
    projections.push_back(AlgebraMorphism::make(prod, factors[f], std::move(m)));
  }
  return ProductAlgebra{prod, factors, std::move(projections), std::move(offsets)};
}

// ---------------------------------------------------------------------------

Algebra polynomial_quotient(const FpPoly& f, std::string name) {
  if (f.is_zero()) throw ValidationError("polynomial_quotient: zero modulus");
  const Residue p = f.p();
  const FpPoly g = f.monic();
  const std::size_t n = static_cast<std::size_t>(g.degree());
  std::vector<Residue> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FpPoly r = FpPoly::monomial(p, i + j) % g;
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = r.coeff(k);
    }
  Vec unit(n, 0);
  if (n > 0) unit[0] = 1;
  return Algebra::make(p, n, std::move(c), std::move(unit), std::move(name), internal());
}

Algebra truncated_polynomial(Residue p, std::size_t n) {
  require_prime(p);
  return polynomial_quotient(FpPoly::monomial(p, n),
                             "GF(" + std::to_string(p) + ")[x]/(x^" + std::to_string(n) + ")");
}

Algebra field_algebra(Residue p, std::size_t k) {
  require_prime(p);
  if (k == 0) throw ValidationError("field_algebra: degree must be at least 1");
  std::string name = k == 1 ? "GF(" + std::to_string(p) + ")"
                            : "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
  return polynomial_quotient(first_irreducible(p, k), std::move(name));
}

Algebra full_matrix_algebra(Residue p, std::size_t n) {
  return matrix_extension(field_algebra(p, 1), n);
}

}  // namespace semiloc
