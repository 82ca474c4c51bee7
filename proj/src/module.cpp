#include "semiloc/module.hpp"

#include <atomic>

#include "semiloc/errors.hpp"

namespace semiloc {

namespace {

std::uint64_t next_module_token() {
  // Separate range from algebra tokens keeps owner checks unambiguous.
  static std::atomic<std::uint64_t> counter{std::uint64_t{1} << 62};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

// Coordinates of a vector known to lie in s: entries at the pivot columns.
Vec pivot_coords(const Subspace& s, std::span<const Residue> v) {
  Vec c(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) c[i] = v[s.pivots()[i]];
  return c;
}

void check_module_owner(const Module& m, const Subspace& u) {
  if (u.ambient_dim() != m.dim()) throw DimensionMismatch("subspace ambient does not match module");
  if (u.owner() != 0 && u.owner() != m.id()) throw OwnerMismatch("subspace belongs to a different module");
}

}  // namespace

struct Module::Data {
  Algebra algebra;
  std::size_t dim = 0;
  std::vector<FpMatrix> actions;
  std::string name;
  std::uint64_t id = 0;
};

Module Module::make(Algebra algebra, std::vector<FpMatrix> actions, std::string name) {
  const std::size_t n = algebra.dim();
  const Residue p = algebra.p();
  if (actions.size() != n) throw DimensionMismatch("module: need one action matrix per basis element");
  std::size_t dim = 0;
  if (n > 0) {
    dim = actions[0].rows();
    for (const auto& a : actions) {
      if (a.rows() != dim || a.cols() != dim) throw DimensionMismatch("module: action matrices must be square of equal size");
      if (a.p() != p) throw ModulusMismatch("module: action matrix modulus");
    }
  }
  auto rho = [&](std::span<const Residue> x) {
    FpMatrix out(p, dim, dim);
    for (std::size_t i = 0; i < n; ++i)
      if (x[i]) out.add_scaled(actions[i], x[i]);
    return out;
  };
  if (n > 0 && !rho(algebra.unit()).is_identity()) throw ValidationError("module: unit does not act as identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = algebra.multiply(algebra.basis_vector(i), algebra.basis_vector(j));
      if (rho(prod) != actions[i] * actions[j])
        throw ValidationError("module: action is not multiplicative on basis pair (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
    }
  auto d = std::make_shared<Data>(Data{std::move(algebra), dim, std::move(actions), std::move(name), next_module_token()});
  return Module(std::move(d));
}

Module Module::zero(const Algebra& algebra) {
  return make(algebra, std::vector<FpMatrix>(algebra.dim(), FpMatrix(algebra.p(), 0, 0)), "0");
}

const Algebra& Module::algebra() const { return d_->algebra; }
std::size_t Module::dim() const { return d_->dim; }
std::uint64_t Module::id() const { return d_->id; }
const std::string& Module::name() const { return d_->name; }
const FpMatrix& Module::action(std::size_t i) const { return d_->actions.at(i); }
const std::vector<FpMatrix>& Module::actions() const { return d_->actions; }

Module Module::with_name(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  d->id = next_module_token();
  return Module(std::move(d));
}

FpMatrix Module::action_of(std::span<const Residue> a) const {
  algebra().check_element(a);
  FpMatrix out(p(), dim(), dim());
  if (algebra().dim() == 0) return FpMatrix::identity(p(), dim());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) out.add_scaled(d_->actions[i], a[i]);
  return out;
}

Vec Module::act(std::span<const Residue> v, std::span<const Residue> a) const {
  if (v.size() != dim()) throw DimensionMismatch("module element length");
  return action_of(a).apply_left(v);
}

// ---------------------------------------------------------------------------

bool intertwines(const Module& m, const Module& n, const FpMatrix& x) {
  if (x.rows() != m.dim() || x.cols() != n.dim()) return false;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    if (m.action(i) * x != x * n.action(i)) return false;
  return true;
}

ModuleHom ModuleHom::make(Module domain, Module codomain, FpMatrix matrix) {
  if (!(domain.algebra() == codomain.algebra())) throw OwnerMismatch("module hom: modules over different algebras");
  if (matrix.rows() != domain.dim() || matrix.cols() != codomain.dim() || matrix.p() != domain.p())
    throw DimensionMismatch("module hom matrix must be domain.dim x codomain.dim");
  if (!intertwines(domain, codomain, matrix)) throw ValidationError("module hom: matrix does not commute with the action");
  return ModuleHom(std::move(domain), std::move(codomain), std::move(matrix));
}

ModuleHom ModuleHom::identity(const Module& m) { return ModuleHom(m, m, FpMatrix::identity(m.p(), m.dim())); }

ModuleHom ModuleHom::zero(const Module& domain, const Module& codomain) {
  if (!(domain.algebra() == codomain.algebra())) throw OwnerMismatch("module hom: modules over different algebras");
  return ModuleHom(domain, codomain, FpMatrix(domain.p(), domain.dim(), codomain.dim()));
}

Subspace ModuleHom::kernel() const {
  if (domain_.dim() == 0) return domain_.zero_subspace();
  return Subspace(reduce(matrix_.transpose()).kernel, domain_.id());
}

Subspace ModuleHom::image() const { return Subspace(matrix_, codomain_.id()); }
bool ModuleHom::is_injective() const { return rank(matrix_) == domain_.dim(); }
bool ModuleHom::is_surjective() const { return rank(matrix_) == codomain_.dim(); }

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  if (!(f.codomain() == g.domain())) throw OwnerMismatch("compose: codomain of f is not the domain of g");
  return ModuleHom::make(f.domain(), g.codomain(), f.matrix() * g.matrix());
}

// ---------------------------------------------------------------------------

HomSpace::HomSpace(Module domain, Module codomain) : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (!(domain_.algebra() == codomain_.algebra())) throw OwnerMismatch("hom space: modules over different algebras");
  const std::size_t m = domain_.dim(), n = codomain_.dim();
  const Residue p = domain_.p();
  const auto& gens = domain_.algebra().generator_indices();
  // Unknown X(s, c) at index s*n + c; one equation per (generator, r, c):
  // sum_s rhoM(r,s) X(s,c) - sum_t X(r,t) rhoN(t,c) = 0.
  FpMatrix eqs(p, gens.size() * m * n, m * n);
  std::size_t row = 0;
  for (std::size_t g : gens) {
    const FpMatrix& a = domain_.action(g);
    const FpMatrix& b = codomain_.action(g);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        for (std::size_t s = 0; s < m; ++s)
          if (a(r, s)) eqs(row, s * n + c) = add_mod(eqs(row, s * n + c), a(r, s), p);
        for (std::size_t t = 0; t < n; ++t)
          if (b(t, c)) eqs(row, r * n + t) = sub_mod(eqs(row, r * n + t), b(t, c), p);
      }
  }
  if (m * n == 0) {
    space_ = Subspace::zero(p, 0);
  } else {
    space_ = Subspace(reduce(eqs).kernel);
  }
}

FpMatrix HomSpace::basis_matrix(std::size_t i) const {
  return FpMatrix::unflatten(domain_.p(), space_.basis().row(i), domain_.dim(), codomain_.dim());
}

std::vector<ModuleHom> HomSpace::basis() const {
  std::vector<ModuleHom> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(ModuleHom(domain_, codomain_, basis_matrix(i)));
  return out;
}

FpMatrix HomSpace::combination(std::span<const Residue> coords) const {
  return FpMatrix::unflatten(domain_.p(), space_.combination(coords), domain_.dim(), codomain_.dim());
}

std::optional<Vec> HomSpace::coordinates(const FpMatrix& x) const {
  if (x.rows() != domain_.dim() || x.cols() != codomain_.dim()) throw DimensionMismatch("hom coordinates: shape");
  return space_.coordinates(x.flatten());
}

Vec EndoAlgebra::to_coords(const FpMatrix& x) const {
  auto c = homs.coordinates(x);
  if (!c) throw ValidationError("endomorphism coordinates: matrix is not an endomorphism");
  return *c;
}

EndoAlgebra endo_algebra(const Module& m) {
  HomSpace homs(m, m);
  const std::size_t e = homs.dim();
  std::vector<FpMatrix> mats;
  for (std::size_t i = 0; i < e; ++i) mats.push_back(homs.basis_matrix(i));
  std::vector<Residue> c(e * e * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) {
      // f_i · f_j = f_i ∘ f_j
      Vec prod = pivot_coords(homs.space(), (mats[j] * mats[i]).flatten());
      std::copy(prod.begin(), prod.end(), c.begin() + static_cast<std::ptrdiff_t>((i * e + j) * e));
    }
  Vec unit = pivot_coords(homs.space(), FpMatrix::identity(m.p(), m.dim()).flatten());
  if (m.dim() == 0) unit = Vec{};
  Algebra alg = Algebra::make(m.p(), e, std::move(c), std::move(unit),
                              m.name().empty() ? std::string{} : "End(" + m.name() + ")", AlgebraOptions{true});
  return EndoAlgebra{m, std::move(homs), std::move(alg)};
}

// ---------------------------------------------------------------------------

Module regular_module(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<FpMatrix> actions;
  for (std::size_t i = 0; i < n; ++i) {
    FpMatrix rho(a.p(), n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) rho(r, k) = a.constant(r, i, k);
    actions.push_back(std::move(rho));
  }
  return Module::make(a, std::move(actions), a.name().empty() ? std::string{} : a.name() + "_reg");
}

bool is_submodule(const Module& m, const Subspace& u) {
  check_module_owner(m, u);
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
      if (!u.contains(m.action(i).apply_left(u.basis().row(r)))) return false;
  return true;
}

Subspace submodule_generated(const Module& m, const std::vector<Vec>& vectors) {
  Subspace w = Subspace::span(m.p(), m.dim(), vectors, m.id());
  std::vector<Vec> pending;
  for (std::size_t r = 0; r < w.dim(); ++r) pending.push_back(w.basis_vector(r));
  const auto& gens = m.algebra().generator_indices();
  while (!pending.empty()) {
    Vec v = std::move(pending.back());
    pending.pop_back();
    for (std::size_t g : gens) {
      Vec x = m.action(g).apply_left(v);
      if (w.contains(x)) continue;
      w = w.sum(Subspace::span(m.p(), m.dim(), {x}));
      pending.push_back(std::move(x));
    }
  }
  return w;
}

SubmoduleData submodule(const Module& m, const Subspace& u) {
  check_module_owner(m, u);
  const std::size_t k = u.dim();
  std::vector<FpMatrix> actions;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    FpMatrix rho(m.p(), k, k);
    for (std::size_t r = 0; r < k; ++r) {
      Vec img = m.action(i).apply_left(u.basis().row(r));
      auto c = u.coordinates(img);
      if (!c) throw NotASubmodule();
      for (std::size_t s = 0; s < k; ++s) rho(r, s) = (*c)[s];
    }
    actions.push_back(std::move(rho));
  }
  Module sub = Module::make(m.algebra(), std::move(actions));
  FpMatrix inc = u.basis();
  if (k == 0) inc = FpMatrix(m.p(), 0, m.dim());
  return SubmoduleData{sub, ModuleHom::make(sub, m, std::move(inc))};
}

Vec QuotientModule::lift(std::span<const Residue> q) const {
  if (q.size() != complement.size()) throw DimensionMismatch("quotient module element length");
  Vec out(projection.domain().dim(), 0);
  for (std::size_t s = 0; s < complement.size(); ++s) out[complement[s]] = q[s];
  return out;
}

QuotientModule quotient_module(const Module& m, const Subspace& u) {
  check_module_owner(m, u);
  if (!is_submodule(m, u)) throw NotASubmodule();
  const std::vector<std::size_t> comp = u.complement_columns();
  const std::size_t k = comp.size();
  auto project = [&](std::span<const Residue> v) {
    Vec r = u.reduce(v);
    Vec out(k);
    for (std::size_t s = 0; s < k; ++s) out[s] = r[comp[s]];
    return out;
  };
  std::vector<FpMatrix> actions;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    FpMatrix rho(m.p(), k, k);
    for (std::size_t s = 0; s < k; ++s) {
      Vec img = project(m.action(i).row(comp[s]));
      for (std::size_t t = 0; t < k; ++t) rho(s, t) = img[t];
    }
    actions.push_back(std::move(rho));
  }
  Module q = Module::make(m.algebra(), std::move(actions));
  FpMatrix proj(m.p(), m.dim(), k);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Vec img = project(unit_vector(m.dim(), j));
    for (std::size_t t = 0; t < k; ++t) proj(j, t) = img[t];
  }
  return QuotientModule{q, ModuleHom::make(m, q, std::move(proj)), comp};
}

FpMatrix block_diagonal(const std::vector<FpMatrix>& blocks, Residue p) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  FpMatrix out(p, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

DirectSum direct_sum(const std::vector<Module>& summands, const Algebra& algebra) {
  const Residue p = algebra.p();
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;
  for (const auto& s : summands) {
    if (!(s.algebra() == algebra)) throw OwnerMismatch("direct_sum: summand over a different algebra");
    offsets.push_back(dim);
    dim += s.dim();
  }
  std::vector<FpMatrix> actions;
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    std::vector<FpMatrix> blocks;
    for (const auto& s : summands) blocks.push_back(s.action(i));
    actions.push_back(block_diagonal(blocks, p));
  }
  Module sum = summands.empty() ? Module::zero(algebra) : Module::make(algebra, std::move(actions));
  std::vector<ModuleHom> inj, proj;
  for (std::size_t s = 0; s < summands.size(); ++s) {
    FpMatrix in(p, summands[s].dim(), dim), out(p, dim, summands[s].dim());
    for (std::size_t r = 0; r < summands[s].dim(); ++r) {
      in(r, offsets[s] + r) = 1;
      out(offsets[s] + r, r) = 1;
    }
    inj.push_back(ModuleHom::make(summands[s], sum, std::move(in)));
    proj.push_back(ModuleHom::make(sum, summands[s], std::move(out)));
  }
  return DirectSum{sum, summands, std::move(offsets), std::move(inj), std::move(proj)};
}

Presentation module_from_presentation(const Algebra& a, std::size_t rows,
                                      const std::vector<std::vector<Vec>>& entries) {
  if (entries.size() != rows) throw DimensionMismatch("presentation: row count");
  const std::size_t cols = rows == 0 ? 0 : entries[0].size();
  for (const auto& r : entries) {
    if (r.size() != cols) throw DimensionMismatch("presentation: ragged rows");
    for (const auto& e : r) a.check_element(e);
  }
  const Module reg = regular_module(a);
  const DirectSum free = direct_sum(std::vector<Module>(rows, reg), a);
  std::vector<Vec> gens;
  for (std::size_t c = 0; c < cols; ++c) {
    Vec v;
    for (std::size_t r = 0; r < rows; ++r) v.insert(v.end(), entries[r][c].begin(), entries[r][c].end());
    gens.push_back(std::move(v));
  }
  Subspace rel = submodule_generated(free.module, gens);
  QuotientModule q = quotient_module(free.module, rel);
  return Presentation{q.module, free.module, q.projection, rel};
}

Module dual_module(const Module& m, const Algebra& op) {
  if (op.dim() != m.algebra().dim() || op.p() != m.p()) throw DimensionMismatch("dual_module: algebra shape");
  std::vector<FpMatrix> actions;
  for (const auto& a : m.actions()) actions.push_back(a.transpose());
  if (m.dim() == 0) return Module::zero(op);
  return Module::make(op, std::move(actions));
}

Module dual_module_back(const Module& n, const Algebra& a) { return dual_module(n, a); }

Module restrict_scalars(const AlgebraMorphism& phi, const Module& m) {
  if (!(phi.codomain() == m.algebra())) throw OwnerMismatch("restrict_scalars: module is not over the codomain");
  std::vector<FpMatrix> actions;
  for (std::size_t i = 0; i < phi.domain().dim(); ++i) actions.push_back(m.action_of(phi.matrix().column(i)));
  if (m.dim() == 0) return Module::zero(phi.domain());
  return Module::make(phi.domain(), std::move(actions));
}

}  // namespace semiloc
