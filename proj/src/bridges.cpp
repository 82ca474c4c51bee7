#include "semiloc/bridges.hpp"

#include "semiloc/errors.hpp"

namespace semiloc {

std::string to_string(BridgeKind k) {
  switch (k) {
    case BridgeKind::Step1Psi: return "psi-step1";
    case BridgeKind::Spectral: return "phi-spectral";
    case BridgeKind::Dual: return "psi-dual";
    case BridgeKind::Chi: return "chi";
    case BridgeKind::BigPhi: return "bigPhi";
    case BridgeKind::Pair: return "pair-phi-psi";
    case BridgeKind::Top: return "top-reduction";
  }
  return "?";
}

namespace {

// {c : cond(sum c_t g_t) = 0} for a linear condition given per basis element.
template <class Cond>
Subspace linear_ideal(const EndoAlgebra& end, Cond&& cond) {
  const std::size_t h = end.algebra.dim();
  const Residue p = end.module.p();
  std::vector<Vec> cols;
  for (std::size_t t = 0; t < h; ++t) cols.push_back(cond(end.homs.basis_matrix(t)).flatten());
  const std::size_t rows = cols.empty() ? 0 : cols[0].size();
  const FpMatrix c = FpMatrix::from_columns(p, cols, rows);
  if (rows == 0) return Subspace::full(p, h, end.algebra.id());
  return Subspace(reduce(c).kernel, end.algebra.id());
}

std::size_t semisimple_dim(const AlgebraAnalysis& an, const std::vector<std::size_t>& mult) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) d += mult[i] * mult[i] * an.blocks[i].k;
  return d;
}

template <class Cond>
EndoQuotient endo_quotient(const Module& x, std::size_t expected_dim, Cond&& cond) {
  EndoAlgebra end = endo_algebra(x);
  Subspace j = linear_ideal(end, cond);
  if (!is_two_sided_ideal(end.algebra, j))
    throw AssertionFailure("endomorphism radical", "linear description is not a two-sided ideal");
  nilpotency_index(end.algebra, j);  // throws unless nilpotent
  if (end.algebra.dim() - j.dim() != expected_dim)
    throw AssertionFailure("endomorphism radical", "quotient dimension differs from the semisimple count");
  QuotientAlgebra q = quotient_by_ideal(end.algebra, j);
  return EndoQuotient{std::move(end), std::move(j), std::move(q)};
}

Vec solve_system(const FpMatrix& system, const FpMatrix& rhs, std::mt19937_64* rng, const char* what) {
  const Vec b = rhs.flatten();
  if (system.cols() == 0) {
    for (Residue v : b)
      if (v) throw AssertionFailure(what, "no solution");
    return {};
  }
  auto sol = solve_affine(system, b);
  if (!sol) throw AssertionFailure(what, "no solution; the module is not injective/projective as certified");
  Vec x = std::move(sol->particular);
  if (rng)
    for (std::size_t r = 0; r < sol->kernel.rows(); ++r)
      vec_axpy(x, static_cast<Residue>((*rng)() % system.p()), sol->kernel.row(r), system.p());
  return x;
}

FpMatrix lift_matrix(const QuotientModule& q, std::size_t ambient) {
  const std::size_t d = q.module.dim();
  FpMatrix l(q.module.p(), d, ambient);
  for (std::size_t r = 0; r < d; ++r) {
    const Vec v = q.lift(unit_vector(d, r));
    for (std::size_t c = 0; c < ambient; ++c) l(r, c) = v[c];
  }
  return l;
}

// Matrix of the restriction to a submodule with the given inclusion rows.
FpMatrix restrict_to(const FpMatrix& inclusion, const FpMatrix& f) {
  const FpMatrix img = inclusion * f;
  const FpMatrix t = inclusion.transpose();
  FpMatrix out(f.p(), inclusion.rows(), inclusion.rows());
  for (std::size_t r = 0; r < img.rows(); ++r) {
    auto y = solve(t, img.row(r));
    if (!y) throw AssertionFailure("restriction", "endomorphism does not preserve the submodule");
    for (std::size_t c = 0; c < y->size(); ++c) out(r, c) = (*y)[c];
  }
  return out;
}

// Endomorphism induced on M/U by f with f(U) ⊆ U.
FpMatrix induced_on_quotient(const QuotientModule& q, const FpMatrix& f) {
  return lift_matrix(q, f.rows()) * f * q.projection.matrix();
}

}  // namespace

SpectralTarget spectral_target(const Module& x, const AlgebraAnalysis& an) {
  InjectiveEnvelope env = injective_envelope(x, an);
  const StructuralSeries es = structural_series(env.envelope, an);
  const FpMatrix& socle = es.socle.basis();
  EndoQuotient target = endo_quotient(env.envelope, semisimple_dim(an, es.socle_multiplicities),
                                      [&](const FpMatrix& g) { return socle * g; });
  std::vector<Vec> cols;
  for (std::size_t t = 0; t < target.end.algebra.dim(); ++t)
    cols.push_back((env.iota.matrix() * target.end.homs.basis_matrix(t)).flatten());
  FpMatrix system = FpMatrix::from_columns(x.p(), cols, x.dim() * env.envelope.dim());
  return SpectralTarget{x, std::move(env), std::move(target), std::move(system)};
}

Vec SpectralTarget::extension(const FpMatrix& f, std::mt19937_64* rng) const {
  return solve_system(system, f * envelope.iota.matrix(), rng, "extension along the envelope");
}

Vec SpectralTarget::class_of(const FpMatrix& f, std::mt19937_64* rng) const {
  return target.quotient.projection.apply(extension(f, rng));
}

DualTarget dual_target(const Module& x, const AlgebraAnalysis& an) {
  ProjectiveCover cover = projective_cover(x, an);
  const StructuralSeries ps = structural_series(cover.cover, an);
  const FpMatrix ann = ps.radical.annihilator().basis().transpose();
  EndoQuotient target = endo_quotient(cover.cover, semisimple_dim(an, ps.top_multiplicities),
                                      [&](const FpMatrix& g) { return g * ann; });
  std::vector<Vec> cols;
  for (std::size_t t = 0; t < target.end.algebra.dim(); ++t)
    cols.push_back((target.end.homs.basis_matrix(t) * cover.pi.matrix()).flatten());
  FpMatrix system = FpMatrix::from_columns(x.p(), cols, cover.cover.dim() * x.dim());
  return DualTarget{x, std::move(cover), std::move(target), std::move(system)};
}

Vec DualTarget::lifting(const FpMatrix& f, std::mt19937_64* rng) const {
  return solve_system(system, cover.pi.matrix() * f, rng, "lifting along the cover");
}

Vec DualTarget::class_of(const FpMatrix& f, std::mt19937_64* rng) const {
  return target.quotient.projection.apply(lifting(f, rng));
}

// ---------------------------------------------------------------------------

BridgeContext::BridgeContext(Module m, AlgebraAnalysis an, std::uint64_t seed, std::uint64_t budget)
    : m_(std::move(m)), an_(std::move(an)), seed_(seed), budget_(budget) {
  if (!(m_.algebra() == an_.algebra)) throw OwnerMismatch("BridgeContext: analysis of a different algebra");
}

const EndoAlgebra& BridgeContext::end() {
  if (!end_) end_ = endo_algebra(m_);
  return *end_;
}

const StructuralSeries& BridgeContext::series() {
  if (!series_) series_ = structural_series(m_, an_);
  return *series_;
}

const SpectralTarget& BridgeContext::spectral() {
  if (!spectral_) spectral_ = spectral_target(m_, an_);
  return *spectral_;
}

const DualTarget& BridgeContext::dual() {
  if (!dual_) dual_ = dual_target(m_, an_);
  return *dual_;
}

const QuotientModule& BridgeContext::cokernel() {
  if (!cokernel_) cokernel_ = quotient_module(spectral().envelope.envelope, spectral().envelope.iota.image());
  return *cokernel_;
}

const SubmoduleData& BridgeContext::cover_kernel() {
  if (!cover_kernel_) cover_kernel_ = submodule(dual().cover.cover, dual().cover.kernel);
  return *cover_kernel_;
}

const AlgebraAnalysis& BridgeContext::end_analysis() {
  if (!end_analysis_) end_analysis_ = analyze(end().algebra, budget_);
  return *end_analysis_;
}

template <class Columns>
BridgeMorphism BridgeContext::assemble(BridgeKind kind, std::vector<Algebra> factors, Columns&& columns) {
  const EndoAlgebra& e = end();
  const Residue p = m_.p();
  std::vector<Algebra> kept;
  for (auto& f : factors)
    if (f.dim() > 0) kept.push_back(f);
  std::size_t total = 0;
  for (const auto& f : kept) total += f.dim();
  auto build = [&](std::mt19937_64* rng) {
    FpMatrix m(p, total, e.algebra.dim());
    for (std::size_t t = 0; t < e.algebra.dim(); ++t) {
      const Vec col = columns(e.homs.basis_matrix(t), rng);
      if (col.size() != total) throw AssertionFailure(to_string(kind), "column size mismatch");
      for (std::size_t r = 0; r < total; ++r) m(r, t) = col[r];
    }
    return m;
  };
  FpMatrix canonical = build(nullptr);
  std::mt19937_64 rng(seed_ ^ static_cast<std::uint64_t>(kind));
  if (!(build(&rng) == canonical))
    throw AssertionFailure(to_string(kind), "independent lifting gives a different morphism");
  Algebra target = kept.empty() ? Algebra::zero(p) : direct_product(kept).algebra;
  AlgebraMorphism phi = AlgebraMorphism::make(e.algebra, target, std::move(canonical));
  return BridgeMorphism{kind, std::move(kept), std::move(phi)};
}

namespace {

Vec concat(Vec a, const Vec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

BridgeMorphism BridgeContext::spectral_bridge() {
  const SpectralTarget& s = spectral();
  return assemble(BridgeKind::Spectral, {s.target.quotient.algebra},
                  [&](const FpMatrix& f, std::mt19937_64* rng) { return s.class_of(f, rng); });
}

BridgeMorphism BridgeContext::dual_bridge() {
  const DualTarget& d = dual();
  return assemble(BridgeKind::Dual, {d.target.quotient.algebra},
                  [&](const FpMatrix& f, std::mt19937_64* rng) { return d.class_of(f, rng); });
}

BridgeMorphism BridgeContext::pair_bridge() {
  const SpectralTarget& s = spectral();
  const DualTarget& d = dual();
  return assemble(BridgeKind::Pair, {s.target.quotient.algebra, d.target.quotient.algebra},
                  [&](const FpMatrix& f, std::mt19937_64* rng) {
                    return concat(s.class_of(f, rng), d.class_of(f, rng));
                  });
}

BridgeMorphism BridgeContext::chi_bridge() {
  const SpectralTarget& s = spectral();
  const QuotientModule& l1 = cokernel();
  if (l1.module.dim() > 0 && !cokernel_spectral_) cokernel_spectral_ = spectral_target(l1.module, an_);
  const std::optional<SpectralTarget>& s1 = cokernel_spectral_;
  std::vector<Algebra> factors{s.target.quotient.algebra};
  if (s1) factors.push_back(s1->target.quotient.algebra);
  return assemble(BridgeKind::Chi, factors, [&](const FpMatrix& f, std::mt19937_64* rng) {
    const Vec c = s.extension(f, rng);
    Vec out = s.target.quotient.projection.apply(c);
    if (!s1) return out;
    const FpMatrix f1 = induced_on_quotient(l1, s.target.end.to_matrix(c));
    return concat(std::move(out), s1->class_of(f1, rng));
  });
}

BridgeMorphism BridgeContext::bigphi_bridge() {
  const DualTarget& d = dual();
  const SubmoduleData& k = cover_kernel();
  if (k.module.dim() > 0 && !cover_kernel_dual_) cover_kernel_dual_ = dual_target(k.module, an_);
  const std::optional<DualTarget>& d1 = cover_kernel_dual_;
  std::vector<Algebra> factors{d.target.quotient.algebra};
  if (d1) factors.push_back(d1->target.quotient.algebra);
  return assemble(BridgeKind::BigPhi, factors, [&](const FpMatrix& f, std::mt19937_64* rng) {
    const Vec c = d.lifting(f, rng);
    Vec out = d.target.quotient.projection.apply(c);
    if (!d1) return out;
    const FpMatrix f1 = restrict_to(k.inclusion.matrix(), d.target.end.to_matrix(c));
    return concat(std::move(out), d1->class_of(f1, rng));
  });
}

BridgeMorphism BridgeContext::step1_psi() {
  const StructuralSeries& s = series();
  std::size_t rank = 0;
  bool free_top = true;
  for (std::size_t i = 0; i < an_.blocks.size(); ++i) {
    const std::size_t t = s.top_multiplicities[i];
    if (t % an_.blocks[i].n != 0) free_top = false;
    if (i == 0) rank = t / an_.blocks[i].n;
    else if (t / an_.blocks[i].n != rank) free_top = false;
  }
  if (!free_top) throw CoverViolation("step1_psi: top(M) is not free, so the cover is not a free module");
  const DualTarget& d = dual();
  const SubmoduleData& k = cover_kernel();
  if (!structural_series(d.cover.cover, an_).radical.contains(d.cover.kernel))
    throw CoverViolation("step1_psi: K is not inside F·J");
  const QuotientModule top_m = quotient_module(m_, s.radical);
  const EndoAlgebra end_top_m = endo_algebra(top_m.module);
  const QuotientModule top_k = quotient_module(k.module, structural_series(k.module, an_).radical);
  const EndoAlgebra end_top_k = endo_algebra(top_k.module);
  return assemble(BridgeKind::Step1Psi, {end_top_m.algebra, end_top_k.algebra},
                  [&](const FpMatrix& f, std::mt19937_64* rng) {
                    Vec out = end_top_m.to_coords(induced_on_quotient(top_m, f));
                    if (k.module.dim() == 0) return out;
                    const FpMatrix f0 = d.target.end.to_matrix(d.lifting(f, rng));
                    const FpMatrix f1 = restrict_to(k.inclusion.matrix(), f0);
                    return concat(std::move(out), end_top_k.to_coords(induced_on_quotient(top_k, f1)));
                  });
}

BridgeMorphism BridgeContext::top_bridge() {
  const QuotientModule top = quotient_module(m_, series().radical);
  const EndoAlgebra end_top = endo_algebra(top.module);
  return assemble(BridgeKind::Top, {end_top.algebra}, [&](const FpMatrix& f, std::mt19937_64*) {
    return end_top.to_coords(induced_on_quotient(top, f));
  });
}

IdealPair BridgeContext::ideal_pair() {
  const EndoAlgebra& e = end();
  const StructuralSeries& s = series();
  const FpMatrix& socle = s.socle.basis();
  const FpMatrix ann = s.radical.annihilator().basis().transpose();
  IdealPair out{linear_ideal(e, [&](const FpMatrix& g) { return socle * g; }),
                linear_ideal(e, [&](const FpMatrix& g) { return g * ann; })};
  if (!is_two_sided_ideal(e.algebra, out.essential_kernel) || !is_two_sided_ideal(e.algebra, out.superfluous_image))
    throw AssertionFailure("ideal pair", "I or K is not a two-sided ideal");
  return out;
}

BoundsReport BridgeContext::bounds() {
  BoundsReport b;
  b.codim_end = codim_end();
  b.dim = series().socle_length;
  b.codim = series().top_length;
  b.dim_cokernel = structural_series(cokernel().module, an_).socle_length;
  b.codim_kernel = structural_series(cover_kernel().module, an_).top_length;
  b.b1 = b.codim_end <= b.dim + b.dim_cokernel;
  b.b2 = b.codim_end <= b.dim + b.codim;
  b.b3 = b.codim_end <= b.codim + b.codim_kernel;
  b.b1_equal = b.codim_end == b.dim + b.dim_cokernel;
  b.b2_equal = b.codim_end == b.dim + b.codim;
  b.b3_equal = b.codim_end == b.codim + b.codim_kernel;
  return b;
}

BiuniformClass BridgeContext::biuniform_classify() {
  if (series().socle_length != 1 || series().top_length != 1)
    throw NotBiuniform("biuniform_classify: Goldie dimensions are (" + std::to_string(series().socle_length) + ", " +
                       std::to_string(series().top_length) + ")");
  BiuniformClass out{0, ideal_pair(), end_analysis().radical.radical};
  const Subspace& i = out.ideals.essential_kernel;
  const Subspace& k = out.ideals.superfluous_image;
  const AlgebraAnalysis& ea = end_analysis();
  if (i.contains(k) || k.contains(i)) {
    out.which_case = 1;
    if (ea.blocks.size() != 1 || ea.blocks[0].n != 1)
      throw AssertionFailure("biuniform case 1", "End(M) is not local");
    if (!(i.sum(k) == out.radical)) throw AssertionFailure("biuniform case 1", "maximal ideal differs from I + K");
  } else {
    out.which_case = 2;
    if (ea.blocks.size() != 2 || ea.blocks[0].n != 1 || ea.blocks[1].n != 1)
      throw AssertionFailure("biuniform case 2", "End/J is not a product of two division rings");
    if (!(i.intersection(k) == out.radical)) throw AssertionFailure("biuniform case 2", "J differs from I ∩ K");
    for (const Subspace* x : {&i, &k}) {
      const QuotientAlgebra q = quotient_by_ideal(end().algebra, *x);
      const AlgebraAnalysis qa = analyze(q.algebra, budget_);
      if (!qa.radical.radical.is_zero() || qa.blocks.size() != 1)
        throw AssertionFailure("biuniform case 2", "I or K is not maximal");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

BridgeMorphism spectral_bridge(const Module& m, const AlgebraAnalysis& an) {
  return BridgeContext(m, an).spectral_bridge();
}
BridgeMorphism dual_bridge(const Module& m, const AlgebraAnalysis& an) { return BridgeContext(m, an).dual_bridge(); }
BridgeMorphism chi_bridge(const Module& m, const AlgebraAnalysis& an) { return BridgeContext(m, an).chi_bridge(); }
BridgeMorphism bigphi_bridge(const Module& m, const AlgebraAnalysis& an) {
  return BridgeContext(m, an).bigphi_bridge();
}
BridgeMorphism pair_bridge(const Module& m, const AlgebraAnalysis& an) { return BridgeContext(m, an).pair_bridge(); }
BridgeMorphism step1_psi(const Module& m, const AlgebraAnalysis& an) { return BridgeContext(m, an).step1_psi(); }
BridgeMorphism top_bridge(const Module& m, const AlgebraAnalysis& an) { return BridgeContext(m, an).top_bridge(); }
IdealPair ideal_pair(const Module& m, const AlgebraAnalysis& an) { return BridgeContext(m, an).ideal_pair(); }
BoundsReport bounds_report(const Module& m, const AlgebraAnalysis& an) { return BridgeContext(m, an).bounds(); }
BiuniformClass biuniform_classify(const Module& m, const AlgebraAnalysis& an) {
  return BridgeContext(m, an).biuniform_classify();
}

}  // namespace semiloc
