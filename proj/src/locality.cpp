#include "semiloc/locality.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "semiloc/errors.hpp"

namespace semiloc {

std::string to_string(LocalityVerdict v) {
  switch (v) {
    case LocalityVerdict::Local: return "local";
    case LocalityVerdict::NotLocal: return "not-local";
    case LocalityVerdict::UnknownBudget: return "unknown-budget";
  }
  return "?";
}

std::string to_string(LocalityMethod m) {
  return m == LocalityMethod::Exhaustive ? "exhaustive" : "sampled";
}

std::uint64_t element_count(Residue p, std::size_t d) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    n *= p;
  }
  return n;
}

namespace {

bool is_witness(const AlgebraMorphism& phi, std::span<const Residue> r) {
  return phi.codomain().is_unit(phi.apply(r)) && !phi.domain().is_unit(r);
}

// Visits every element of GF(p)^n in base-p counter order (coordinate 0
// fastest) together with its image under m. Stops when visit returns true.
template <class Visit>
std::uint64_t enumerate_with_image(const FpMatrix& m, std::size_t n, Residue p, Visit&& visit) {
  Vec r(n, 0);
  Vec img(m.rows(), 0);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(m.column(i));
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (visit(static_cast<const Vec&>(r), static_cast<const Vec&>(img))) return visited;
    std::size_t i = 0;
    for (; i < n; ++i) {
      r[i] = r[i] + 1 == p ? 0 : r[i] + 1;
      for (std::size_t k = 0; k < img.size(); ++k) img[k] = add_mod(img[k], cols[i][k], p);
      if (r[i] != 0) break;
    }
    if (i == n) return visited;
  }
}

}  // namespace

LocalityReport LocalityReport::make(const AlgebraMorphism& phi, LocalityVerdict verdict,
                                    std::optional<Vec> witness, std::uint64_t checked,
                                    LocalityMethod method) {
  if ((verdict == LocalityVerdict::NotLocal) != witness.has_value())
    throw AssertionFailure("locality report", "witness present iff verdict is not-local");
  if (witness && !is_witness(phi, *witness))
    throw AssertionFailure("locality report", "witness does not re-verify");
  if (verdict == LocalityVerdict::Local && method != LocalityMethod::Exhaustive)
    throw AssertionFailure("locality report", "sampling cannot certify locality");
  LocalityReport r;
  r.verdict = verdict;
  r.witness = std::move(witness);
  r.elements_checked = checked;
  r.method = method;
  return r;
}

LocalityReport is_local(const AlgebraMorphism& phi, const LocalityOptions& options) {
  const Algebra& r = phi.domain();
  const Algebra& s = phi.codomain();
  const Residue p = r.p();
  const std::size_t n = r.dim();
  if (element_count(p, n) <= options.enumeration_budget) {
    std::optional<Vec> witness;
    const std::uint64_t checked =
        enumerate_with_image(phi.matrix(), n, p, [&](const Vec& x, const Vec& img) {
          if (s.is_unit(img) && !r.is_unit(x)) {
            witness = x;
            return true;
          }
          return false;
        });
    return LocalityReport::make(phi, witness ? LocalityVerdict::NotLocal : LocalityVerdict::Local,
                                std::move(witness), checked, LocalityMethod::Exhaustive);
  }
  std::mt19937_64 rng(options.seed);
  Vec x(n);
  for (std::uint64_t t = 0; t < options.sampling_budget; ++t) {
    for (auto& v : x) v = static_cast<Residue>(rng() % p);
    if (is_witness(phi, x))
      return LocalityReport::make(phi, LocalityVerdict::NotLocal, x, t + 1, LocalityMethod::Sampled);
  }
  return LocalityReport::make(phi, LocalityVerdict::UnknownBudget, std::nullopt, options.sampling_budget,
                              LocalityMethod::Sampled);
}

// ---------------------------------------------------------------------------

namespace {

Subspace image_of(const AlgebraMorphism& phi, const Subspace& u) {
  std::vector<Vec> imgs;
  for (std::size_t i = 0; i < u.dim(); ++i) imgs.push_back(phi.apply(u.basis().row(i)));
  return Subspace::span(phi.codomain().p(), phi.codomain().dim(), imgs, phi.codomain().id());
}

bool certified_local(const LocalityReport& r) { return r.verdict == LocalityVerdict::Local; }

}  // namespace

CompositionCalculus lemma21_suite(const AlgebraMorphism& phi, const std::optional<AlgebraMorphism>& psi,
                                  const LocalityOptions& options) {
  CompositionCalculus out{is_local(phi, options), std::nullopt, std::nullopt, {}};
  const bool phi_local = certified_local(out.phi);

  ClauseResult c1{"kernel in radical", false, {}};
  if (phi_local) {
    c1.checked = true;
    if (!radical(phi.domain(), options.enumeration_budget).radical.contains(phi.kernel()))
      throw AssertionFailure(c1.clause, "ker(phi) is not contained in J(R)");
  }
  out.clauses.push_back(c1);

  ClauseResult c2{"onto image of radical", false, {}};
  if (phi_local && phi.is_onto()) {
    c2.checked = true;
    const Subspace jr = radical(phi.domain(), options.enumeration_budget).radical;
    const Subspace js = radical(phi.codomain(), options.enumeration_budget).radical;
    if (!(image_of(phi, jr) == js)) throw AssertionFailure(c2.clause, "phi(J(R)) != J(S)");
    for (std::size_t n : {2u, 3u}) {
      LocalityOptions lifted = options;
      lifted.sampling_budget = options.lift_sampling_budget;
      const LocalityReport lr = is_local(lift(phi, n), lifted);
      if (lr.verdict == LocalityVerdict::NotLocal)
        throw AssertionFailure(c2.clause, "M_" + std::to_string(n) + "(phi) is not local");
      c2.detail += (c2.detail.empty() ? "" : " ") + std::string("M") + std::to_string(n) + "=" +
                   to_string(lr.verdict);
    }
  }
  out.clauses.push_back(c2);

  if (!psi) return out;
  if (!(psi->domain() == phi.codomain())) throw OwnerMismatch("lemma21_suite: psi does not start at S");
  out.psi = is_local(*psi, options);
  const AlgebraMorphism comp = compose(*psi, phi);
  out.composite = is_local(comp, options);

  ClauseResult c3{"composition of local morphisms", false, {}};
  if (phi_local && certified_local(*out.psi)) {
    c3.checked = true;
    if (out.composite->verdict == LocalityVerdict::NotLocal)
      throw AssertionFailure(c3.clause, "psi∘phi is not local");
    if (out.composite->certain() && !certified_local(*out.composite))
      throw AssertionFailure(c3.clause, "psi∘phi is not local");
  }
  out.clauses.push_back(c3);

  // Contrapositive: a witness against phi is a witness against psi∘phi,
  // because ring morphisms preserve units.
  ClauseResult c4{"first factor of a local composite", false, {}};
  if (out.phi.witness) {
    c4.checked = true;
    if (!is_witness(comp, *out.phi.witness))
      throw AssertionFailure(c4.clause, "witness against phi does not refute psi∘phi");
    if (certified_local(*out.composite)) throw AssertionFailure(c4.clause, "psi∘phi local but phi is not");
  } else if (certified_local(*out.composite)) {
    c4.checked = true;
    if (out.phi.verdict == LocalityVerdict::NotLocal)
      throw AssertionFailure(c4.clause, "psi∘phi local but phi is not");
  }
  out.clauses.push_back(c4);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool is_field(const Algebra& a) {
  if (a.dim() == 0 || !a.is_commutative()) return false;
  const AlgebraAnalysis an = analyze(a);
  return an.radical.radical.is_zero() && an.blocks.size() == 1 && an.blocks[0].n == 1;
}

std::vector<std::size_t> support_of(const ProductAlgebra& target, std::span<const Residue> x,
                                    const std::vector<std::size_t>& among) {
  std::vector<std::size_t> out;
  for (std::size_t i : among) {
    const std::size_t o = target.offsets[i];
    for (std::size_t c = 0; c < target.factors[i].dim(); ++c)
      if (x[o + c] != 0) {
        out.push_back(i);
        break;
      }
  }
  return out;
}

std::vector<std::size_t> all_factors(const ProductAlgebra& target) {
  std::vector<std::size_t> v(target.factors.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// Zero outside the factors in `keep`.
Vec restrict_to(const ProductAlgebra& target, std::span<const Residue> x, const std::vector<std::size_t>& keep) {
  Vec out(x.size(), 0);
  for (std::size_t i : keep)
    for (std::size_t c = 0; c < target.factors[i].dim(); ++c)
      out[target.offsets[i] + c] = x[target.offsets[i] + c];
  return out;
}

struct MinimalSupport {
  std::size_t size = 0;
  Vec element;  // in the coordinates of the enumerated space
  std::uint64_t checked = 0;
};

// Least nonzero support among elements u·M (u over GF(p)^rows), ties broken
// lexicographically on u.
MinimalSupport least_support(const ProductAlgebra& target, const FpMatrix& rows_basis,
                             const std::vector<std::size_t>& among, std::uint64_t budget, bool& exhaustive,
                             std::uint64_t seed) {
  const Residue p = target.algebra.p();
  const std::size_t n = rows_basis.rows();
  MinimalSupport best;
  auto consider = [&](const Vec& u, const Vec& img) {
    const std::size_t s = support_of(target, img, among).size();
    if (s == 0) return;
    if (best.size == 0 || s < best.size || (s == best.size && u < best.element)) {
      best.size = s;
      best.element = u;
    }
  };
  const FpMatrix t = rows_basis.transpose();
  if (element_count(p, n) <= budget) {
    exhaustive = true;
    best.checked = enumerate_with_image(t, n, p, [&](const Vec& u, const Vec& img) {
      consider(u, img);
      return false;
    });
    return best;
  }
  exhaustive = false;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec u = unit_vector(n, i);
    consider(u, t.apply(u));
  }
  Vec u(n);
  for (std::uint64_t k = 0; k < budget; ++k) {
    for (auto& v : u) v = static_cast<Residue>(rng() % p);
    consider(u, t.apply(u));
  }
  best.checked = budget + n;
  return best;
}

}  // namespace

void require_field_product(const AlgebraMorphism& phi, const ProductAlgebra& target) {
  if (!(phi.codomain() == target.algebra))
    throw CodomainNotFieldProduct("codomain is not the given product algebra");
  for (std::size_t i = 0; i < target.factors.size(); ++i)
    if (!is_field(target.factors[i]))
      throw CodomainNotFieldProduct("factor " + std::to_string(i) + " is not a field");
}

std::vector<std::size_t> support(const ProductAlgebra& target, std::span<const Residue> image) {
  target.algebra.check_element(image);
  return support_of(target, image, all_factors(target));
}

SupportProfile support_profile(const AlgebraMorphism& phi, const ProductAlgebra& target,
                               const LocalityOptions& options) {
  require_field_product(phi, target);
  SupportProfile out;
  out.factors = target.factors.size();
  bool exhaustive = true;
  const MinimalSupport ms = least_support(target, phi.matrix().transpose(), all_factors(target),
                                          options.enumeration_budget, exhaustive, options.seed);
  out.least_support = ms.size;
  out.least_element = ms.element;
  out.approximate = !exhaustive;
  out.elements_checked = ms.checked;
  return out;
}

namespace {

struct Induction {
  const ProductAlgebra& target;
  const LocalityOptions& options;
  std::vector<std::size_t> selected;
  std::size_t splits = 0;
  std::size_t reductions = 0;

  // u: subalgebra of the product with unit e, living on the factors `among`.
  void run(const Subspace& u, const Vec& e, const std::vector<std::size_t>& among, std::size_t depth) {
    if (depth > 2 * target.factors.size() + 2)
      throw AssertionFailure("support induction", "recursion deeper than the factor count allows");
    if (among.size() == 1) {
      selected.push_back(among[0]);
      return;
    }
    const Algebra& s = target.algebra;
    const Subalgebra sub = subalgebra_on(s, u, e);
    // Idempotents of a product of fields are central, so any block split of
    // the (reduced, commutative) image splits the factor set.
    const SemisimpleDecomposition dec = wedderburn_decompose(sub.algebra);
    if (dec.blocks.size() > 1) {
      ++splits;
      const Vec e1 = sub.to_ambient(dec.blocks[0].central_idempotent);
      const Vec e2 = s.sub(e, e1);
      for (const Vec& f : {e1, e2}) {
        std::vector<Vec> span;
        for (std::size_t i = 0; i < u.dim(); ++i) span.push_back(s.multiply(f, u.basis().row(i)));
        run(Subspace::span(s.p(), s.dim(), span, s.id()), f, support_of(target, f, among), depth + 1);
      }
      return;
    }
    bool exhaustive = true;
    const MinimalSupport ms =
        least_support(target, u.basis(), among, options.enumeration_budget, exhaustive, options.seed);
    if (!exhaustive) throw BudgetExceeded("producte_decompose: minimal-support search exceeds the budget");
    if (ms.size == among.size()) {
      selected.push_back(among[0]);
      return;
    }
    // r has minimal support, so it lies in J; I = {x : supp x ⊆ supp r} is
    // dropped by projecting onto the remaining factors.
    ++reductions;
    const Vec r = u.combination(ms.element);
    const Subspace j = radical(sub.algebra, options.enumeration_budget).radical;
    if (!j.contains(sub.from_ambient(r)))
      throw AssertionFailure("support induction", "minimal-support element is not in the radical");
    const std::vector<std::size_t> supp = support_of(target, r, among);
    std::vector<std::size_t> rest;
    for (std::size_t i : among)
      if (!std::binary_search(supp.begin(), supp.end(), i)) rest.push_back(i);
    std::vector<Vec> span;
    for (std::size_t i = 0; i < u.dim(); ++i) span.push_back(restrict_to(target, u.basis().row(i), rest));
    run(Subspace::span(s.p(), s.dim(), span, s.id()), restrict_to(target, e, rest), rest, depth + 1);
  }
};

std::size_t block_count_check(const Algebra& r, std::vector<std::size_t> degrees, std::uint64_t budget) {
  const AlgebraAnalysis an = analyze(r, budget);
  std::vector<std::size_t> ks;
  for (const auto& b : an.blocks) {
    if (b.n != 1) throw AssertionFailure("producte", "R/J(R) has a matrix block");
    ks.push_back(b.k);
  }
  std::sort(ks.begin(), ks.end());
  std::sort(degrees.begin(), degrees.end());
  if (ks != degrees) throw AssertionFailure("producte", "R/J(R) blocks do not match the selected residue fields");
  return an.blocks.size();
}

bool is_maximal_ideal(const Algebra& r, const Subspace& ideal, std::uint64_t budget) {
  if (ideal.dim() == r.dim() || !is_two_sided_ideal(r, ideal)) return false;
  const QuotientAlgebra q = quotient_by_ideal(r, ideal);
  const AlgebraAnalysis an = analyze(q.algebra, budget);
  return an.radical.radical.is_zero() && an.blocks.size() == 1;
}

}  // namespace

ProducteResult producte_decompose(const AlgebraMorphism& phi, const ProductAlgebra& target,
                                  const LocalityOptions& options) {
  require_field_product(phi, target);
  const LocalityReport loc = is_local(phi, options);
  if (loc.verdict != LocalityVerdict::Local)
    throw NotLocal("producte_decompose: locality is " + to_string(loc.verdict));
  const Algebra& r = phi.domain();
  const Algebra& s = target.algebra;

  Induction ind{target, options, {}, 0, 0};
  ind.run(phi.image(), s.unit(), support_of(target, s.unit(), all_factors(target)), 0);
  std::sort(ind.selected.begin(), ind.selected.end());

  std::vector<Algebra> factors;
  FpMatrix stacked(r.p(), 0, r.dim());
  std::vector<Subspace> maximal;
  std::vector<std::size_t> degrees;
  for (std::size_t i : ind.selected) {
    factors.push_back(target.factors[i]);
    const AlgebraMorphism tau = compose(target.projections[i], phi);
    stacked = stacked.vstack(tau.matrix());
    maximal.push_back(tau.kernel());
    degrees.push_back(tau.image().dim());
  }
  const ProductAlgebra sel = direct_product(factors);
  AlgebraMorphism assembled = AlgebraMorphism::make(r, sel.algebra, stacked);
  const Subspace j = radical(r, options.enumeration_budget).radical;

  if (!(assembled.kernel() == j)) throw AssertionFailure("producte", "assembled kernel differs from J(R)");
  LocalityReport aloc = is_local(assembled, options);
  if (aloc.verdict != LocalityVerdict::Local)
    throw AssertionFailure("producte", "assembled morphism is not certified local");
  const std::size_t blocks = block_count_check(r, degrees, options.enumeration_budget);
  if (blocks != ind.selected.size()) throw AssertionFailure("producte", "m differs from the block count of R/J(R)");
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    if (!is_maximal_ideal(r, maximal[a], options.enumeration_budget))
      throw AssertionFailure("producte", "ker tau is not a maximal ideal");
    for (std::size_t b = 0; b < a; ++b)
      if (maximal[a] == maximal[b]) throw AssertionFailure("producte", "repeated maximal ideal");
  }
  return ProducteResult{ind.selected, std::move(maximal), std::move(degrees), std::move(assembled),
                        std::move(aloc),  j,      ind.splits, ind.reductions};
}

DichotomyResult dos_classify(const AlgebraMorphism& phi, const ProductAlgebra& target,
                             const LocalityOptions& options) {
  if (target.factors.size() != 2) throw CodomainNotFieldProduct("dos_classify: expected two factors");
  const ProducteResult pr = producte_decompose(phi, target, options);
  DichotomyResult out;
  out.radical = pr.radical;
  out.maximal_ideals = pr.maximal_ideals;
  if (pr.m() == 1) {
    out.which_case = 1;
    out.local_factor = pr.selected[0];
    const LocalityReport t = is_local(compose(target.projections[out.local_factor], phi), options);
    if (t.verdict != LocalityVerdict::Local) throw AssertionFailure("dichotomy", "selected tau is not local");
    if (!(pr.maximal_ideals[0] == pr.radical)) throw AssertionFailure("dichotomy", "R is not local");
  } else {
    out.which_case = 2;
    if (!(phi.kernel() == pr.radical)) throw AssertionFailure("dichotomy", "J(R) != ker(phi)");
  }
  return out;
}

CampsDicks camps_dicks_check(const AlgebraMorphism& phi, std::uint64_t budget) {
  CampsDicks out;
  out.codim_domain = ring_codim(phi.domain(), budget);
  out.codim_codomain = ring_codim(phi.codomain(), budget);
  out.holds = out.codim_domain <= out.codim_codomain;
  return out;
}

std::optional<FieldProductPresentation> to_field_product(const AlgebraAnalysis& an) {
  if (an.blocks.empty()) return std::nullopt;
  for (const auto& b : an.blocks)
    if (b.n != 1) return std::nullopt;
  const Algebra& s = an.quotient.algebra;
  std::vector<Subalgebra> subs;
  std::vector<Algebra> fields;
  for (const auto& blk : an.decomposition.blocks) {
    std::vector<Vec> span;
    for (std::size_t i = 0; i < s.dim(); ++i) span.push_back(s.multiply(blk.central_idempotent, s.basis_vector(i)));
    subs.push_back(subalgebra_on(s, Subspace::span(s.p(), s.dim(), span, s.id()), blk.central_idempotent));
    fields.push_back(subs.back().algebra);
  }
  ProductAlgebra prod = direct_product(fields);
  const Algebra& a = an.algebra;
  FpMatrix m(a.p(), prod.algebra.dim(), a.dim());
  for (std::size_t t = 0; t < a.dim(); ++t) {
    const Vec q = an.quotient.projection.apply(a.basis_vector(t));
    for (std::size_t b = 0; b < subs.size(); ++b) {
      const Vec c = subs[b].from_ambient(s.multiply(an.decomposition.blocks[b].central_idempotent, q));
      for (std::size_t i = 0; i < c.size(); ++i) m(prod.offsets[b] + i, t) = c[i];
    }
  }
  AlgebraMorphism phi = AlgebraMorphism::make(a, prod.algebra, std::move(m));
  return FieldProductPresentation{std::move(prod), std::move(phi)};
}

}  // namespace semiloc
