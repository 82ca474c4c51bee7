#include "semiloc/module_structure.hpp"

#include "semiloc/errors.hpp"

namespace semiloc {

AlgebraAnalysis opposite_analysis(const AlgebraAnalysis& an) {
  Algebra op = opposite(an.algebra);
  RadicalReport rad = an.radical;
  rad.radical = rad.radical.with_owner(op.id());
  QuotientAlgebra q = quotient_by_ideal(op, rad.radical);
  return AlgebraAnalysis{op, std::move(rad), std::move(q), an.decomposition, an.blocks};
}

std::vector<std::size_t> semisimple_multiplicities(const Module& m, const AlgebraAnalysis& an,
                                                   const Subspace& span, const Subspace& below) {
  std::vector<std::size_t> out;
  for (const auto& b : an.blocks) {
    const FpMatrix rho = m.action_of(b.central);
    std::vector<Vec> imgs;
    for (std::size_t r = 0; r < span.dim(); ++r) imgs.push_back(rho.apply_left(span.basis().row(r)));
    const std::size_t d = Subspace::span(m.p(), m.dim(), imgs).sum(below).dim() - below.dim();
    const std::size_t simple = b.n * b.k;
    if (d % simple != 0) throw Error("semisimple_multiplicities: isotypic dimension not divisible by simple dimension");
    out.push_back(d / simple);
  }
  return out;
}

StructuralSeries structural_series(const Module& m, const AlgebraAnalysis& an) {
  if (!(m.algebra() == an.algebra)) throw OwnerMismatch("structural_series: analysis of a different algebra");
  const Subspace& j = an.radical.radical;
  const std::size_t d = m.dim();
  StructuralSeries s;
  FpMatrix stacked_t(m.p(), 0, d);  // rows of rho(x)^T for x in J
  FpMatrix stacked(m.p(), 0, d);    // rows of rho(x)
  for (std::size_t r = 0; r < j.dim(); ++r) {
    const FpMatrix rho = m.action_of(j.basis().row(r));
    stacked = stacked.vstack(rho);
    stacked_t = stacked_t.vstack(rho.transpose());
  }
  s.socle = d == 0 ? m.zero_subspace() : Subspace(reduce(stacked_t).kernel, m.id());
  s.radical = Subspace(stacked, m.id());
  s.socle_multiplicities = semisimple_multiplicities(m, an, s.socle, m.zero_subspace());
  s.top_multiplicities = semisimple_multiplicities(m, an, m.full_subspace(), s.radical);
  for (std::size_t i = 0; i < an.blocks.size(); ++i) {
    s.socle_length += s.socle_multiplicities[i];
    s.top_length += s.top_multiplicities[i];
  }
  return s;
}

GoldieDims goldie_dims(const Module& m, const AlgebraAnalysis& an) {
  const StructuralSeries s = structural_series(m, an);
  return GoldieDims{s.socle_length, s.top_length};
}

Position submodule_position(const Module& m, const Subspace& u, const StructuralSeries& s) {
  if (!is_submodule(m, u)) throw NotASubmodule();
  return Position{u.contains(s.socle), s.radical.contains(u)};
}

Position submodule_position(const Module& m, const Subspace& u, const AlgebraAnalysis& an) {
  return submodule_position(m, u, structural_series(m, an));
}

SubmoduleData principal_projective(const AlgebraAnalysis& an, std::size_t block) {
  const Algebra& a = an.algebra;
  const Vec& f = an.blocks.at(block).primitive;
  const Module reg = regular_module(a);
  std::vector<Vec> span;
  for (std::size_t i = 0; i < a.dim(); ++i) span.push_back(a.multiply(f, a.basis_vector(i)));
  return submodule(reg, Subspace::span(a.p(), a.dim(), span, reg.id()));
}

ProjectiveCover projective_cover(const Module& m, const AlgebraAnalysis& an) {
  const Algebra& a = an.algebra;
  const Residue p = a.p();
  const StructuralSeries series = structural_series(m, an);
  std::vector<Module> summands;
  std::vector<FpMatrix> pieces;
  std::vector<std::size_t> blocks;
  Subspace covered = series.radical;
  for (std::size_t i = 0; i < an.blocks.size(); ++i) {
    if (series.top_multiplicities[i] == 0) continue;
    const SubmoduleData fa = principal_projective(an, i);
    const FpMatrix rho_f = m.action_of(an.blocks[i].primitive);
    std::size_t chosen = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
      // candidates: the spanning vectors e_r·f of M·f
      const Vec v = rho_f.row_vec(r);
      if (covered.contains(v)) continue;
      covered = covered.sum(submodule_generated(m, {v}));
      FpMatrix piece(p, fa.module.dim(), m.dim());
      for (std::size_t s = 0; s < fa.module.dim(); ++s) {
        const Vec img = m.act(v, fa.inclusion.matrix().row(s));
        for (std::size_t c = 0; c < m.dim(); ++c) piece(s, c) = img[c];
      }
      summands.push_back(fa.module);
      pieces.push_back(std::move(piece));
      blocks.push_back(i);
      ++chosen;
    }
    if (chosen != series.top_multiplicities[i])
      throw CoverViolation("projective_cover: generator count does not match the top multiplicity");
  }
  const DirectSum p_sum = direct_sum(summands, a);
  FpMatrix pi_matrix(p, 0, m.dim());
  for (const auto& piece : pieces) pi_matrix = pi_matrix.vstack(piece);
  ModuleHom pi = ModuleHom::make(p_sum.module, m, std::move(pi_matrix));
  if (!pi.is_surjective()) throw CoverViolation("projective_cover: map is not onto");
  Subspace kernel = pi.kernel();
  if (!structural_series(p_sum.module, an).radical.contains(kernel))
    throw CoverViolation("projective_cover: kernel is not superfluous");
  return ProjectiveCover{p_sum.module, std::move(pi), std::move(kernel), std::move(blocks)};
}

bool cyclic_extension_property(const Module& e, const std::vector<Vec>& elements) {
  const Algebra& a = e.algebra();
  const Module reg = regular_module(a);
  for (const Vec& x : elements) {
    std::vector<Vec> span;
    for (std::size_t i = 0; i < a.dim(); ++i) span.push_back(a.multiply(x, a.basis_vector(i)));
    const SubmoduleData ideal = submodule(reg, Subspace::span(a.p(), a.dim(), span, reg.id()));
    const std::size_t homs = HomSpace(ideal.module, e).dim();
    // restrictions of the homs A -> E, y -> v·y, to x·A
    FpMatrix restricted(a.p(), e.dim(), ideal.module.dim() * e.dim());
    for (std::size_t s = 0; s < e.dim(); ++s) {
      const Vec v = unit_vector(e.dim(), s);
      for (std::size_t r = 0; r < ideal.module.dim(); ++r) {
        const Vec img = e.act(v, ideal.inclusion.matrix().row(r));
        for (std::size_t c = 0; c < e.dim(); ++c) restricted(s, r * e.dim() + c) = img[c];
      }
    }
    if (rank(restricted) != homs) return false;
  }
  return true;
}

InjectiveEnvelope injective_envelope(const Module& m, const AlgebraAnalysis& an, bool baer_check) {
  const AlgebraAnalysis op = opposite_analysis(an);
  const Module dm = dual_module(m, op.algebra);
  const ProjectiveCover pc = projective_cover(dm, op);
  const Module e = dual_module(pc.cover, an.algebra);
  ModuleHom iota = ModuleHom::make(m, e, pc.pi.matrix().transpose());
  if (!iota.is_injective()) throw CoverViolation("injective_envelope: map is not injective");
  if (!iota.image().contains(structural_series(e, an).socle))
    throw CoverViolation("injective_envelope: image is not essential");
  if (baer_check) {
    std::vector<Vec> elements;
    for (std::size_t i = 0; i < an.algebra.dim(); ++i) elements.push_back(an.algebra.basis_vector(i));
    for (const auto& b : an.blocks) elements.push_back(b.primitive);
    if (!cyclic_extension_property(e, elements))
      throw CoverViolation("injective_envelope: cyclic extension test failed");
  }
  return InjectiveEnvelope{e, std::move(iota)};
}

TopComplement build_top_complement(const Module& m, const AlgebraAnalysis& an) {
  const Algebra& a = an.algebra;
  const StructuralSeries series = structural_series(m, an);
  TopComplement out{Module::zero(a), 0, std::vector<std::size_t>(an.blocks.size(), 0)};
  for (std::size_t i = 0; i < an.blocks.size(); ++i) {
    const std::size_t ni = an.blocks[i].n;
    out.free_rank = std::max(out.free_rank, (series.top_multiplicities[i] + ni - 1) / ni);
  }
  std::vector<Module> pieces;
  for (std::size_t i = 0; i < an.blocks.size(); ++i) {
    out.added[i] = out.free_rank * an.blocks[i].n - series.top_multiplicities[i];
    if (out.added[i] == 0) continue;
    // A/(1 - f_i)A, whose top is the simple of block i
    const Vec r = a.sub(a.unit(), an.blocks[i].primitive);
    const Presentation pres = module_from_presentation(a, 1, {{r}});
    for (std::size_t c = 0; c < out.added[i]; ++c) pieces.push_back(pres.module);
  }
  if (!pieces.empty()) out.complement = direct_sum(pieces, a).module;
  const Module total = direct_sum(m, out.complement).module;
  const StructuralSeries ts = structural_series(total, an);
  for (std::size_t i = 0; i < an.blocks.size(); ++i)
    if (ts.top_multiplicities[i] != out.free_rank * an.blocks[i].n)
      throw CoverViolation("build_top_complement: top of M ⊕ N is not free");
  return out;
}

}  // namespace semiloc
