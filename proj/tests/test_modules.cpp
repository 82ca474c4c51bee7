#include "doctest.h"
#include "semiloc/errors.hpp"
#include "semiloc/generators.hpp"
#include "semiloc/module_structure.hpp"

using namespace semiloc;

namespace {

// UT2(GF(2)) on the basis E11, E12, E22.
struct Ut2 {
  Algebra a = gen_triangular(2, 2);
  AlgebraAnalysis an = analyze(a);
  Vec e11{1, 0, 0}, e12{0, 1, 0}, e22{0, 0, 1};
  Module simple(std::size_t block) const { return simple_module(an, block); }
};

std::size_t block_of(const AlgebraAnalysis& an, const Module& simple) {
  const auto s = structural_series(simple, an);
  for (std::size_t i = 0; i < s.top_multiplicities.size(); ++i)
    if (s.top_multiplicities[i]) return i;
  return SIZE_MAX;
}

}  // namespace

TEST_CASE("module_from_presentation: spec examples") {
  auto a = truncated_polynomial(3, 2);
  auto free = module_from_presentation(a, 2, {{}, {}});
  CHECK(free.module.dim() == 4);
  auto simple = module_from_presentation(a, 1, {{Vec{0, 1}}});
  CHECK(simple.module.dim() == 1);
  CHECK(simple.epi.is_surjective());
  Ut2 u;
  CHECK(module_from_presentation(u.a, 1, {{u.e11}}).module.dim() == 1);
  CHECK(module_from_presentation(u.a, 1, {{u.e22}}).module.dim() == 2);
}

TEST_CASE("regular_module: spec examples") {
  CHECK(regular_module(field_algebra(2, 1)).dim() == 1);
  auto a = truncated_polynomial(3, 2);
  auto an = analyze(a);
  auto s = structural_series(regular_module(a), an);
  CHECK(s.socle == Subspace::span(3, 2, {{0, 1}}));
  CHECK(s.radical == s.socle);
  CHECK(s.socle_length == 1);
  CHECK(s.top_length == 1);
  auto m2 = full_matrix_algebra(2, 2);
  auto m2s = structural_series(regular_module(m2), analyze(m2));
  CHECK(m2s.socle.is_full());
  CHECK(m2s.socle_length == 2);
}

TEST_CASE("hom_basis: spec examples") {
  Ut2 u;
  auto reg = regular_module(u.a);
  HomSpace end(reg, reg);
  CHECK(end.coordinates(FpMatrix::identity(2, 3)).has_value());
  auto s0 = u.simple(0), s1 = u.simple(1);
  CHECK(hom_basis(s0, s1).empty());
  CHECK(hom_basis(s1, s0).empty());
  CHECK(hom_basis(s0, s0).size() == 1);
}

TEST_CASE("endo_algebra: spec examples") {
  auto g3 = field_algebra(3, 1);
  auto an3 = analyze(g3);
  CHECK(endo_algebra(regular_module(g3)).algebra.dim() == 1);
  auto a = truncated_polynomial(3, 2);
  auto e = endo_algebra(regular_module(a));
  CHECK(e.algebra.dim() == 2);
  CHECK(e.algebra.is_commutative());
  CHECK(radical(e.algebra).radical.dim() == 1);
  auto g2 = field_algebra(2, 1);
  auto s = regular_module(g2);
  auto ss = endo_algebra(direct_sum(s, s).module);
  CHECK(ss.algebra.dim() == 4);
  CHECK(radical(ss.algebra).radical.is_zero());
  CHECK(ring_codim(ss.algebra) == 2);
}

TEST_CASE("structural_series and goldie_dims: spec examples") {
  auto a = truncated_polynomial(3, 3);
  auto an = analyze(a);
  auto s = structural_series(regular_module(a), an);
  CHECK(s.socle == Subspace::span(3, 3, {{0, 0, 1}}));
  CHECK(s.radical == Subspace::span(3, 3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(s.socle_length == 1);
  CHECK(s.top_length == 1);
  auto g = goldie_dims(regular_module(a), an);
  CHECK(g.dim == 1);
  CHECK(g.codim == 1);

  Ut2 u;
  auto us = structural_series(regular_module(u.a), u.an);
  CHECK(us.top_length == 2);
  CHECK(us.socle_length == 2);
  CHECK(us.socle == Subspace::span(2, 3, {u.e12, u.e22}));

  auto s0 = u.simple(0);
  auto gs = goldie_dims(s0, u.an);
  CHECK(gs.dim == 1);
  CHECK(gs.codim == 1);
  auto sum = direct_sum({u.simple(0), u.simple(1), u.simple(1)}, u.a).module;
  auto gsum = goldie_dims(sum, u.an);
  CHECK(gsum.dim == 3);
  CHECK(gsum.codim == 3);
  // semisimple M: socle = M, radical = 0
  auto ss = structural_series(sum, u.an);
  CHECK(ss.socle.is_full());
  CHECK(ss.radical.is_zero());
}

TEST_CASE("submodule_position: spec examples") {
  auto a = truncated_polynomial(3, 2);
  auto an = analyze(a);
  auto m = regular_module(a);
  auto full = submodule_position(m, m.full_subspace(), an);
  CHECK(full.essential);
  CHECK_FALSE(full.superfluous);
  auto zero = submodule_position(m, m.zero_subspace(), an);
  CHECK_FALSE(zero.essential);
  CHECK(zero.superfluous);
  auto x = submodule_position(m, Subspace::span(3, 2, {{0, 1}}), an);
  CHECK(x.essential);
  CHECK(x.superfluous);
  Ut2 u;
  auto reg = regular_module(u.a);
  CHECK_THROWS_AS(submodule_position(reg, Subspace::span(2, 3, {u.e11}), u.an),
                  NotASubmodule);
}

TEST_CASE("projective_cover: spec examples") {
  auto a = truncated_polynomial(3, 3);
  auto an = analyze(a);
  auto reg = regular_module(a);
  auto pc = projective_cover(reg, an);
  CHECK(pc.cover.dim() == 3);
  CHECK(pc.kernel.is_zero());
  auto simple = simple_module(an, 0);
  auto ps = projective_cover(simple, an);
  CHECK(ps.cover.dim() == 3);
  CHECK(ps.kernel.dim() == 2);
  auto k = submodule(ps.cover, ps.kernel).module;
  CHECK(goldie_dims(k, an).codim == 1);

  Ut2 u;
  auto ureg = regular_module(u.a);
  auto top = quotient_module(ureg, structural_series(ureg, u.an).radical).module;
  auto pt = projective_cover(top, u.an);
  CHECK(pt.cover.dim() == 3);
  CHECK(pt.kernel.dim() == 1);
}

TEST_CASE("injective_envelope: spec examples") {
  auto a = truncated_polynomial(3, 2);
  auto an = analyze(a);
  auto reg = regular_module(a);
  auto e = injective_envelope(reg, an, true);
  CHECK(e.envelope.dim() == 2);
  auto soc = submodule(reg, structural_series(reg, an).socle).module;
  auto es = injective_envelope(soc, an, true);
  CHECK(es.envelope.dim() == 2);
  auto m2 = full_matrix_algebra(2, 2);
  auto an2 = analyze(m2);
  auto simple = simple_module(an2, 0);
  CHECK(simple.dim() == 2);
  CHECK(injective_envelope(simple, an2, true).envelope.dim() == 2);
}

TEST_CASE("build_top_complement: spec examples") {
  auto a = truncated_polynomial(2, 3);
  auto an = analyze(a);
  CHECK(build_top_complement(regular_module(a), an).complement.dim() == 0);
  Ut2 u;
  auto s0 = u.simple(0);
  auto tc = build_top_complement(s0, u.an);
  CHECK(tc.free_rank == 1);
  auto tn = structural_series(tc.complement, u.an);
  CHECK(tn.top_length == 1);
  CHECK(tn.top_multiplicities[block_of(u.an, s0)] == 0);

  auto g2 = field_algebra(2, 1);
  auto prod = direct_product(g2, g2);
  auto pan = analyze(prod.algebra);
  auto first = simple_module(pan, 0);
  auto comp = build_top_complement(first, pan);
  CHECK(comp.complement.dim() == 1);
  CHECK(block_of(pan, comp.complement) == 1);
}

TEST_CASE("restrict_scalars: spec examples") {
  Ut2 u;
  auto reg = regular_module(u.a);
  auto same = restrict_scalars(AlgebraMorphism::identity(u.a), reg);
  CHECK(same.actions() == reg.actions());

  auto g2 = field_algebra(2, 1);
  auto f4 = field_algebra(2, 2);
  auto inc = AlgebraMorphism::make(g2, f4, FpMatrix::from_rows(2, {{1}, {0}}));
  auto m = regular_module(f4);
  auto r = restrict_scalars(inc, m);
  CHECK(r.dim() == 2);
  CHECK(HomSpace(m, m).dim() == 2);
  CHECK(HomSpace(r, r).dim() == 4);

  auto emb = upper_triangular(g2, 2);
  auto m2an = analyze(emb.inclusion.codomain());
  auto simple = simple_module(m2an, 0);
  CHECK(restrict_scalars(emb.inclusion, simple).dim() == 2);
}

TEST_CASE("property: module invariants over generated algebras") {
  Rng rng(41);
  AlgebraCaps caps;
  caps.primes = {2, 3};
  caps.max_dim = 6;
  caps.max_elements = 1u << 10;
  ModuleCaps mcaps;
  mcaps.max_dim = 7;
  for (int t = 0; t < 25; ++t) {
    auto g = random_algebra(rng, caps);
    INFO(g.description);
    auto an = analyze(g.algebra);
    CHECK(goldie_dims(regular_module(g.algebra), an).codim == an.codim());
    // End(A_A) ≅ A via a -> left multiplication by a
    auto reg = regular_module(g.algebra);
    auto end = endo_algebra(reg);
    REQUIRE(end.algebra.dim() == g.algebra.dim());
    FpMatrix align(g.algebra.p(), end.algebra.dim(), g.algebra.dim());
    for (std::size_t i = 0; i < g.algebra.dim(); ++i) {
      FpMatrix x(g.algebra.p(), reg.dim(), reg.dim());
      for (std::size_t r = 0; r < reg.dim(); ++r) {
        Vec row = g.algebra.multiply(g.algebra.basis_vector(i), g.algebra.basis_vector(r));
        for (std::size_t c = 0; c < reg.dim(); ++c) x(r, c) = row[c];
      }
      Vec coords = end.to_coords(x);
      for (std::size_t k = 0; k < coords.size(); ++k) align(k, i) = coords[k];
    }
    auto iso = AlgebraMorphism::make(g.algebra, end.algebra, align);
    CHECK(iso.is_injective());

    for (int k = 0; k < 3; ++k) {
      auto m = random_module(rng, an, mcaps);
      auto n = random_module(rng, an, mcaps);
      INFO(m.description);
      auto gm = goldie_dims(m.module, an), gn = goldie_dims(n.module, an);
      auto gs = goldie_dims(direct_sum(m.module, n.module).module, an);
      CHECK(gs.dim == gm.dim + gn.dim);
      CHECK(gs.codim == gm.codim + gn.codim);
      auto pc = projective_cover(m.module, an);
      CHECK(submodule_position(pc.cover, pc.kernel, an).superfluous);
      auto ie = injective_envelope(m.module, an, m.module.dim() <= 5);
      CHECK(submodule_position(ie.envelope, ie.iota.image(), an).essential);
      CHECK(goldie_dims(ie.envelope, an).dim == gm.dim);
      CHECK(goldie_dims(pc.cover, an).codim == gm.codim);
      auto tc = build_top_complement(m.module, an);
      std::size_t added = 0;
      for (std::size_t i = 0; i < tc.added.size(); ++i) added += tc.added[i] * an.blocks[i].n * an.blocks[i].k;
      CHECK(tc.complement.dim() >= added);
      // injective endomorphisms are automorphisms
      HomSpace hs(m.module, m.module);
      Vec c(hs.dim());
      for (auto& x : c) x = random_residue(rng, g.algebra.p());
      auto f = ModuleHom::make(m.module, m.module, hs.combination(c));
      CHECK(f.is_injective() == f.is_surjective());
    }
  }
}
