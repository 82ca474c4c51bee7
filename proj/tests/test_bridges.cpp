#include "doctest.h"
#include "semiloc/bridges.hpp"
#include "semiloc/errors.hpp"
#include "semiloc/generators.hpp"

using namespace semiloc;

namespace {

std::vector<std::size_t> factor_dims(const BridgeMorphism& b) {
  std::vector<std::size_t> d;
  for (const auto& f : b.target_factors) d.push_back(f.dim());
  return d;
}

Module socle_of_regular(const AlgebraAnalysis& an) {
  const Module reg = regular_module(an.algebra);
  return submodule(reg, structural_series(reg, an).socle).module;
}

}  // namespace

TEST_CASE("spectral_bridge: spec examples") {
  const auto an = analyze(gen_truncated_poly(2, 3));
  BridgeContext inj(regular_module(an.algebra), an);
  const auto b = inj.spectral_bridge();
  CHECK(b.morphism.kernel() == inj.end_analysis().radical.radical);
  CHECK(b.morphism.is_onto());

  const Module simple = simple_module(an, 0);
  const auto bs = spectral_bridge(simple, an);
  CHECK(factor_dims(bs) == std::vector<std::size_t>{1});
  CHECK(bs.morphism.is_injective());

  const auto an2 = analyze(gen_triangular(2, 2));
  const Module ss = direct_sum(simple_module(an2, 0), simple_module(an2, 1)).module;
  BridgeContext c(ss, an2);
  // one UT2 simple is injective, the other embeds in the 2-dim uniserial
  CHECK(c.spectral().envelope.envelope.dim() == 3);
  const Module ssame = direct_sum(simple_module(an, 0), simple_module(an, 0)).module;
  BridgeContext c2(ssame, an);
  CHECK(c2.spectral_bridge().morphism.is_injective());
  CHECK(c2.spectral().envelope.envelope.dim() == 4);
}

TEST_CASE("dual_bridge: spec examples") {
  const auto an = analyze(gen_truncated_poly(3, 3));
  BridgeContext proj(regular_module(an.algebra), an);
  const auto b = proj.dual_bridge();
  CHECK(b.morphism.kernel() == proj.end_analysis().radical.radical);

  const Module top = simple_module(an, 0);
  const auto bt = dual_bridge(top, an);
  CHECK(factor_dims(bt) == std::vector<std::size_t>{1});
  CHECK(bt.morphism.kernel().is_zero());

  const auto m2 = analyze(full_matrix_algebra(2, 2));
  const Module s = simple_module(m2, 0);
  BridgeContext c(direct_sum(s, s).module, m2);
  const auto bd = c.dual_bridge();
  CHECK(bd.morphism.is_injective());
  CHECK(bd.morphism.is_onto());
}

TEST_CASE("ideal_pair: spec examples") {
  const auto an = analyze(gen_truncated_poly(2, 3));
  const auto x = ideal_pair(regular_module(an.algebra), an);
  CHECK(x.essential_kernel.dim() == 1);
  CHECK(x.essential_kernel == x.superfluous_image);

  const auto an2 = analyze(gen_triangular(2, 2));
  const Module ss = direct_sum(simple_module(an2, 0), simple_module(an2, 1)).module;
  const auto y = ideal_pair(ss, an2);
  CHECK(y.essential_kernel.is_zero());
  CHECK(y.superfluous_image.is_zero());
}

TEST_CASE("step1_psi: spec examples") {
  const auto an = analyze(gen_truncated_poly(3, 3));
  BridgeContext free(regular_module(an.algebra), an);
  const auto b = free.step1_psi();
  CHECK(factor_dims(b) == std::vector<std::size_t>{1});
  CHECK(b.morphism.kernel() == free.end_analysis().radical.radical);

  // A/(x^2): F = A, K = (x^2)
  const Module m = module_from_presentation(an.algebra, 1, {{Vec{0, 0, 1}}}).module;
  REQUIRE(m.dim() == 2);
  BridgeContext c(m, an);
  CHECK(c.cover_kernel().module.dim() == 1);
  const auto bm = c.step1_psi();
  CHECK(factor_dims(bm) == std::vector<std::size_t>{1, 1});
  CHECK(is_local(bm.morphism).verdict == LocalityVerdict::Local);

  const auto ut = analyze(gen_triangular(2, 2));
  const Module s0 = simple_module(ut, 0);
  CHECK_THROWS_AS(step1_psi(s0, ut), CoverViolation);
  const auto tc = build_top_complement(s0, ut);
  const Module sum = direct_sum(s0, tc.complement).module;
  const auto bu = step1_psi(sum, ut);
  CHECK(is_local(bu.morphism).verdict == LocalityVerdict::Local);
}

TEST_CASE("chi_bridge: spec examples") {
  const auto an = analyze(gen_truncated_poly(2, 3));
  BridgeContext inj(regular_module(an.algebra), an);
  CHECK(inj.chi_bridge().morphism.matrix() == inj.spectral_bridge().morphism.matrix());

  BridgeContext soc(socle_of_regular(an), an);
  CHECK(soc.spectral().envelope.envelope.dim() == 2);
  CHECK(soc.cokernel().module.dim() == 1);
  const auto chi = soc.chi_bridge();
  CHECK(factor_dims(chi) == std::vector<std::size_t>{1, 1});
  CHECK(is_local(chi.morphism).verdict == LocalityVerdict::Local);
}

TEST_CASE("bigphi_bridge: spec examples") {
  const auto an = analyze(gen_truncated_poly(3, 3));
  BridgeContext proj(regular_module(an.algebra), an);
  CHECK(proj.bigphi_bridge().morphism.matrix() == proj.dual_bridge().morphism.matrix());

  BridgeContext s(simple_module(an, 0), an);
  CHECK(s.cover_kernel().module.dim() == 2);
  const auto phi = s.bigphi_bridge();
  CHECK(factor_dims(phi) == std::vector<std::size_t>{1, 1});
  CHECK(is_local(phi.morphism).verdict == LocalityVerdict::Local);
}

TEST_CASE("pair_bridge: spec examples") {
  const auto ut = analyze(gen_triangular(2, 2));
  const Module ss = direct_sum(simple_module(ut, 0), simple_module(ut, 1)).module;
  CHECK(pair_bridge(ss, ut).morphism.is_injective());

  const auto an = analyze(gen_truncated_poly(2, 3));
  BridgeContext c(regular_module(an.algebra), an);
  const auto ip = c.ideal_pair();
  const auto pb = c.pair_bridge();
  CHECK(pb.morphism.kernel() == ip.essential_kernel.intersection(ip.superfluous_image));
  CHECK(pb.morphism.kernel().dim() == 1);
}

TEST_CASE("bounds_report: spec examples") {
  const auto an = analyze(gen_truncated_poly(2, 3));
  const auto b = bounds_report(simple_module(an, 0), an);
  CHECK(b.codim_end == 1);
  CHECK(b.dim == 1);
  CHECK(b.dim_cokernel == 1);
  CHECK(b.codim == 1);
  CHECK(b.codim_kernel == 1);
  CHECK(b.all());

  const auto g2 = analyze(field_algebra(2, 1));
  const Module s = regular_module(g2.algebra);
  const Module s3 = direct_sum({s, s, s}, g2.algebra).module;
  const auto b3 = bounds_report(s3, g2);
  CHECK(b3.codim_end == 3);
  CHECK(b3.dim == 3);
  CHECK(b3.codim == 3);
  CHECK(b3.b1_equal);  // E(M) = M
  CHECK(b3.b3_equal);  // K = 0
  CHECK_FALSE(b3.b2_equal);
  CHECK(b3.all());

  const auto zero = bounds_report(Module::zero(g2.algebra), g2);
  CHECK(zero.b2_equal);
}

TEST_CASE("biuniform_classify: spec examples") {
  const auto an = analyze(gen_truncated_poly(3, 3));
  const auto u = biuniform_classify(regular_module(an.algebra), an);
  CHECK(u.which_case == 1);
  const auto s = biuniform_classify(simple_module(an, 0), an);
  CHECK(s.which_case == 1);
  CHECK(s.ideals.essential_kernel.is_zero());
  CHECK(s.ideals.superfluous_image.is_zero());
  const auto ut = analyze(gen_triangular(2, 2));
  const Module ss = direct_sum(simple_module(ut, 0), simple_module(ut, 1)).module;
  CHECK_THROWS_AS(biuniform_classify(ss, ut), NotBiuniform);
}

TEST_CASE("endomorphism radical: linear description matches the radical") {
  Rng rng(31);
  AlgebraCaps caps;
  caps.primes = {2, 3};
  caps.max_dim = 5;
  caps.max_elements = 1u << 10;
  ModuleCaps mcaps;
  mcaps.max_dim = 5;
  for (int t = 0; t < 12; ++t) {
    const auto g = random_algebra(rng, caps);
    const auto an = analyze(g.algebra);
    const auto m = random_module(rng, an, mcaps);
    INFO(g.description << " / " << m.description);
    const auto s = spectral_target(m.module, an);
    CHECK(s.target.radical == radical(s.target.end.algebra).radical);
    const auto d = dual_target(m.module, an);
    CHECK(d.target.radical == radical(d.target.end.algebra).radical);
  }
}

TEST_CASE("property: bridge kernels, locality and invertibility") {
  Rng rng(8);
  AlgebraCaps caps;
  caps.primes = {2, 3};
  caps.max_dim = 5;
  caps.max_elements = 1u << 10;
  ModuleCaps mcaps;
  mcaps.max_dim = 5;
  int certified = 0;
  for (int t = 0; t < 20; ++t) {
    const auto g = random_algebra(rng, caps);
    const auto an = analyze(g.algebra);
    const auto m = random_module(rng, an, mcaps);
    INFO(g.description << " / " << m.description);
    BridgeContext c(m.module, an, 100 + t);
    const auto ip = c.ideal_pair();
    const auto sb = c.spectral_bridge();
    const auto db = c.dual_bridge();
    const auto pb = c.pair_bridge();
    CHECK(sb.morphism.kernel() == ip.essential_kernel);
    CHECK(db.morphism.kernel() == ip.superfluous_image);
    CHECK(pb.morphism.kernel() == ip.essential_kernel.intersection(ip.superfluous_image));
    CHECK(c.bounds().all());
    const auto& e = c.end();
    for (int k = 0; k < 6; ++k) {
      const Vec f = random_vector(rng, m.module.p(), e.algebra.dim());
      const FpMatrix x = e.to_matrix(f);
      const std::size_t r = rank(x);
      CHECK(sb.morphism.codomain().is_unit(sb.morphism.apply(f)) == (r == m.module.dim()));
      CHECK(db.morphism.codomain().is_unit(db.morphism.apply(f)) == (r == m.module.dim()));
    }
    if (element_count(m.module.p(), e.algebra.dim()) <= (1u << 12)) {
      ++certified;
      for (const auto& b : {c.chi_bridge(), c.bigphi_bridge(), pb}) {
        INFO(to_string(b.kind));
        CHECK(is_local(b.morphism).verdict == LocalityVerdict::Local);
      }
    }
  }
  CHECK(certified > 5);
}
