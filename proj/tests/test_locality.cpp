#include "doctest.h"
#include "semiloc/errors.hpp"
#include "semiloc/generators.hpp"
#include "semiloc/locality.hpp"

using namespace semiloc;

namespace {

AlgebraMorphism diagonal_into(const ProductAlgebra& prod, const Algebra& a) {
  FpMatrix m(a.p(), 0, a.dim());
  for (std::size_t i = 0; i < prod.factors.size(); ++i) m = m.vstack(FpMatrix::identity(a.p(), a.dim()));
  return AlgebraMorphism::make(a, prod.algebra, m);
}

}  // namespace

TEST_CASE("is_local: spec examples") {
  const Algebra ut = gen_triangular(2, 2);
  const auto proj = analyze(ut).quotient.projection;
  const auto r1 = is_local(proj);
  CHECK(r1.verdict == LocalityVerdict::Local);
  CHECK(r1.method == LocalityMethod::Exhaustive);
  CHECK(r1.elements_checked == 8);

  const auto inc = triangular_inclusion(2, 1, 2).morphism;
  CHECK(is_local(inc).verdict == LocalityVerdict::Local);

  const Algebra g2 = field_algebra(2, 1);
  const auto prod = direct_product(g2, g2);
  const auto r3 = is_local(prod.projections[0]);
  REQUIRE(r3.verdict == LocalityVerdict::NotLocal);
  CHECK(*r3.witness == Vec{1, 0});

  LocalityOptions tiny;
  tiny.enumeration_budget = 2;
  tiny.sampling_budget = 200;
  const auto sampled = is_local(proj, tiny);
  CHECK(sampled.method == LocalityMethod::Sampled);
  CHECK(sampled.verdict == LocalityVerdict::UnknownBudget);
  CHECK_FALSE(sampled.witness.has_value());
  const auto refuted = is_local(prod.projections[0], LocalityOptions{1, 200, 3, 10});
  CHECK(refuted.verdict == LocalityVerdict::NotLocal);
  CHECK_THROWS_AS(LocalityReport::make(prod.projections[0], LocalityVerdict::NotLocal, Vec{1, 1}, 1,
                                       LocalityMethod::Exhaustive),
                  AssertionFailure);
}

TEST_CASE("lemma21_suite: spec examples") {
  const Algebra ut = gen_triangular(2, 2);
  const auto proj = analyze(ut).quotient.projection;
  const auto c = lemma21_suite(proj, std::nullopt);
  CHECK(c.clauses[0].checked);
  CHECK(c.clauses[1].checked);
  CHECK(c.clauses[1].detail.find("M2=local") != std::string::npos);

  const auto inc = triangular_inclusion(2, 1, 2).morphism;
  const auto ci = lemma21_suite(inc, std::nullopt);
  CHECK(ci.clauses[0].checked);
  CHECK_FALSE(ci.clauses[1].checked);
  CHECK(inc.kernel().is_zero());

  // A -> A/I -> A/J with I = (x^2) inside J = (x)
  const Algebra a = gen_truncated_poly(3, 3);
  const auto i = ideal_generated(a, {Vec{0, 0, 1}});
  const auto q1 = quotient_by_ideal(a, i);
  const auto q2 = quotient_by_ideal(q1.algebra, Subspace::span(3, 2, {q1.projection.apply(Vec{0, 1, 0})},
                                                               q1.algebra.id()));
  const auto cc = lemma21_suite(q1.projection, q2.projection);
  REQUIRE(cc.composite.has_value());
  CHECK(cc.composite->verdict == LocalityVerdict::Local);
  CHECK(cc.clauses[2].checked);
}

TEST_CASE("support_profile: spec examples") {
  const Algebra g3 = field_algebra(3, 1);
  const auto p33 = direct_product(g3, g3);
  const auto sp = support_profile(diagonal_into(p33, g3), p33);
  CHECK(sp.least_support == 2);
  CHECK_FALSE(sp.approximate);

  const Algebra g2 = field_algebra(2, 1);
  const auto p22 = direct_product(g2, g2);
  CHECK(support_profile(AlgebraMorphism::identity(p22.algebra), p22).least_support == 1);

  const auto pres = to_field_product(analyze(gen_triangular(2, 2)));
  REQUIRE(pres.has_value());
  CHECK(support_profile(pres->morphism, pres->target).least_support == 1);
  CHECK(support(pres->target, pres->target.algebra.unit()).size() == 2);

  const auto m2 = full_matrix_algebra(2, 2);
  const auto bad = direct_product(m2, g2);
  CHECK_THROWS_AS(support_profile(AlgebraMorphism::identity(bad.algebra), bad), CodomainNotFieldProduct);
}

TEST_CASE("producte_decompose: spec examples") {
  const Algebra g2 = field_algebra(2, 1);
  const auto p22 = direct_product(g2, g2);
  const auto id = producte_decompose(AlgebraMorphism::identity(p22.algebra), p22);
  CHECK(id.m() == 2);
  CHECK(id.idempotent_splits == 1);

  const Algebra g3 = field_algebra(3, 1);
  const auto p33 = direct_product(g3, g3);
  const auto diag = producte_decompose(diagonal_into(p33, g3), p33);
  CHECK(diag.m() == 1);
  CHECK(diag.support_reductions == 0);

  const Algebra ut = gen_triangular(2, 2);
  const auto pres = to_field_product(analyze(ut));
  REQUIRE(pres.has_value());
  const auto r = producte_decompose(pres->morphism, pres->target);
  CHECK(r.m() == 2);
  // the maximal ideals of UT2 on E11, E12, E22
  const Subspace m1 = Subspace::span(2, 3, {{0, 1, 0}, {0, 0, 1}}, ut.id());
  const Subspace m2 = Subspace::span(2, 3, {{1, 0, 0}, {0, 1, 0}}, ut.id());
  CHECK(((r.maximal_ideals[0] == m1 && r.maximal_ideals[1] == m2) ||
         (r.maximal_ideals[0] == m2 && r.maximal_ideals[1] == m1)));

  CHECK_THROWS_AS(producte_decompose(p22.projections[0], direct_product(std::vector<Algebra>{g2})),
                  CodomainNotFieldProduct);
  // the first projection is not local
  const auto p1 = direct_product(std::vector<Algebra>{g2});
  const auto first = AlgebraMorphism::make(p22.algebra, p1.algebra, p22.projections[0].matrix());
  CHECK_THROWS_AS(producte_decompose(first, p1), NotLocal);
}

TEST_CASE("dos_classify: spec examples") {
  const Algebra g3 = field_algebra(3, 1);
  const auto p33 = direct_product(g3, g3);
  CHECK(dos_classify(diagonal_into(p33, g3), p33).which_case == 1);

  const auto pres = to_field_product(analyze(gen_triangular(2, 2)));
  const auto d = dos_classify(pres->morphism, pres->target);
  CHECK(d.which_case == 2);
  CHECK(d.radical.dim() == 1);

  const Algebra g2 = field_algebra(2, 1);
  const auto p22 = direct_product(g2, g2);
  const auto e = dos_classify(AlgebraMorphism::identity(p22.algebra), p22);
  CHECK(e.which_case == 2);
  CHECK(e.radical.is_zero());
}

TEST_CASE("camps_dicks_check: spec examples") {
  const Algebra a = gen_truncated_poly(3, 3);
  const auto c1 = camps_dicks_check(analyze(a).quotient.projection);
  CHECK(c1.codim_domain == c1.codim_codomain);
  const auto c2 = camps_dicks_check(triangular_inclusion(2, 1, 2).morphism);
  CHECK(c2.codim_domain == 2);
  CHECK(c2.codim_codomain == 2);
  CHECK(c2.holds);
  const Algebra g2 = field_algebra(2, 1);
  const auto p22 = direct_product(g2, g2);
  const auto c3 = camps_dicks_check(diagonal_into(p22, g2));
  CHECK(c3.codim_domain == 1);
  CHECK(c3.codim_codomain == 2);
}

TEST_CASE("field_regular_representation is local") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto f = field_regular_representation(3, k);
    CHECK(is_local(f.morphism).verdict == LocalityVerdict::Local);
    CHECK(f.morphism.is_injective());
  }
}

TEST_CASE("property: generated local morphisms") {
  Rng rng(2024);
  AlgebraCaps caps;
  caps.primes = {2, 3};
  caps.max_dim = 6;
  caps.max_elements = 1u << 12;
  for (int t = 0; t < 40; ++t) {
    const auto g = random_local_morphism(rng, caps);
    INFO(g.description);
    const auto r = is_local(g.morphism);
    CHECK(r.verdict == LocalityVerdict::Local);
    CHECK(camps_dicks_check(g.morphism).holds);
  }
}

TEST_CASE("property: composition calculus on generated pairs") {
  Rng rng(77);
  AlgebraCaps caps;
  caps.primes = {2, 3};
  caps.max_dim = 5;
  caps.max_elements = 1u << 10;
  for (int t = 0; t < 30; ++t) {
    const bool local_phi = t % 3 != 0;
    auto [phi, psi] = random_morphism_pair(rng, caps, local_phi);
    INFO(phi.description);
    const auto c = lemma21_suite(phi.morphism, psi.morphism);
    if (c.phi.witness) CHECK(c.composite->verdict == LocalityVerdict::NotLocal);
  }
}

TEST_CASE("property: producte on field-product morphisms") {
  Rng rng(5);
  AlgebraCaps caps;
  caps.primes = {2, 3};
  caps.max_dim = 6;
  caps.max_elements = 1u << 12;
  for (int t = 0; t < 30; ++t) {
    const auto g = random_field_product_morphism(rng, caps);
    INFO(g.description);
    const auto r = producte_decompose(g.morphism, *g.field_target);
    CHECK(r.m() == analyze(g.morphism.domain()).blocks.size());
    CHECK(r.m() <= g.field_target->factors.size());
    CHECK(r.support_reductions == 0);
  }
}
