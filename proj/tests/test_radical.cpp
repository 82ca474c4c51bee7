#include "doctest.h"
#include "semiloc/errors.hpp"
#include "semiloc/generators.hpp"
#include "semiloc/radical.hpp"
#include "semiloc/wedderburn.hpp"

using namespace semiloc;

namespace {

Subspace span(Residue p, std::size_t n, std::vector<Vec> vs) { return Subspace::span(p, n, vs); }

}  // namespace

TEST_CASE("radical_bruteforce: spec examples") {
  CHECK(radical_bruteforce(full_matrix_algebra(2, 2)).radical.is_zero());
  auto r = radical_bruteforce(truncated_polynomial(3, 2));
  CHECK(r.radical == span(3, 2, {{0, 1}}));
  CHECK(r.nilpotency_index == 2);
  CHECK(r.method == RadicalMethod::BruteForce);
  auto ut = radical_bruteforce(gen_triangular(2, 2));  // basis E11, E12, E22
  CHECK(ut.radical == span(2, 3, {{0, 1, 0}}));
  CHECK(ut.nilpotency_index == 2);
  CHECK_THROWS_AS(radical_bruteforce(truncated_polynomial(2, 12), 1024), BudgetExceeded);
  auto z = radical_bruteforce(Algebra::zero(3));
  CHECK(z.radical.is_zero());
  CHECK(z.nilpotency_index == 1);
}

TEST_CASE("radical_trace: spec examples") {
  CHECK(radical_trace(truncated_polynomial(5, 2)).radical == span(5, 2, {{0, 1}}));
  CHECK(radical_trace(full_matrix_algebra(7, 2)).radical.is_zero());
  CHECK_THROWS_AS(radical_trace(gen_triangular(2, 2)), CharTooSmall);
  CHECK(radical(gen_triangular(2, 2)).method == RadicalMethod::BruteForce);
  CHECK(radical(truncated_polynomial(5, 2)).method == RadicalMethod::TraceForm);
}

TEST_CASE("semisimple_quotient") {
  auto f = field_algebra(3, 2);
  auto q = semisimple_quotient(f);
  CHECK(same_structure(q.algebra, f));
  CHECK(q.projection.matrix().is_identity());
  CHECK(same_structure(semisimple_quotient(truncated_polynomial(3, 3)).algebra, field_algebra(3, 1)));
  CHECK(same_structure(semisimple_quotient(gen_triangular(2, 2)).algebra,
                       direct_product(field_algebra(2, 1), field_algebra(2, 1)).algebra));
}

TEST_CASE("wedderburn_decompose: spec examples") {
  auto d1 = wedderburn_decompose(direct_product(field_algebra(2, 1), field_algebra(2, 1)).algebra);
  REQUIRE(d1.blocks.size() == 2);
  for (const auto& b : d1.blocks) {
    CHECK(b.n == 1);
    CHECK(b.k == 1);
  }
  auto d2 = wedderburn_decompose(full_matrix_algebra(3, 2));
  REQUIRE(d2.blocks.size() == 1);
  CHECK(d2.blocks[0].n == 2);
  CHECK(d2.blocks[0].k == 1);
  auto d3 = wedderburn_decompose(field_algebra(2, 2));
  REQUIRE(d3.blocks.size() == 1);
  CHECK(d3.blocks[0].n == 1);
  CHECK(d3.blocks[0].k == 2);
  CHECK_THROWS_AS(wedderburn_decompose(truncated_polynomial(3, 2)), ValidationError);
  CHECK(wedderburn_decompose(Algebra::zero(2)).blocks.empty());
}

TEST_CASE("ring_codim: spec examples") {
  CHECK(ring_codim(field_algebra(5, 3)) == 1);
  CHECK(ring_codim(full_matrix_algebra(2, 2)) == 2);
  CHECK(ring_codim(gen_triangular(2, 2)) == 2);
  CHECK(ring_codim(direct_product(field_algebra(3, 1), full_matrix_algebra(3, 2)).algebra) == 3);
  CHECK(ring_codim(Algebra::zero(2)) == 0);
}

TEST_CASE("lift_idempotent: spec examples") {
  auto ut = gen_triangular(2, 3);  // E11, E12, E22
  auto rad = radical(ut);
  auto q = semisimple_quotient(ut, rad);
  CHECK(lift_idempotent(q, q.algebra.unit(), rad.nilpotency_index) == ut.unit());
  CHECK(lift_idempotent(q, q.algebra.zero_element(), rad.nilpotency_index) == ut.zero_element());
  Vec e11bar = q.projection.apply(Vec{1, 0, 0});
  Vec e = lift_idempotent(q, e11bar, rad.nilpotency_index);
  CHECK(e == Vec{1, 0, 0});
  CHECK(ut.is_idempotent(e));
}

TEST_CASE("property: trace radical equals brute force, quotient is semisimple") {
  Rng rng(31);
  AlgebraCaps caps;
  caps.primes = {3, 5, 7, 11};
  caps.large_char = true;
  caps.max_elements = 1u << 14;
  for (int t = 0; t < 60; ++t) {
    auto g = random_algebra(rng, caps);
    INFO(g.description);
    auto a = radical_trace(g.algebra);
    auto b = radical_bruteforce(g.algebra);
    CHECK(a.radical == b.radical);
    CHECK(a.nilpotency_index == b.nilpotency_index);
    CHECK(is_two_sided_ideal(g.algebra, a.radical));
    auto q = semisimple_quotient(g.algebra, a);
    CHECK(radical(q.algebra).radical.is_zero());
    auto dec = wedderburn_decompose(q.algebra);
    CHECK(dec.total_dim() == q.algebra.dim());
  }
}

TEST_CASE("property: blocks, codim additivity, lifted idempotents") {
  Rng rng(32);
  AlgebraCaps caps;
  caps.primes = {2, 3};
  caps.max_dim = 10;
  caps.max_elements = 1u << 12;
  for (int t = 0; t < 40; ++t) {
    auto g = random_algebra(rng, caps);
    auto h = random_algebra(rng, caps);
    INFO(g.description);
    auto an = analyze(g.algebra);
    CHECK(an.decomposition.total_dim() == an.quotient.algebra.dim());
    for (const auto& b : an.blocks) {
      CHECK(g.algebra.is_idempotent(b.central));
      CHECK(g.algebra.is_idempotent(b.primitive));
    }
    // central idempotents are orthogonal and sum to 1 in A/J
    Vec sum = an.quotient.algebra.zero_element();
    for (std::size_t i = 0; i < an.decomposition.blocks.size(); ++i) {
      const auto& ei = an.decomposition.blocks[i].central_idempotent;
      CHECK(an.quotient.algebra.is_central(ei));
      sum = an.quotient.algebra.add(sum, ei);
      for (std::size_t j = 0; j < i; ++j)
        CHECK(is_zero(an.quotient.algebra.multiply(ei, an.decomposition.blocks[j].central_idempotent)));
    }
    CHECK(sum == an.quotient.algebra.unit());
    if (g.algebra.p() == h.algebra.p() && g.algebra.dim() + h.algebra.dim() <= 12)
      CHECK(ring_codim(direct_product(g.algebra, h.algebra).algebra) ==
            ring_codim(g.algebra) + ring_codim(h.algebra));
  }
}

TEST_CASE("property: matrix algebras over extension fields have codim n") {
  for (Residue p : {2u, 3u})
    for (std::size_t k = 1; k <= 2; ++k)
      for (std::size_t n = 1; n <= 3; ++n) {
        if (n * n * k > 12) continue;
        auto a = matrix_extension(field_algebra(p, k), n);
        CHECK(ring_codim(a, std::uint64_t{1} << 40) == n);
        auto d = wedderburn_decompose(a);
        REQUIRE(d.blocks.size() == 1);
        CHECK(d.blocks[0].k == k);
        CHECK(d.blocks[0].n == n);
      }
}

TEST_CASE("center splitting by basis elements alone") {
  // GF(4) x GF(4): every basis of the center contains a splitting element
  Rng rng(33);
  auto f4 = field_algebra(2, 2);
  for (int t = 0; t < 30; ++t) {
    auto a = scramble(direct_product({f4, f4, field_algebra(2, 3)}).algebra, rng);
    SplitOptions opt;
    opt.basis_only = true;
    auto d = wedderburn_decompose(a, opt);
    CHECK(d.blocks.size() == 3);
    CHECK(d.total_dim() == 7);
  }
}
