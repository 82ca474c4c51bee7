#include "doctest.h"
#include "semiloc/errors.hpp"
#include "semiloc/fp_matrix.hpp"
#include "semiloc/fp_poly.hpp"
#include "semiloc/subspace.hpp"
#include "test_support.hpp"

using namespace semiloc;
using semiloc::testing::random_matrix;
using semiloc::testing::random_poly;
using semiloc::testing::random_vec;

TEST_CASE("reduce: identity and zero") {
  auto r = reduce(FpMatrix::identity(2, 3));
  CHECK(r.rank == 3);
  CHECK(r.kernel.rows() == 0);
  auto z = reduce(FpMatrix(5, 2, 4));
  CHECK(z.rank == 0);
  CHECK(z.kernel.rows() == 4);
}

TEST_CASE("reduce: rank-one 2x2 over GF(5)") {
  auto r = reduce(FpMatrix::from_rows(5, {{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  REQUIRE(r.kernel.rows() == 1);
  // canonical kernel row is (1, 2), a scalar multiple of (3, 1)
  Vec k = r.kernel.row_vec(0);
  CHECK(Subspace::span(5, 2, {k}) == Subspace::span(5, 2, {{3, 1}}));
  CHECK((1 * k[0] + 2 * k[1]) % 5 == 0);
}

TEST_CASE("solve and invert") {
  auto id = FpMatrix::identity(3, 4);
  Vec b{1, 2, 0, 1};
  CHECK(solve(id, b) == b);
  CHECK_FALSE(solve(FpMatrix(3, 2, 2), Vec{1, 0}).has_value());
  CHECK(invert(id) == id);
  CHECK_FALSE(invert(FpMatrix::from_rows(2, {{0, 1}, {0, 0}})).has_value());
  CHECK_THROWS_AS(invert(FpMatrix(5, 2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(FpMatrix(4, 1, 1), ValidationError);
}

TEST_CASE("property: random consistent systems and inverses") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    FpMatrix m = random_matrix(rng, 3, 6, 6);
    Vec x0 = random_vec(rng, 3, 6);
    Vec b = m.apply(x0);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);

    FpMatrix a = random_matrix(rng, 7, 5, 5);
    auto inv = invert(a);
    auto red = reduce(a);
    CHECK(inv.has_value() == (red.kernel.rows() == 0));
    CHECK(is_nonsingular(a) == inv.has_value());
    if (inv) CHECK((a * *inv).is_identity());
  }
}

TEST_CASE("property: rref idempotent, rank of transpose, rank-nullity") {
  std::mt19937_64 rng(12);
  for (Residue p : {2u, 3u, 5u, 13u}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t r = rng() % 7, c = rng() % 7;
      FpMatrix m = random_matrix(rng, p, r, c);
      auto red = reduce(m);
      CHECK(reduce(red.rref).rref == red.rref);
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(red.rank + red.kernel.rows() == c);
      for (std::size_t k = 0; k < red.kernel.rows(); ++k) CHECK(is_zero(m.apply(red.kernel.row(k))));
    }
  }
}

TEST_CASE("gf2 bit-packed nonsingularity agrees with rank") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = rng() % 10 + 1;
    FpMatrix m = random_matrix(rng, 2, n, n);
    CHECK(is_nonsingular(m) == (rank(m) == n));
  }
}

TEST_CASE("subspace operations") {
  auto u = Subspace::span(5, 3, {{1, 0, 0}, {0, 1, 0}});
  auto w = Subspace::span(5, 3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(u.intersection(w) == Subspace::span(5, 3, {{0, 1, 0}}));
  CHECK(u.sum(w).is_full());
  CHECK(u.annihilator() == Subspace::span(5, 3, {{0, 0, 1}}));
  CHECK(u.coordinates(Vec{2, 3, 0}) == Vec{2, 3});
  CHECK_FALSE(u.coordinates(Vec{0, 0, 1}).has_value());
}

TEST_CASE("factor: spec examples") {
  auto f1 = factor(FpPoly(2, {0, 1, 1}));  // x^2 + x = x^2 - x over GF(2)
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].factor == FpPoly(2, {0, 1}));
  CHECK(f1[1].factor == FpPoly(2, {1, 1}));
  CHECK(is_irreducible(FpPoly(2, {1, 1, 1})));
  auto f3 = factor(FpPoly(5, {-1, 0, 0, 0, 1}));
  REQUIRE(f3.size() == 4);
  for (const auto& fp : f3) {
    CHECK(fp.factor.degree() == 1);
    CHECK(fp.multiplicity == 1);
  }
  CHECK_THROWS(factor(FpPoly(3)));
}

TEST_CASE("property: factorization re-multiplies to the input") {
  std::mt19937_64 rng(14);
  for (Residue p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 250; ++trial) {
      FpPoly f = random_poly(rng, p, 12);
      if (f.is_zero()) continue;
      auto fs = factor(f);
      FpPoly prod = FpPoly::constant(p, f.lead());
      for (const auto& fp : fs) {
        CHECK(fp.factor.is_monic());
        CHECK(is_irreducible(fp.factor));
        for (unsigned m = 0; m < fp.multiplicity; ++m) prod = prod * fp.factor;
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("first irreducible and gcd") {
  CHECK(first_irreducible(2, 2) == FpPoly(2, {1, 1, 1}));
  for (std::size_t d = 1; d <= 6; ++d) CHECK(is_irreducible(first_irreducible(3, d)));
  FpPoly a(7, {1, 2, 1});  // (x+1)^2
  FpPoly b(7, {1, 1});
  CHECK(gcd(a, b) == b);
  auto eg = extended_gcd(FpPoly(7, {1, 0, 1}), FpPoly(7, {0, 1}));
  CHECK(eg.g == FpPoly(7, {1}));
  CHECK(eg.s * FpPoly(7, {1, 0, 1}) + eg.t * FpPoly(7, {0, 1}) == eg.g);
}
