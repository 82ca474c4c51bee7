#include "doctest.h"
#include "semiloc/algebra.hpp"
#include "semiloc/errors.hpp"
#include "test_support.hpp"

using namespace semiloc;
using semiloc::testing::random_vec;

namespace {

Algebra gf(Residue p) { return field_algebra(p, 1); }

}  // namespace

TEST_CASE("make_algebra validation") {
  CHECK(gf(2).dim() == 1);
  // b1 b1 = b2, b2 b2 = b1, all else zero; no unit exists and (0,0) is rejected
  std::vector<Residue> c(8, 0);
  c[(0 * 2 + 0) * 2 + 1] = 1;
  c[(1 * 2 + 1) * 2 + 0] = 1;
  CHECK_THROWS_AS(Algebra::make(2, 2, c, {1, 1}), UnitViolation);
  CHECK_THROWS_AS(Algebra::make(2, 2, c, {0, 0}), ValidationError);
  // b2 b2 = b2 with unit b1 is GF(3) x GF(3) in disguise
  std::vector<Residue> split{1, 0, 0, 1, 0, 1, 0, 1};
  CHECK_NOTHROW(Algebra::make(3, 2, split, {1, 0}));

  auto a = truncated_polynomial(3, 2);
  CHECK(a.multiply(Vec{0, 1}, Vec{0, 1}) == Vec{0, 0});
  CHECK_THROWS_AS(Algebra::make(2, 65, {}, {}), ValidationError);
}

TEST_CASE("associativity witness") {
  // two-dimensional with b2 b2 = b1 but b1 acting as unit only on one side
  const std::size_t n = 2;
  std::vector<Residue> c(n * n * n, 0);
  auto put = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * n + j) * n + k] = 1; };
  put(0, 0, 0);
  put(0, 1, 1);
  put(1, 0, 1);
  put(1, 1, 0);
  CHECK_NOTHROW(Algebra::make(3, 2, c, {1, 0}));  // GF(3)[x]/(x^2 - 1)
  c[(1 * n + 1) * n + 1] = 1;                     // b2 b2 = b1 + b2 still associative (commutative, 2-dim)
  CHECK_NOTHROW(Algebra::make(3, 2, c, {1, 0}));
  // break associativity in dimension 3: b2 b3 = b2, b3 b3 = 0, b3 b2 = 0 but b2 b2 = b3
  std::vector<Residue> d(27, 0);
  auto put3 = [&](std::size_t i, std::size_t j, std::size_t k) { d[(i * 3 + j) * 3 + k] = 1; };
  for (std::size_t i = 0; i < 3; ++i) {
    put3(0, i, i);
    if (i) put3(i, 0, i);
  }
  put3(1, 1, 2);
  put3(1, 2, 1);
  CHECK_THROWS_AS(Algebra::make(2, 3, d, {1, 0, 0}), AssociativityViolation);
}

TEST_CASE("is_unit") {
  auto a = truncated_polynomial(3, 2);
  CHECK(a.is_unit(a.unit()));
  CHECK_FALSE(a.is_unit(Vec{0, 1}));
  CHECK(a.is_unit(Vec{1, 1}));
  CHECK(a.inverse(Vec{1, 1}) == Vec{1, 2});
  auto m2 = full_matrix_algebra(2, 2);
  CHECK(m2.is_unit(m2.unit()));
  CHECK_FALSE(m2.is_unit(m2.basis_vector(0)));
}

TEST_CASE("matrix_extension and lift") {
  auto g2 = gf(2);
  auto m1 = matrix_extension(g2, 1);
  CHECK(same_structure(m1, g2));
  auto m2 = matrix_extension(g2, 2);
  CHECK(m2.dim() == 4);
  auto ut = upper_triangular(g2, 2);
  auto lifted = lift(ut.inclusion, 2);
  CHECK(lifted.domain().dim() == 12);
  CHECK(lifted.codomain().dim() == 16);
  auto id = AlgebraMorphism::identity(m2);
  auto lid = lift(id, 2);
  CHECK(lid.matrix().is_identity());
  // lift respects composition
  auto proj = direct_product(g2, g2);
  auto comp = compose(proj.projections[0], AlgebraMorphism::identity(proj.algebra));
  auto l1 = lift(comp, 2);
  auto l2 = lift(proj.projections[0], 2, l1.domain(), l1.codomain());
  CHECK(l1.matrix() == l2.matrix());
}

TEST_CASE("upper_triangular") {
  auto g2 = gf(2);
  CHECK(same_structure(upper_triangular(g2, 1).algebra, g2));
  auto ut = upper_triangular(g2, 2);
  CHECK(ut.algebra.dim() == 3);
  CHECK(ut.inclusion.is_injective());
  auto ut3 = upper_triangular(field_algebra(2, 2), 3);
  CHECK(ut3.algebra.dim() == 12);
}

TEST_CASE("trivial_extension") {
  auto k = gf(2);
  BimoduleData zero{0, {FpMatrix(2, 0, 0)}, {FpMatrix(2, 0, 0)}};
  CHECK(same_structure(trivial_extension(k, zero), k));
  BimoduleData reg{1, {FpMatrix::identity(2, 1)}, {FpMatrix::identity(2, 1)}};
  auto dual = trivial_extension(k, reg);
  CHECK(same_structure(dual, truncated_polynomial(2, 2)));
  BimoduleData two{2, {FpMatrix::identity(2, 2)}, {FpMatrix::identity(2, 2)}};
  auto t = trivial_extension(k, two);
  CHECK(t.dim() == 3);
  CHECK(t.multiply(t.basis_vector(1), t.basis_vector(2)) == Vec{0, 0, 0});
  BimoduleData broken{1, {FpMatrix(2, 1, 1)}, {FpMatrix::identity(2, 1)}};
  CHECK_THROWS_AS(trivial_extension(k, broken), BimoduleViolation);
}

TEST_CASE("direct_product") {
  auto g2 = gf(2);
  auto z = Algebra::zero(2);
  auto pz = direct_product(g2, z);
  CHECK(same_structure(pz.algebra, g2));
  auto p = direct_product(g2, g2);
  CHECK(p.algebra.dim() == 2);
  CHECK(p.projections[0].is_onto());
  CHECK(p.projections[1].is_onto());
  CHECK(p.algebra.unit() == Vec{1, 1});
  CHECK_THROWS_AS(direct_product(g2, gf(3)), ModulusMismatch);
  // swap automorphism
  CHECK_NOTHROW(validate_morphism(FpMatrix::from_rows(2, {{0, 1}, {1, 0}}), p.algebra, p.algebra));
}

TEST_CASE("ideal_generated") {
  auto a = truncated_polynomial(3, 2);
  CHECK(ideal_generated(a, {a.unit()}).is_full());
  CHECK(ideal_generated(a, {{0, 1}}) == Subspace::span(3, 2, {{0, 1}}));
  auto m2 = full_matrix_algebra(2, 2);
  CHECK(ideal_generated(m2, {m2.basis_vector(1)}).is_full());
}

TEST_CASE("quotient_by_ideal") {
  auto a = truncated_polynomial(3, 2);
  auto q0 = quotient_by_ideal(a, Subspace::zero(3, 2));
  CHECK(same_structure(q0.algebra, a));
  auto q = quotient_by_ideal(a, Subspace::span(3, 2, {{0, 1}}));
  CHECK(same_structure(q.algebra, gf(3)));
  CHECK(q.projection.kernel() == Subspace::span(3, 2, {{0, 1}}));
  CHECK_THROWS_AS(quotient_by_ideal(a, Subspace::full(3, 2)), IdealContainsUnit);

  auto ut = upper_triangular(gf(2), 2).algebra;  // basis E11, E12, E22
  auto qu = quotient_by_ideal(ut, Subspace::span(2, 3, {{0, 1, 0}}));
  CHECK(same_structure(qu.algebra, direct_product(gf(2), gf(2)).algebra));
}

TEST_CASE("validate_morphism") {
  auto a = truncated_polynomial(3, 2);
  CHECK_NOTHROW(validate_morphism(FpMatrix::identity(3, 2), a, a));
  // x -> 1
  CHECK_THROWS_AS(validate_morphism(FpMatrix::from_rows(3, {{1, 1}, {0, 0}}), a, a),
                  NotMultiplicative);
  CHECK_THROWS_AS(validate_morphism(FpMatrix(3, 2, 2), a, a), UnitNotPreserved);
}

TEST_CASE("property: random triples associate; units form a group") {
  std::mt19937_64 rng(21);
  std::vector<Algebra> algs{truncated_polynomial(3, 3), full_matrix_algebra(2, 2),
                            upper_triangular(gf(3), 2).algebra, field_algebra(2, 3),
                            direct_product(gf(5), truncated_polynomial(5, 2)).algebra,
                            matrix_extension(truncated_polynomial(2, 2), 2)};
  for (const auto& a : algs) {
    for (int t = 0; t < 1000 / static_cast<int>(algs.size()) + 1; ++t) {
      Vec x = random_vec(rng, a.p(), a.dim()), y = random_vec(rng, a.p(), a.dim()),
          z = random_vec(rng, a.p(), a.dim());
      CHECK(a.multiply(x, a.multiply(y, z)) == a.multiply(a.multiply(x, y), z));
    }
    const std::uint64_t total = saturating_pow(a.p(), a.dim());
    if (total > (1u << 16)) continue;
    std::vector<Vec> units;
    Vec v(a.dim());
    for (std::uint64_t i = 0; i < total; ++i) {
      decode_index(i, a.p(), v);
      if (a.is_unit(v)) units.push_back(v);
    }
    for (int t = 0; t < 200; ++t) {
      const Vec& u = units[rng() % units.size()];
      const Vec& w = units[rng() % units.size()];
      CHECK(a.is_unit(a.multiply(u, w)));
      auto inv = a.inverse(u);
      REQUIRE(inv.has_value());
      CHECK(a.multiply(u, *inv) == a.unit());
      CHECK(a.multiply(*inv, u) == a.unit());
    }
  }
}

TEST_CASE("property: quotient projection kernel equals the ideal") {
  std::mt19937_64 rng(22);
  auto a = matrix_extension(truncated_polynomial(3, 2), 2);
  for (int t = 0; t < 20; ++t) {
    // ideals of M2(GF(3)[x]/x^2) generated by multiples of x
    Vec g = random_vec(rng, 3, a.dim());
    for (std::size_t i = 0; i < a.dim(); i += 2) g[i] = 0;
    auto ideal = ideal_generated(a, {g});
    if (ideal.contains(a.unit())) continue;
    auto q = quotient_by_ideal(a, ideal);
    CHECK(q.projection.kernel() == ideal);
    CHECK(q.projection.is_onto());
  }
}

TEST_CASE("property: matrix extension of a product matches product of extensions") {
  auto a = gf(3), b = truncated_polynomial(3, 2);
  const std::size_t n = 2;
  auto lhs = matrix_extension(direct_product(a, b).algebra, n);
  auto rhs = direct_product(matrix_extension(a, n), matrix_extension(b, n)).algebra;
  // index in lhs: (rs)*3 + i where i<1 belongs to a; in rhs: a-part first
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::size_t> perm(lhs.dim());
  for (std::size_t rs = 0; rs < n * n; ++rs)
    for (std::size_t i = 0; i < d; ++i)
      perm[rs * d + i] = i < da ? rs * da + i : n * n * da + rs * db + (i - da);
  FpMatrix rows(3, lhs.dim(), lhs.dim());
  for (std::size_t i = 0; i < lhs.dim(); ++i) rows(i, perm[i]) = 1;
  // new basis of rhs in the lhs order
  auto re = change_of_basis(rhs, rows);
  CHECK(re.algebra.constants() == lhs.constants());
  CHECK(re.algebra.unit() == lhs.unit());
}

TEST_CASE("minimal polynomial and center") {
  auto a = truncated_polynomial(5, 3);
  CHECK(minimal_polynomial(a, Vec{0, 1, 0}) == FpPoly::monomial(5, 3));
  CHECK(minimal_polynomial(a, a.unit()) == FpPoly(5, {-1, 1}));
  auto m2 = full_matrix_algebra(3, 2);
  CHECK(center(m2) == Subspace::span(3, 4, {m2.unit()}));
  auto f4 = field_algebra(2, 2);
  CHECK(minimal_polynomial(f4, Vec{0, 1}) == FpPoly(2, {1, 1, 1}));
  auto z = Algebra::zero(2);
  CHECK(minimal_polynomial(z, Vec{}) == FpPoly(2, {1}));
  auto cor = corner_algebra(m2, m2.basis_vector(0));
  CHECK(cor.algebra.dim() == 1);
  CHECK(opposite(upper_triangular(gf(2), 2).algebra).dim() == 3);
}
