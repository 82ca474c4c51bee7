#include "semiloc/wedderburn.hpp"

#include <algorithm>
#include <random>

#include "semiloc/errors.hpp"

namespace semiloc {

std::size_t SemisimpleDecomposition::total_dim() const {
  std::size_t t = 0;
  for (const auto& b : blocks) t += b.n * b.n * b.k;
  return t;
}

std::size_t SemisimpleDecomposition::codim() const {
  std::size_t t = 0;
  for (const auto& b : blocks) t += b.n;
  return t;
}

namespace {

std::size_t span_dim(const Algebra& s, const std::vector<Vec>& vs) {
  return Subspace::span(s.p(), s.dim(), vs).dim();
}

// Orthogonal idempotents u_j(y), one per primary component of the minimal
// polynomial m of y inside the corner with unit `unit`.
std::vector<Vec> primary_idempotents(const Algebra& s, const FpPoly& m,
                                     const std::vector<FactorPower>& fs, std::span<const Residue> y,
                                     std::span<const Residue> unit) {
  std::vector<Vec> out;
  for (const auto& fp : fs) {
    FpPoly power = FpPoly::constant(m.p(), 1);
    for (unsigned r = 0; r < fp.multiplicity; ++r) power = power * fp.factor;
    FpPoly cofactor = m / power;
    ExtendedGcd eg = extended_gcd(cofactor, power);
    FpPoly u = (eg.s * cofactor) % m;
    out.push_back(evaluate(s, u, y, unit));
  }
  return out;
}

std::size_t corner_dim(const Algebra& s, std::span<const Residue> f) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < s.dim(); ++i) vs.push_back(s.multiply(s.multiply(f, s.basis_vector(i)), f));
  return span_dim(s, vs);
}

}  // namespace

SemisimpleDecomposition wedderburn_decompose(const Algebra& s, SplitOptions options) {
  const Residue p = s.p();
  const std::size_t n = s.dim();
  SemisimpleDecomposition out;
  if (n == 0) return out;
  const Subspace z = center(s);
  std::mt19937_64 rng(options.seed);

  std::vector<Vec> pending{s.unit()};
  while (!pending.empty()) {
    const Vec e = std::move(pending.back());
    pending.pop_back();
    std::vector<Vec> ez;
    for (std::size_t i = 0; i < z.dim(); ++i) ez.push_back(s.multiply(e, z.basis().row(i)));
    const std::size_t d = span_dim(s, ez);
    const std::size_t trials = ez.size() + (options.basis_only ? 0 : options.random_trials);
    bool resolved = false;
    for (std::size_t t = 0; t < trials && !resolved; ++t) {
      Vec y(n, 0);
      if (t < ez.size()) {
        y = ez[t];
      } else {
        for (const auto& v : ez) vec_axpy(y, static_cast<Residue>(rng() % p), v, p);
      }
      const FpPoly m = minimal_polynomial(s, y, e);
      const auto fs = factor(m);
      for (const auto& fp : fs)
        if (fp.multiplicity > 1)
          throw ValidationError("wedderburn_decompose: central element with repeated factor; radical is nonzero");
      if (fs.size() == 1) {
        if (static_cast<std::size_t>(m.degree()) == d) {
          WedderburnBlock b;
          b.k = d;
          b.central_idempotent = e;
          b.center_generator = y;
          out.blocks.push_back(std::move(b));
          resolved = true;
        }
        continue;
      }
      for (auto& f : primary_idempotents(s, m, fs, y, e)) pending.push_back(std::move(f));
      resolved = true;
    }
    if (!resolved)
      throw SplitBudgetExceeded("wedderburn_decompose: center block of dimension " + std::to_string(d) +
                                " neither split nor certified as a field");
  }

  for (auto& b : out.blocks) {
    std::vector<Vec> es;
    for (std::size_t i = 0; i < n; ++i) es.push_back(s.multiply(b.central_idempotent, s.basis_vector(i)));
    const std::size_t bd = span_dim(s, es);
    if (bd % b.k != 0) throw ValidationError("wedderburn_decompose: block dimension not divisible by k");
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= bd / b.k) ++r;
    if (r * r * b.k != bd) throw ValidationError("wedderburn_decompose: block is not a full matrix algebra");
    b.n = r;
  }
  std::sort(out.blocks.begin(), out.blocks.end(), [](const WedderburnBlock& x, const WedderburnBlock& y) {
    if (x.k != y.k) return x.k < y.k;
    if (x.n != y.n) return x.n < y.n;
    return x.central_idempotent > y.central_idempotent;
  });
  if (out.total_dim() != n) throw ValidationError("wedderburn_decompose: block dimensions do not sum to dim");
  return out;
}

Vec primitive_idempotent_in_block(const Algebra& s, const WedderburnBlock& block, std::uint64_t seed,
                                  std::size_t trials) {
  const Residue p = s.p();
  const std::size_t n = s.dim();
  std::mt19937_64 rng(seed);
  Vec f = block.central_idempotent;
  std::size_t dim_f = corner_dim(s, f);
  for (std::size_t t = 0; dim_f > block.k; ++t) {
    if (t == trials)
      throw SplitBudgetExceeded("primitive_idempotent_in_block: no splitting element found");
    Vec r(n);
    for (auto& x : r) x = static_cast<Residue>(rng() % p);
    const Vec y = s.multiply(s.multiply(f, r), f);
    const FpPoly m = minimal_polynomial(s, y, f);
    const auto fs = factor(m);
    if (fs.size() < 2) continue;
    std::size_t best_dim = dim_f;
    Vec best;
    for (auto& g : primary_idempotents(s, m, fs, y, f)) {
      const std::size_t gd = corner_dim(s, g);
      if (gd > 0 && gd < best_dim) {
        best_dim = gd;
        best = std::move(g);
      }
    }
    f = std::move(best);
    dim_f = best_dim;
  }
  return f;
}

AlgebraAnalysis analyze(const Algebra& a, std::uint64_t budget) {
  RadicalReport rad = radical(a, budget);
  QuotientAlgebra q = semisimple_quotient(a, rad);
  SemisimpleDecomposition dec = wedderburn_decompose(q.algebra);
  std::vector<BlockLift> lifts;
  for (const auto& b : dec.blocks) {
    BlockLift l;
    l.n = b.n;
    l.k = b.k;
    l.central = lift_idempotent(q, b.central_idempotent, rad.nilpotency_index);
    l.primitive = lift_idempotent(q, primitive_idempotent_in_block(q.algebra, b), rad.nilpotency_index);
    lifts.push_back(std::move(l));
  }
  return AlgebraAnalysis{a, std::move(rad), std::move(q), std::move(dec), std::move(lifts)};
}

std::size_t ring_codim(const Algebra& a, std::uint64_t budget) {
  RadicalReport rad = radical(a, budget);
  return wedderburn_decompose(semisimple_quotient(a, rad).algebra).codim();
}

}  // namespace semiloc
