#include "semiloc/generators.hpp"

#include <map>

#include "semiloc/errors.hpp"
#include "semiloc/locality.hpp"

namespace semiloc {

Vec random_vector(Rng& rng, Residue p, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = random_residue(rng, p);
  return v;
}

FpMatrix random_invertible(Rng& rng, Residue p, std::size_t n) {
  for (;;) {
    FpMatrix m(p, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_residue(rng, p);
    if (is_nonsingular(m)) return m;
  }
}

Algebra gen_triangular(std::size_t n, Residue p) {
  return upper_triangular(field_algebra(p, 1), n).algebra;
}

Algebra gen_truncated_poly(std::size_t n, Residue p) { return truncated_polynomial(p, n); }

Algebra gen_path_algebra(const Quiver& q, std::size_t max_len, Residue p) {
  require_prime(p);
  if (q.vertices == 0) throw ValidationError("path algebra: quiver needs a vertex");
  for (auto [s, t] : q.arrows)
    if (s >= q.vertices || t >= q.vertices) throw ValidationError("path algebra: arrow endpoint out of range");
  // A path is (source, arrow list); trivial paths have empty lists.
  struct Path {
    std::size_t source, target;
    std::vector<std::size_t> arrows;
  };
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices; ++v) paths.push_back({v, v, {}});
  std::size_t frontier = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = paths.size();
    for (std::size_t i = frontier; i < end; ++i)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].first != paths[i].target) continue;
        Path np = paths[i];
        np.arrows.push_back(a);
        np.target = q.arrows[a].second;
        paths.push_back(std::move(np));
      }
    frontier = end;
    if (paths.size() > kAlgebraDimCap)
      throw BudgetExceeded("path algebra: more than " + std::to_string(kAlgebraDimCap) + " paths");
  }
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[{paths[i].source, paths[i].arrows}] = i;
  const std::size_t n = paths.size();
  std::vector<Residue> c(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (paths[i].target != paths[j].source) continue;
      std::vector<std::size_t> joined = paths[i].arrows;
      joined.insert(joined.end(), paths[j].arrows.begin(), paths[j].arrows.end());
      auto it = index.find({paths[i].source, joined});
      if (it != index.end()) c[(i * n + j) * n + it->second] = 1;
    }
  Vec unit(n, 0);
  for (std::size_t v = 0; v < q.vertices; ++v) unit[v] = 1;
  return Algebra::make(p, n, std::move(c), std::move(unit), "path", AlgebraOptions{true});
}

Algebra gen_trivial_ext(Residue p, std::size_t k, std::size_t d, std::size_t twist) {
  Algebra field = field_algebra(p, k);
  // Frobenius power on the basis: sigma(b_i) = b_i^(p^twist)
  std::vector<Vec> sigma(k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec x = field.basis_vector(i);
    for (std::size_t t = 0; t < twist; ++t) {
      Vec acc = field.unit();
      for (Residue e = 0; e < p; ++e) acc = field.multiply(acc, x);
      x = acc;
    }
    sigma[i] = x;
  }
  BimoduleData v;
  v.dim = k * d;
  for (std::size_t i = 0; i < k; ++i) {
    FpMatrix left(p, v.dim, v.dim), right(p, v.dim, v.dim);
    const FpMatrix li = field.left_basis(i);
    const FpMatrix ri = field.left_multiplication(sigma[i]);
    for (std::size_t blk = 0; blk < d; ++blk)
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
          left(blk * k + r, blk * k + c) = li(r, c);
          right(blk * k + r, blk * k + c) = ri(r, c);
        }
    v.left.push_back(std::move(left));
    v.right.push_back(std::move(right));
  }
  return trivial_extension(field, v);
}

Algebra scramble(const Algebra& a, Rng& rng) {
  if (a.dim() == 0) return a;
  return change_of_basis(a, random_invertible(rng, a.p(), a.dim())).algebra.with_name(a.name());
}

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

bool fits(Residue p, std::size_t dim, const AlgebraCaps& caps) {
  if (dim == 0 || dim > caps.max_dim) return false;
  if (caps.large_char && static_cast<std::size_t>(p) <= dim) return false;
  return saturating_pow(p, dim) <= caps.max_elements;
}

std::string gf(Residue p) { return std::to_string(p); }

GeneratedAlgebra one_family(Rng& rng, Residue p, const AlgebraCaps& caps, int depth) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t family = rng() % (depth > 0 ? 6 : 8);
    switch (family) {
      case 0: {
        const std::size_t k = pick(rng, 1, 3);
        if (!fits(p, k, caps)) break;
        return {"field(p=" + gf(p) + ",k=" + std::to_string(k) + ")", field_algebra(p, k)};
      }
      case 1: {
        const std::size_t n = pick(rng, 1, 5);
        if (!fits(p, n, caps)) break;
        return {"truncated-poly(n=" + std::to_string(n) + ",p=" + gf(p) + ")", gen_truncated_poly(n, p)};
      }
      case 2: {
        const std::size_t n = pick(rng, 1, 3);
        if (!fits(p, n * (n + 1) / 2, caps)) break;
        return {"triangular(n=" + std::to_string(n) + ",p=" + gf(p) + ")", gen_triangular(n, p)};
      }
      case 3: {
        Quiver q;
        q.vertices = pick(rng, 1, 3);
        const std::size_t arrows = pick(rng, 0, 3);
        std::string desc;
        for (std::size_t a = 0; a < arrows; ++a) {
          const std::size_t s = rng() % q.vertices, t = rng() % q.vertices;
          q.arrows.emplace_back(s, t);
          desc += (desc.empty() ? "" : ";") + std::to_string(s) + ">" + std::to_string(t);
        }
        const std::size_t len = pick(rng, 1, 3);
        try {
          Algebra alg = gen_path_algebra(q, len, p);
          if (!fits(p, alg.dim(), caps)) break;
          return {"path-algebra(v=" + std::to_string(q.vertices) + ",arrows=" + desc + ",len=" +
                      std::to_string(len) + ",p=" + gf(p) + ")",
                  alg};
        } catch (const BudgetExceeded&) {
          break;
        }
      }
      case 4: {
        const std::size_t k = pick(rng, 1, 2), d = pick(rng, 1, 2);
        const std::size_t twist = k > 1 ? rng() % k : 0;
        if (!fits(p, k * (d + 1), caps)) break;
        return {"trivial-ext(p=" + gf(p) + ",k=" + std::to_string(k) + ",d=" + std::to_string(d) +
                    ",twist=" + std::to_string(twist) + ")",
                gen_trivial_ext(p, k, d, twist)};
      }
      case 5: {
        const std::size_t n = pick(rng, 1, 2);
        if (!fits(p, n * n, caps)) break;
        return {"matrix(n=" + std::to_string(n) + ",GF(" + gf(p) + "))", full_matrix_algebra(p, n)};
      }
      case 6: {
        GeneratedAlgebra a = one_family(rng, p, caps, depth + 1);
        GeneratedAlgebra b = one_family(rng, p, caps, depth + 1);
        if (!fits(p, a.algebra.dim() + b.algebra.dim(), caps)) break;
        return {"product(" + a.description + "," + b.description + ")",
                direct_product(a.algebra, b.algebra).algebra};
      }
      case 7: {
        GeneratedAlgebra a = one_family(rng, p, caps, depth + 1);
        if (!fits(p, 4 * a.algebra.dim(), caps)) break;
        return {"matrix(n=2," + a.description + ")", matrix_extension(a.algebra, 2)};
      }
    }
  }
  return {"field(p=" + gf(p) + ",k=1)", field_algebra(p, 1)};
}

}  // namespace

GeneratedAlgebra random_algebra(Rng& rng, const AlgebraCaps& caps) {
  std::vector<Residue> primes;
  for (Residue p : caps.primes)
    if (fits(p, 1, caps)) primes.push_back(p);
  if (primes.empty()) throw ValidationError("random_algebra: no prime fits the caps");
  const Residue p = primes[rng() % primes.size()];
  GeneratedAlgebra g = one_family(rng, p, caps, 0);
  if (caps.allow_scramble && rng() % 2 == 0) {
    g.algebra = scramble(g.algebra, rng);
    g.description = "scramble(" + g.description + ")";
  }
  g.algebra = g.algebra.with_name(g.description);
  return g;
}

namespace {

std::size_t param(const std::vector<std::string>& params, std::size_t i, const std::string& family) {
  if (i >= params.size()) throw ValidationError(family + ": missing parameter " + std::to_string(i + 1));
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(params[i], &pos);
    if (pos != params[i].size()) throw std::invalid_argument("trailing");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ValidationError(family + ": parameter '" + params[i] + "' is not a nonnegative integer");
  }
}

Residue prime_param(const std::vector<std::string>& params, std::size_t i, const std::string& family) {
  const std::size_t p = param(params, i, family);
  if (p > kMaxModulus || !is_prime(p)) throw ValidationError(family + ": " + params[i] + " is not a prime");
  return static_cast<Residue>(p);
}

Quiver parse_quiver(const std::string& text) {
  // "0>1,1>2" with vertices inferred
  Quiver q;
  q.vertices = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string arrow = text.substr(pos, comma - pos);
    const std::size_t gt = arrow.find('>');
    if (gt == std::string::npos) throw ValidationError("path-algebra: arrow '" + arrow + "' must look like s>t");
    try {
      const std::size_t s = std::stoul(arrow.substr(0, gt)), t = std::stoul(arrow.substr(gt + 1));
      q.arrows.emplace_back(s, t);
      q.vertices = std::max({q.vertices, s + 1, t + 1});
    } catch (const std::exception&) {
      throw ValidationError("path-algebra: arrow '" + arrow + "' must look like s>t");
    }
    pos = comma + 1;
  }
  return q;
}

}  // namespace

std::vector<GeneratedAlgebra> generate_algebras(const std::string& family,
                                                const std::vector<std::string>& params,
                                                std::uint64_t seed, std::size_t count,
                                                std::uint64_t max_elements) {
  Rng rng(seed);
  std::vector<GeneratedAlgebra> out;
  auto check = [&](const Algebra& a) {
    if (saturating_pow(a.p(), a.dim()) > max_elements)
      throw BudgetExceeded(family + ": p^dim exceeds the size cap");
  };
  if (family == "random") {
    AlgebraCaps caps;
    caps.max_elements = max_elements;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_algebra(rng, caps));
    return out;
  }
  GeneratedAlgebra g{"", Algebra::zero(2)};
  if (family == "triangular") {
    const std::size_t n = param(params, 0, family);
    const Residue p = prime_param(params, 1, family);
    g = {"triangular(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")", gen_triangular(n, p)};
  } else if (family == "truncated-poly") {
    const std::size_t n = param(params, 0, family);
    const Residue p = prime_param(params, 1, family);
    g = {"truncated-poly(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")", gen_truncated_poly(n, p)};
  } else if (family == "field") {
    const Residue p = prime_param(params, 0, family);
    const std::size_t k = param(params, 1, family);
    g = {"field(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")", field_algebra(p, k)};
  } else if (family == "matrix") {
    const std::size_t n = param(params, 0, family);
    const Residue p = prime_param(params, 1, family);
    g = {"matrix(n=" + std::to_string(n) + ",GF(" + std::to_string(p) + "))", full_matrix_algebra(p, n)};
  } else if (family == "path-algebra") {
    if (params.size() < 3) throw ValidationError("path-algebra: expects arrows, max-length, p");
    const Quiver q = parse_quiver(params[0]);
    const std::size_t len = param(params, 1, family);
    const Residue p = prime_param(params, 2, family);
    g = {"path-algebra(" + params[0] + ",len=" + std::to_string(len) + ",p=" + std::to_string(p) + ")",
         gen_path_algebra(q, len, p)};
  } else if (family == "trivial-ext") {
    const Residue p = prime_param(params, 0, family);
    const std::size_t k = param(params, 1, family), d = param(params, 2, family);
    const std::size_t twist = params.size() > 3 ? param(params, 3, family) : 0;
    g = {"trivial-ext(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ",d=" + std::to_string(d) +
             ",twist=" + std::to_string(twist) + ")",
         gen_trivial_ext(p, k, d, twist)};
  } else {
    throw ValidationError("unknown generator family '" + family + "'");
  }
  check(g.algebra);
  for (std::size_t i = 0; i < count; ++i) {
    GeneratedAlgebra copy = g;
    if (i > 0) {
      copy.algebra = scramble(g.algebra, rng);
      copy.description = "scramble(" + g.description + ")";
    }
    copy.algebra = copy.algebra.with_name(copy.description);
    out.push_back(std::move(copy));
  }
  return out;
}

}  // namespace semiloc

namespace semiloc {

Module simple_module(const AlgebraAnalysis& an, std::size_t block) {
  const SubmoduleData fa = principal_projective(an, block);
  const StructuralSeries s = structural_series(fa.module, an);
  return quotient_module(fa.module, s.radical).module;
}

Module indecomposable_injective(const AlgebraAnalysis& an, std::size_t block) {
  const AlgebraAnalysis op = opposite_analysis(an);
  const SubmoduleData af = principal_projective(op, block);
  return dual_module(af.module, an.algebra);
}

namespace {

GeneratedModule module_family(Rng& rng, const AlgebraAnalysis& an, const ModuleCaps& caps, int depth) {
  const Algebra& a = an.algebra;
  const std::size_t nb = an.blocks.size();
  for (int attempt = 0; attempt < 32; ++attempt) {
    const std::size_t family = rng() % (caps.allow_sums && depth == 0 ? 8 : 7);
    const std::size_t blk = nb == 0 ? 0 : rng() % nb;
    const std::string b = std::to_string(blk);
    GeneratedModule g{"", Module::zero(a)};
    switch (family) {
      case 0:
        g = {"regular", regular_module(a)};
        break;
      case 1:
        if (nb == 0) continue;
        g = {"projective(" + b + ")", principal_projective(an, blk).module};
        break;
      case 2:
        if (nb == 0) continue;
        g = {"simple(" + b + ")", simple_module(an, blk)};
        break;
      case 3:
        if (nb == 0) continue;
        g = {"injective(" + b + ")", indecomposable_injective(an, blk)};
        break;
      case 4: {
        // A / xA for a random x
        const Vec x = random_vector(rng, a.p(), a.dim());
        if (a.dim() > 0 && a.is_unit(x)) continue;
        g = {"cyclic-quotient", module_from_presentation(a, 1, {{x}}).module};
        break;
      }
      case 5: {
        const Module reg = regular_module(a);
        const Vec x = random_vector(rng, a.p(), a.dim());
        g = {"cyclic-submodule", submodule(reg, submodule_generated(reg, {x})).module};
        break;
      }
      case 6: {
        if (nb == 0) continue;
        // f·A modulo a random cyclic submodule of its radical
        const SubmoduleData fa = principal_projective(an, blk);
        const StructuralSeries s = structural_series(fa.module, an);
        if (s.radical.is_zero()) continue;
        Vec v(fa.module.dim(), 0);
        for (std::size_t r = 0; r < s.radical.dim(); ++r)
          vec_axpy(v, random_residue(rng, a.p()), s.radical.basis().row(r), a.p());
        g = {"projective-quotient(" + b + ")",
             quotient_module(fa.module, submodule_generated(fa.module, {v})).module};
        break;
      }
      case 7: {
        GeneratedModule x = module_family(rng, an, caps, depth + 1);
        GeneratedModule y = module_family(rng, an, caps, depth + 1);
        g = {"sum(" + x.description + "," + y.description + ")", direct_sum(x.module, y.module).module};
        break;
      }
    }
    if (g.module.dim() == 0 || g.module.dim() > caps.max_dim) continue;
    return g;
  }
  if (nb == 0) return {"zero", Module::zero(a)};
  return {"simple(0)", simple_module(an, 0)};
}

}  // namespace

GeneratedModule random_module(Rng& rng, const AlgebraAnalysis& an, const ModuleCaps& caps) {
  return module_family(rng, an, caps, 0);
}

}  // namespace semiloc

// ---------------------------------------------------------------------------
// Morphism families

namespace semiloc {

GeneratedMorphism triangular_inclusion(Residue p, std::size_t k, std::size_t n) {
  EmbeddedAlgebra ut = upper_triangular(field_algebra(p, k), n);
  return {"triangular-inclusion(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")",
          ut.inclusion, std::nullopt};
}

GeneratedMorphism field_regular_representation(Residue p, std::size_t k) {
  const Algebra f = field_algebra(p, k);
  const Algebra m = full_matrix_algebra(p, k);
  FpMatrix x(p, k * k, k);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t r = 0; r < k; ++r) {
      const Vec row = f.multiply(f.basis_vector(r), f.basis_vector(t));
      for (std::size_t s = 0; s < k; ++s) x(r * k + s, t) = row[s];
    }
  return {"field-regular(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")",
          AlgebraMorphism::make(f, m, std::move(x)), std::nullopt};
}

namespace {

AlgebraMorphism stack_morphisms(const Algebra& domain, const std::vector<AlgebraMorphism>& parts) {
  std::vector<Algebra> targets;
  FpMatrix m(domain.p(), 0, domain.dim());
  for (const auto& f : parts) {
    targets.push_back(f.codomain());
    m = m.vstack(f.matrix());
  }
  return AlgebraMorphism::make(domain, direct_product(targets).algebra, std::move(m));
}

GeneratedMorphism radical_projection(const GeneratedAlgebra& g) {
  const AlgebraAnalysis an = analyze(g.algebra);
  return {"radical-projection(" + g.description + ")", an.quotient.projection, std::nullopt};
}

GeneratedMorphism ideal_projection(Rng& rng, const GeneratedAlgebra& g) {
  const Algebra& a = g.algebra;
  const Subspace j = radical(a).radical;
  Vec x(a.dim(), 0);
  for (std::size_t r = 0; r < j.dim(); ++r) vec_axpy(x, random_residue(rng, a.p()), j.basis().row(r), a.p());
  const Subspace i = ideal_generated(a, {x});
  return {"ideal-projection(" + g.description + ",dimI=" + std::to_string(i.dim()) + ")",
          quotient_by_ideal(a, i).projection, std::nullopt};
}

}  // namespace

GeneratedMorphism random_local_morphism(Rng& rng, const AlgebraCaps& caps) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t family = rng() % 8;
    const Residue p = caps.primes[rng() % caps.primes.size()];
    switch (family) {
      case 0:
        return radical_projection(random_algebra(rng, caps));
      case 1:
        return ideal_projection(rng, random_algebra(rng, caps));
      case 2: {
        const std::size_t k = 1 + rng() % 2, n = 2 + rng() % 2;
        if (saturating_pow(p, k * n * (n + 1) / 2) > caps.max_elements) continue;
        return triangular_inclusion(p, k, n);
      }
      case 3: {
        const std::size_t k = 1 + rng() % 3;
        if (saturating_pow(p, k) > caps.max_elements) continue;
        return field_regular_representation(p, k);
      }
      case 4: {
        const GeneratedAlgebra g = random_algebra(rng, caps);
        const std::size_t copies = 2 + rng() % 2;
        std::vector<AlgebraMorphism> parts(copies, AlgebraMorphism::identity(g.algebra));
        return {"diagonal(" + std::to_string(copies) + "," + g.description + ")",
                stack_morphisms(g.algebra, parts), std::nullopt};
      }
      case 5: {
        const GeneratedAlgebra g = random_algebra(rng, caps);
        const GeneratedMorphism pi = radical_projection(g);
        return {"graph(" + g.description + ")",
                stack_morphisms(g.algebra, {AlgebraMorphism::identity(g.algebra), pi.morphism}), std::nullopt};
      }
      case 6: {
        AlgebraCaps small = caps;
        small.max_dim = 2;
        const GeneratedAlgebra g = random_algebra(rng, small);
        if (saturating_pow(g.algebra.p(), 4 * g.algebra.dim()) > caps.max_elements) continue;
        const GeneratedMorphism pi = radical_projection(g);
        return {"matrix-lift(n=2," + pi.description + ")", lift(pi.morphism, 2), std::nullopt};
      }
      case 7: {
        // radical projection followed by a diagonal of the quotient
        const GeneratedAlgebra g = random_algebra(rng, caps);
        const GeneratedMorphism pi = radical_projection(g);
        const Algebra& q = pi.morphism.codomain();
        if (q.dim() == 0) continue;
        const AlgebraMorphism diag =
            stack_morphisms(q, {AlgebraMorphism::identity(q), AlgebraMorphism::identity(q)});
        return {"composite(diagonal," + pi.description + ")", compose(diag, pi.morphism), std::nullopt};
      }
    }
  }
  return field_regular_representation(caps.primes.front(), 1);
}

GeneratedMorphism random_field_product_morphism(Rng& rng, const AlgebraCaps& caps) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    const GeneratedAlgebra g = random_algebra(rng, caps);
    const AlgebraAnalysis an = analyze(g.algebra);
    const auto pres = to_field_product(an);
    if (!pres) continue;
    const Residue p = g.algebra.p();
    std::vector<Algebra> factors;
    std::vector<FpMatrix> rows;
    std::string desc;
    auto add = [&](std::size_t i, bool extend) {
      const FpMatrix tau = pres->target.projections[i].matrix() * pres->morphism.matrix();
      if (!extend) {
        factors.push_back(pres->target.factors[i]);
        rows.push_back(tau);
        desc += "F" + std::to_string(i);
      } else {
        // GF(p) inside GF(p^2) as multiples of the unit
        const Algebra big = field_algebra(p, 2);
        const Residue u = inv_mod(pres->target.factors[i].unit()[0], p);
        FpMatrix m(p, 2, g.algebra.dim());
        for (std::size_t c = 0; c < g.algebra.dim(); ++c)
          for (std::size_t r = 0; r < 2; ++r) m(r, c) = mul_mod(mul_mod(tau(0, c), u, p), big.unit()[r], p);
        factors.push_back(big);
        rows.push_back(std::move(m));
        desc += "E" + std::to_string(i);
      }
      desc += ",";
    };
    const std::size_t b = pres->target.factors.size();
    for (std::size_t i = 0; i < b; ++i) {
      const bool can_extend = pres->target.factors[i].dim() == 1;
      add(i, can_extend && rng() % 3 == 0);
      if (rng() % 3 == 0) add(i, can_extend && rng() % 2 == 0);
    }
    if (b == 1 && factors.size() == 1 && rng() % 2 == 0) add(0, false);
    ProductAlgebra target = direct_product(factors);
    FpMatrix m(p, 0, g.algebra.dim());
    for (const auto& r : rows) m = m.vstack(r);
    desc.pop_back();
    return {"field-product(" + g.description + ";" + desc + ")",
            AlgebraMorphism::make(g.algebra, target.algebra, std::move(m)), std::move(target)};
  }
  throw BudgetExceeded("random_field_product_morphism: no algebra with commutative A/J found");
}

std::pair<GeneratedMorphism, GeneratedMorphism> random_morphism_pair(Rng& rng, const AlgebraCaps& caps,
                                                                      bool local_phi) {
  const GeneratedAlgebra g = random_algebra(rng, caps);
  const Algebra& a = g.algebra;
  if (!local_phi) {
    const GeneratedAlgebra h = random_algebra(rng, caps);
    if (saturating_pow(a.p(), a.dim() + h.algebra.dim()) > caps.max_elements || h.algebra.p() != a.p())
      return random_morphism_pair(rng, caps, true);
    const ProductAlgebra prod = direct_product(a, h.algebra);
    GeneratedMorphism phi{"factor-projection(" + g.description + "," + h.description + ")", prod.projections[0],
                          std::nullopt};
    GeneratedMorphism psi = radical_projection(g);
    return {std::move(phi), std::move(psi)};
  }
  // A -> A/I -> A/J with I ⊆ J
  const GeneratedMorphism phi = ideal_projection(rng, g);
  const Algebra& s = phi.morphism.codomain();
  const Subspace j = radical(a).radical;
  std::vector<Vec> imgs;
  for (std::size_t r = 0; r < j.dim(); ++r) imgs.push_back(phi.morphism.apply(j.basis().row(r)));
  const QuotientAlgebra q2 = quotient_by_ideal(s, Subspace::span(s.p(), s.dim(), imgs, s.id()));
  GeneratedMorphism psi{"radical-projection(" + phi.description + ")", q2.projection, std::nullopt};
  return {phi, std::move(psi)};
}

}  // namespace semiloc
