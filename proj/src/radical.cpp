#include "semiloc/radical.hpp"

#include <random>

#include "semiloc/errors.hpp"

namespace semiloc {

std::string to_string(RadicalMethod m) {
  return m == RadicalMethod::TraceForm ? "trace-form" : "brute-force";
}

namespace {

bool is_nilpotent(const Algebra& a, Vec x) {
  // x^(2^t) with 2^t >= dim
  for (std::size_t e = 1; e < a.dim(); e *= 2) x = a.multiply(x, x);
  return is_zero(x);
}

// Decides whether 1 - a x is a unit for every a, walking a through GF(p)^n
// as a base-p counter so that I - L_{ax} changes by one L_{b_i x} per digit step.
class QuasiRegularity {
 public:
  QuasiRegularity(const Algebra& alg, const Vec& x) : n_(alg.dim()), p_(alg.p()) {
    for (std::size_t i = 0; i < n_; ++i) m_.push_back(alg.left_multiplication(alg.multiply(alg.basis_vector(i), x)));
    if (p_ == 2 && n_ <= 64) {
      bits_.assign(n_, std::vector<std::uint64_t>(n_, 0));
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t r = 0; r < n_; ++r)
          for (std::size_t c = 0; c < n_; ++c)
            if (m_[i](r, c)) bits_[i][r] |= std::uint64_t{1} << c;
    }
  }

  bool unit_at(std::span<const Residue> a) const {
    FpMatrix t = FpMatrix::identity(p_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (a[i]) t.add_scaled(m_[i], neg_mod(a[i], p_));
    return is_nonsingular(t);
  }

  bool all_units() const {
    const std::uint64_t total = saturating_pow(p_, n_);
    Vec digits(n_, 0);
    if (!bits_.empty()) {
      std::vector<std::uint64_t> t(n_);
      for (std::size_t r = 0; r < n_; ++r) t[r] = std::uint64_t{1} << r;
      for (std::uint64_t step = 0; step < total; ++step) {
        if (!bits_full_rank(t)) return false;
        for (std::size_t i = 0; i < n_; ++i) {
          for (std::size_t r = 0; r < n_; ++r) t[r] ^= bits_[i][r];
          digits[i] ^= 1;
          if (digits[i]) break;
        }
      }
      return true;
    }
    FpMatrix t = FpMatrix::identity(p_, n_);
    for (std::uint64_t step = 0; step < total; ++step) {
      if (!is_nonsingular(t)) return false;
      for (std::size_t i = 0; i < n_; ++i) {
        // a_i += 1 (mod p) always changes T by -M_i; carry on wrap-around
        t.add_scaled(m_[i], p_ - 1);
        digits[i] = digits[i] + 1 == p_ ? 0 : digits[i] + 1;
        if (digits[i] != 0) break;
      }
    }
    return true;
  }

 private:
  static bool bits_full_rank(std::vector<std::uint64_t> rows) {
    const std::size_t n = rows.size();
    for (std::size_t col = 0; col < n; ++col) {
      const std::uint64_t bit = std::uint64_t{1} << col;
      std::size_t piv = col;
      while (piv < n && !(rows[piv] & bit)) ++piv;
      if (piv == n) return false;
      std::swap(rows[piv], rows[col]);
      for (std::size_t r = col + 1; r < n; ++r)
        if (rows[r] & bit) rows[r] ^= rows[col];
    }
    return true;
  }

  std::size_t n_;
  Residue p_;
  std::vector<FpMatrix> m_;
  std::vector<std::vector<std::uint64_t>> bits_;
};

}  // namespace

RadicalReport radical_bruteforce(const Algebra& a, std::uint64_t budget, std::uint64_t seed) {
  const std::size_t n = a.dim();
  const Residue p = a.p();
  const std::uint64_t total = saturating_pow(p, n);
  if (total > budget)
    throw BudgetExceeded("radical_bruteforce: p^dim = " + std::to_string(total) +
                         " exceeds the enumeration budget " + std::to_string(budget));
  std::mt19937_64 rng(seed);
  // Probe order i -> (i*g + c) mod total is a permutation since p does not divide g.
  std::uint64_t g = total > 1 ? rng() % total : 1;
  if (g % p == 0) g += 1;
  const std::uint64_t c0 = total > 1 ? rng() % total : 0;
  constexpr std::uint64_t kProbes = 48;

  auto member = [&](const Vec& x) {
    if (!is_nilpotent(a, x)) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_nilpotent(a, a.multiply(a.basis_vector(i), x))) return false;
    QuasiRegularity q(a, x);
    Vec probe(n);
    for (std::uint64_t s = 0; s < std::min(kProbes, total); ++s) {
      decode_index(static_cast<std::uint64_t>((static_cast<unsigned __int128>(s) * g + c0) % total), p, probe);
      if (!q.unit_at(probe)) return false;
    }
    return q.all_units();
  };

  Subspace w = Subspace::zero(p, n, a.id());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::size_t> comp = w.complement_columns();
    const std::size_t m = comp.size();
    // Normalized representatives: coordinate comp[lead] = 1, later free coordinates arbitrary.
    for (std::size_t lead = m; lead-- > 0 && !grew;) {
      const std::size_t free = m - 1 - lead;
      const std::uint64_t count = saturating_pow(p, free);
      Vec digits(free);
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        decode_index(idx, p, digits);
        Vec x(n, 0);
        x[comp[lead]] = 1;
        for (std::size_t f = 0; f < free; ++f) x[comp[lead + 1 + f]] = digits[f];
        if (member(x)) {
          w = w.sum(ideal_generated(a, {x}));
          grew = true;
          break;
        }
      }
    }
  }
  return RadicalReport{w, nilpotency_index(a, w), RadicalMethod::BruteForce};
}

RadicalReport radical_trace(const Algebra& a) {
  const std::size_t n = a.dim();
  const Residue p = a.p();
  if (static_cast<std::size_t>(p) <= n)
    throw CharTooSmall("radical_trace: needs p > dim (p = " + std::to_string(p) +
                       ", dim = " + std::to_string(n) + ")");
  Vec tr(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) tr[k] = add_mod(tr[k], a.constant(k, j, j), p);
  // form(i, j) = Tr(L_{b_i b_j}); the radical is {x : x^T form = 0}
  FpMatrix formt(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Residue s = 0;
      for (std::size_t k = 0; k < n; ++k) s = add_mod(s, mul_mod(a.constant(i, j, k), tr[k], p), p);
      formt(j, i) = s;
    }
  Subspace j = n == 0 ? Subspace::zero(p, 0, a.id()) : Subspace(reduce(formt).kernel, a.id());
  return RadicalReport{j, nilpotency_index(a, j), RadicalMethod::TraceForm};
}

RadicalReport radical(const Algebra& a, std::uint64_t budget) {
  if (static_cast<std::size_t>(a.p()) <= a.dim()) return radical_bruteforce(a, budget);
  return radical_trace(a);
}

std::size_t nilpotency_index(const Algebra& a, const Subspace& ideal) {
  Subspace power = ideal;
  for (std::size_t t = 1; t <= a.dim() + 1; ++t) {
    if (power.is_zero()) return t;
    power = ideal_product(a, power, ideal);
  }
  throw ValidationError("nilpotency_index: ideal is not nilpotent");
}

QuotientAlgebra semisimple_quotient(const Algebra& a, const RadicalReport& report) {
  return quotient_by_ideal(a, report.radical);
}

QuotientAlgebra semisimple_quotient(const Algebra& a) { return semisimple_quotient(a, radical(a)); }

Vec lift_idempotent(const QuotientAlgebra& q, std::span<const Residue> ebar,
                    std::size_t nilpotency_index) {
  const Algebra& a = q.projection.domain();
  if (!q.algebra.is_idempotent(ebar)) throw ValidationError("lift_idempotent: not an idempotent of A/J");
  const Residue p = a.p();
  Vec e = q.lift(ebar);
  std::size_t rounds = 0;
  while ((std::size_t{1} << rounds) < nilpotency_index) ++rounds;
  for (std::size_t r = 0; r < rounds; ++r) {
    Vec e2 = a.multiply(e, e);
    Vec e3 = a.multiply(e2, e);
    e = vec_sub(vec_scale(e2, 3 % p, p), vec_scale(e3, 2 % p, p), p);
  }
  if (!a.is_idempotent(e) || q.projection.apply(e) != Vec(ebar.begin(), ebar.end()))
    throw Error("lift_idempotent: refinement did not converge; radical index too small");
  return e;
}

}  // namespace semiloc
