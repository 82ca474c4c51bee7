#include "semiloc/fp_poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "semiloc/errors.hpp"

namespace semiloc {

FpPoly::FpPoly(Residue p) : p_(p) { require_prime(p); }

FpPoly::FpPoly(Residue p, std::vector<long long> coefficients) : p_(p) {
  require_prime(p);
  c_.reserve(coefficients.size());
  for (long long v : coefficients) c_.push_back(reduce_signed(v, p));
  trim();
}

FpPoly FpPoly::from_residues(Residue p, Vec coefficients) {
  FpPoly f(p);
  for (auto& c : coefficients) c %= p;
  f.c_ = std::move(coefficients);
  f.trim();
  return f;
}

FpPoly FpPoly::monomial(Residue p, std::size_t degree, Residue c) {
  FpPoly f(p);
  f.c_.assign(degree + 1, 0);
  f.c_[degree] = c % p;
  f.trim();
  return f;
}

FpPoly FpPoly::constant(Residue p, Residue c) { return monomial(p, 0, c); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(lead(), p_));
}

FpPoly FpPoly::derivative() const {
  FpPoly d(p_);
  if (c_.size() <= 1) return d;
  d.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = mul_mod(c_[i], i % p_, p_);
  d.trim();
  return d;
}

Residue FpPoly::eval(Residue x) const {
  Residue acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p_), c_[i], p_);
  return acc;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  if (o.p_ != p_) throw ModulusMismatch("polynomial sum over different moduli");
  FpPoly r(p_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = add_mod(coeff(i), o.coeff(i), p_);
  r.trim();
  return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  if (o.p_ != p_) throw ModulusMismatch("polynomial difference over different moduli");
  FpPoly r(p_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = sub_mod(coeff(i), o.coeff(i), p_);
  r.trim();
  return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (o.p_ != p_) throw ModulusMismatch("polynomial product over different moduli");
  FpPoly r(p_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = add_mod(r.c_[i + j], mul_mod(c_[i], o.c_[j], p_), p_);
  }
  r.trim();
  return r;
}

FpPoly FpPoly::scaled(Residue s) const {
  FpPoly r(*this);
  for (auto& c : r.c_) c = mul_mod(c, s % p_, p_);
  r.trim();
  return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.p_ != p_) throw ModulusMismatch("polynomial division over different moduli");
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  FpPoly q(p_), r(*this);
  if (r.degree() < d.degree()) return {q, r};
  const Residue inv = inv_mod(d.lead(), p_);
  const std::size_t dd = d.c_.size() - 1;
  q.c_.assign(r.c_.size() - dd, 0);
  for (std::size_t i = r.c_.size(); i-- > dd;) {
    const Residue coef = mul_mod(r.c_[i], inv, p_);
    if (coef == 0) continue;
    q.c_[i - dd] = coef;
    for (std::size_t j = 0; j <= dd; ++j)
      r.c_[i - dd + j] = sub_mod(r.c_[i - dd + j], mul_mod(coef, d.c_[j], p_), p_);
  }
  q.trim();
  r.trim();
  return {q, r};
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const FpPoly& a, const FpPoly& b) {
  const Residue p = a.p();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1(p);
  FpPoly t0(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FpPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Residue inv = inv_mod(r0.lead(), p);
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
  FpPoly result = FpPoly::constant(base.p(), 1) % m;
  FpPoly b = base % m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return result;
}

namespace {

// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f) {
  const Residue p = f.p();
  std::vector<std::pair<FpPoly, unsigned>> out;
  if (f.degree() <= 0) return out;
  const FpPoly one = FpPoly::constant(p, 1);
  FpPoly c = gcd(f, f.derivative());
  FpPoly w = f / c;
  unsigned i = 1;
  while (w != one) {
    FpPoly y = gcd(w, c);
    FpPoly z = w / y;
    if (z != one) out.push_back({z.monic(), i});
    ++i;
    w = y;
    c = c / y;
  }
  if (c != one) {
    // c is a p-th power: take the root coefficientwise (a^(1/p) = a in GF(p)).
    Vec root((c.coefficients().size() - 1) / p + 1, 0);
    for (std::size_t k = 0; k < c.coefficients().size(); k += p) root[k / p] = c.coefficients()[k];
    FpPoly r = FpPoly::from_residues(p, root).monic();
    for (auto& [g, m] : squarefree_decomposition(r)) out.push_back({g, m * p});
  }
  return out;
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<FpPoly, std::size_t>> distinct_degree(const FpPoly& f) {
  const Residue p = f.p();
  const FpPoly x = FpPoly::x(p);
  const FpPoly one = FpPoly::constant(p, 1);
  std::vector<std::pair<FpPoly, std::size_t>> out;
  FpPoly rest = f;
  FpPoly h = x % rest;
  std::size_t d = 1;
  while (rest.degree() >= static_cast<long>(2 * d)) {
    h = powmod(h, p, rest);
    FpPoly g = gcd(rest, h - x);
    if (g != one) {
      out.push_back({g, d});
      rest = rest / g;
      h = h % rest;
    }
    ++d;
  }
  if (rest.degree() > 0) out.push_back({rest, static_cast<std::size_t>(rest.degree())});
  return out;
}

FpPoly random_below(std::mt19937_64& rng, Residue p, long degree) {
  Vec c(static_cast<std::size_t>(std::max(degree, 1L)));
  for (auto& v : c) v = static_cast<Residue>(rng() % p);
  return FpPoly::from_residues(p, std::move(c));
}

// Equal-degree splitting (Cantor-Zassenhaus) of a product of degree-d irreducibles.
void equal_degree(const FpPoly& g, std::size_t d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (static_cast<std::size_t>(g.degree()) == d) {
    out.push_back(g);
    return;
  }
  const Residue p = g.p();
  const FpPoly one = FpPoly::constant(p, 1);
  for (;;) {
    FpPoly a = random_below(rng, p, g.degree());
    if (a.degree() <= 0) continue;
    FpPoly candidate(p);
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)) lands in GF(2).
      FpPoly t = a, acc = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = mulmod(t, t, g);
        acc = acc + t;
      }
      candidate = acc;
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
      FpPoly frob = a, norm = a;
      for (std::size_t i = 1; i < d; ++i) {
        frob = powmod(frob, p, g);
        norm = mulmod(norm, frob, g);
      }
      candidate = powmod(norm, (p - 1) / 2, g) - one;
    }
    FpPoly h = gcd(g, candidate);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  for (std::size_t i = ca.size(); i-- > 0;)
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  return false;
}

}  // namespace

std::vector<FactorPower> factor(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
  std::vector<FactorPower> out;
  std::mt19937_64 rng(0x5eed5eedULL);
  for (auto& [part, mult] : squarefree_decomposition(f.monic())) {
    for (auto& [g, d] : distinct_degree(part)) {
      std::vector<FpPoly> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({piece.monic(), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.factor != b.factor) return poly_less(a.factor, b.factor);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const FpPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const Residue p = f.p();
  if (f.degree() <= 3) {
    for (Residue x = 0; x < p; ++x)
      if (f.eval(x) == 0) return false;
    return true;
  }
  FpPoly g = f.monic();
  if (gcd(g, g.derivative()).degree() != 0) return false;
  auto parts = distinct_degree(g);
  return parts.size() == 1 && parts[0].second == static_cast<std::size_t>(g.degree());
}

FpPoly first_irreducible(Residue p, std::size_t degree) {
  if (degree == 0) throw std::domain_error("no irreducible of degree 0");
  const std::uint64_t count = saturating_pow(p, degree);
  Vec c(degree + 1, 0);
  c[degree] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    decode_index(idx, p, std::span<Residue>(c.data(), degree));
    FpPoly f = FpPoly::from_residues(p, c);
    if (is_irreducible(f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace semiloc
