#include "semiloc/prime_field.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "semiloc/errors.hpp"

namespace semiloc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint32_t p) {
  if (p > kMaxModulus || !is_prime(p))
    throw ValidationError("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
  Residue result = 1 % p;
  Residue base = a % p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

Residue inv_mod(Residue a, Residue p) {
  if (a % p == 0) throw std::domain_error("inverse of zero residue");
  // Extended Euclid on signed 64-bit values.
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce_signed(t, p);
}

Residue reduce_signed(long long v, Residue p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += p;
  return static_cast<Residue>(m);
}

bool is_zero(std::span<const Residue> v) {
  for (Residue x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_add(std::span<const Residue> a, std::span<const Residue> b, Residue p) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = add_mod(a[i], b[i], p);
  return out;
}

Vec vec_sub(std::span<const Residue> a, std::span<const Residue> b, Residue p) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sub_mod(a[i], b[i], p);
  return out;
}

Vec vec_scale(std::span<const Residue> a, Residue s, Residue p) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul_mod(a[i], s, p);
  return out;
}

void vec_axpy(std::span<Residue> y, Residue s, std::span<const Residue> x, Residue p) {
  if (y.size() != x.size()) throw DimensionMismatch("vector lengths differ");
  if (s == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] = add_mod(y[i], mul_mod(s, x[i], p), p);
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

void decode_index(std::uint64_t index, Residue p, std::span<Residue> out) {
  for (auto& x : out) {
    x = static_cast<Residue>(index % p);
    index /= p;
  }
}

std::uint64_t saturating_pow(std::uint64_t p, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

}  // namespace semiloc
