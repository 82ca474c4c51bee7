#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace semiloc {

/// A residue in [0, p). Moduli are word-size primes below 2^31, so a product
/// of two residues always fits in 64 bits.
using Residue = std::uint32_t;

/// Coordinate vector over GF(p).
using Vec = std::vector<Residue>;

inline constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

bool is_prime(std::uint64_t n);

/// Throws ValidationError unless p is a prime below 2^31.
void require_prime(std::uint32_t p);

inline Residue add_mod(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}
inline Residue sub_mod(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + p - b; }
inline Residue neg_mod(Residue a, Residue p) { return a == 0 ? 0 : p - a; }
inline Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p);

/// Multiplicative inverse; throws std::domain_error on zero.
Residue inv_mod(Residue a, Residue p);

Residue reduce_signed(long long v, Residue p);

// Vector helpers. All operands share the modulus p and length.
bool is_zero(std::span<const Residue> v);
Vec vec_add(std::span<const Residue> a, std::span<const Residue> b, Residue p);
Vec vec_sub(std::span<const Residue> a, std::span<const Residue> b, Residue p);
Vec vec_scale(std::span<const Residue> a, Residue s, Residue p);
/// y += s * x
void vec_axpy(std::span<Residue> y, Residue s, std::span<const Residue> x, Residue p);
Vec unit_vector(std::size_t n, std::size_t i);

/// Decode a base-p counter into a coordinate vector (least significant first).
void decode_index(std::uint64_t index, Residue p, std::span<Residue> out);

/// p^n, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::size_t n);

}  // namespace semiloc
