#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semiloc/prime_field.hpp"

namespace semiloc {

/// Univariate polynomial over GF(p), coefficients stored lowest degree first
/// with no trailing zeros. The zero polynomial has no coefficients.
class FpPoly {
 public:
  explicit FpPoly(Residue p = 2);
  FpPoly(Residue p, std::vector<long long> coefficients);
  static FpPoly from_residues(Residue p, Vec coefficients);
  static FpPoly monomial(Residue p, std::size_t degree, Residue c = 1);
  static FpPoly x(Residue p) { return monomial(p, 1); }
  static FpPoly constant(Residue p, Residue c);

  Residue p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Residue lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const Vec& coefficients() const { return c_; }

  FpPoly monic() const;
  FpPoly derivative() const;
  Residue eval(Residue x) const;

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(Residue s) const;
  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }
  FpPoly operator/(const FpPoly& d) const { return divmod(d).first; }

  std::string to_string() const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

 private:
  void trim();
  Residue p_;
  Vec c_;
};

/// Monic gcd (zero if both are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct ExtendedGcd {
  FpPoly g, s, t;
};
ExtendedGcd extended_gcd(const FpPoly& a, const FpPoly& b);

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

struct FactorPower {
  FpPoly factor;  ///< monic irreducible
  unsigned multiplicity;
};

/// Complete factorization into monic irreducibles, sorted by degree then
/// coefficients. The leading coefficient of f is the remaining unit.
/// Throws std::domain_error on the zero polynomial.
std::vector<FactorPower> factor(const FpPoly& f);

/// Irreducibility certificate: root search for degree <= 3, distinct-degree
/// factorization above.
bool is_irreducible(const FpPoly& f);

/// First monic irreducible of the given degree in lexicographic coefficient order.
FpPoly first_irreducible(Residue p, std::size_t degree);

}  // namespace semiloc
