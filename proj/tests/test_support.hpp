#pragma once

#include <random>

#include "semiloc/fp_matrix.hpp"
#include "semiloc/fp_poly.hpp"

namespace semiloc::testing {

inline Vec random_vec(std::mt19937_64& rng, Residue p, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = static_cast<Residue>(rng() % p);
  return v;
}

inline FpMatrix random_matrix(std::mt19937_64& rng, Residue p, std::size_t r, std::size_t c) {
  FpMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Residue>(rng() % p);
  return m;
}

inline FpPoly random_poly(std::mt19937_64& rng, Residue p, std::size_t max_degree) {
  Vec c = random_vec(rng, p, rng() % (max_degree + 1) + 1);
  return FpPoly::from_residues(p, std::move(c));
}

}  // namespace semiloc::testing
