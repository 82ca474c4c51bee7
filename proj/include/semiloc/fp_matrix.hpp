#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "semiloc/prime_field.hpp"

namespace semiloc {

/// Dense row-major matrix over GF(p). Entries are always reduced.
class FpMatrix {
 public:
  FpMatrix() = default;
  /// Zero matrix. Validates that p is prime.
  FpMatrix(Residue p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(Residue p, std::size_t n);
  /// Rows may hold arbitrary signed integers; they are reduced mod p.
  static FpMatrix from_rows(Residue p, std::initializer_list<std::initializer_list<long long>> rows);
  static FpMatrix from_rows(Residue p, const std::vector<Vec>& rows, std::size_t cols);
  /// Matrix whose columns are the given vectors.
  static FpMatrix from_columns(Residue p, const std::vector<Vec>& cols, std::size_t rows);

  Residue p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, long long value);

  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const;
  Vec column(std::size_t c) const;
  const std::vector<Residue>& data() const { return data_; }

  FpMatrix transpose() const;
  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix scaled(Residue s) const;
  /// this += s * other
  void add_scaled(const FpMatrix& other, Residue s);

  /// Column convention: M * x.
  Vec apply(std::span<const Residue> x) const;
  /// Row convention: x * M.
  Vec apply_left(std::span<const Residue> x) const;

  /// Stack rows of `below` under this matrix.
  FpMatrix vstack(const FpMatrix& below) const;
  FpMatrix hstack(const FpMatrix& right) const;
  FpMatrix select_rows(std::span<const std::size_t> indices) const;
  /// Row-major flattening as a 1 x (rows*cols) vector.
  Vec flatten() const { return data_; }
  static FpMatrix unflatten(Residue p, std::span<const Residue> flat, std::size_t rows, std::size_t cols);

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) = default;

 private:
  Residue p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

/// Output of Gauss-Jordan elimination.
struct Reduction {
  FpMatrix rref;                    ///< same shape as the input
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero rref row
  FpMatrix kernel;                  ///< rows span {x : m * x^T = 0}, in rref form
};

/// Pivoting is deterministic: first column with a nonzero entry, smallest row
/// index among candidates.
Reduction reduce(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Some x with m * x = b (free variables set to zero), or nullopt.
std::optional<Vec> solve(const FpMatrix& m, std::span<const Residue> b);

/// Solution set of m * x = b as particular solution plus kernel rows.
struct AffineSolution {
  Vec particular;
  FpMatrix kernel;
};
std::optional<AffineSolution> solve_affine(const FpMatrix& m, std::span<const Residue> b);

std::optional<FpMatrix> invert(const FpMatrix& m);

/// Rank test with early exit; uses bit-packed rows when p = 2.
bool is_nonsingular(const FpMatrix& m);

}  // namespace semiloc
