#include "semiloc/fp_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "semiloc/errors.hpp"

namespace semiloc {

FpMatrix::FpMatrix(Residue p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_prime(p);
}

FpMatrix FpMatrix::identity(Residue p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(Residue p,
                             std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  FpMatrix m(p, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionMismatch("ragged matrix literal");
    std::size_t c = 0;
    for (long long v : row) m(r, c++) = reduce_signed(v, p);
    ++r;
  }
  return m;
}

FpMatrix FpMatrix::from_rows(Residue p, const std::vector<Vec>& rows, std::size_t cols) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % p;
  }
  return m;
}

FpMatrix FpMatrix::from_columns(Residue p, const std::vector<Vec>& columns, std::size_t rows) {
  FpMatrix m(p, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r] % p;
  }
  return m;
}

Residue FpMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return data_[r * cols_ + c];
}

void FpMatrix::set(std::size_t r, std::size_t c, long long value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  data_[r * cols_ + c] = reduce_signed(value, p_);
}

Vec FpMatrix::row_vec(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec FpMatrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (p_ != rhs.p_) throw ModulusMismatch("matrix product over different moduli");
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  FpMatrix out(p_, rows_, rhs.cols_);
  // Accumulate in 64 bits and reduce once per row chunk.
  std::vector<std::uint64_t> acc(rhs.cols_);
  const std::uint64_t limit = std::uint64_t(1) << 62;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const Residue a = (*this)(r, k);
      if (a == 0) continue;
      const Residue* brow = rhs.data_.data() + k * rhs.cols_;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        acc[c] += static_cast<std::uint64_t>(a) * brow[c];
        if (acc[c] >= limit) acc[c] %= p_;
      }
    }
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) = static_cast<Residue>(acc[c] % p_);
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (p_ != rhs.p_) throw ModulusMismatch("matrix sum over different moduli");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = add_mod(data_[i], rhs.data_[i], p_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (p_ != rhs.p_) throw ModulusMismatch("matrix difference over different moduli");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatch("matrix difference shape mismatch");
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = sub_mod(data_[i], rhs.data_[i], p_);
  return out;
}

FpMatrix FpMatrix::scaled(Residue s) const {
  FpMatrix out(*this);
  for (auto& x : out.data_) x = mul_mod(x, s % p_, p_);
  return out;
}

void FpMatrix::add_scaled(const FpMatrix& other, Residue s) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("shape mismatch");
  vec_axpy(data_, s % p_, other.data_, p_);
}

Vec FpMatrix::apply(std::span<const Residue> x) const {
  if (x.size() != cols_) throw DimensionMismatch("apply: vector length");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const Residue* row_ptr = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += static_cast<std::uint64_t>(row_ptr[c]) * x[c];
      if (acc >= (std::uint64_t(1) << 62)) acc %= p_;
    }
    out[r] = static_cast<Residue>(acc % p_);
  }
  return out;
}

Vec FpMatrix::apply_left(std::span<const Residue> x) const {
  if (x.size() != rows_) throw DimensionMismatch("apply_left: vector length");
  Vec out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    if (x[r] != 0) vec_axpy(out, x[r], row(r), p_);
  return out;
}

FpMatrix FpMatrix::vstack(const FpMatrix& below) const {
  if (p_ != below.p_) throw ModulusMismatch("vstack over different moduli");
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw DimensionMismatch("vstack column mismatch");
  FpMatrix out(p_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

FpMatrix FpMatrix::hstack(const FpMatrix& right) const {
  if (p_ != right.p_) throw ModulusMismatch("hstack over different moduli");
  if (rows_ != right.rows_) throw DimensionMismatch("hstack row mismatch");
  FpMatrix out(p_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
  }
  return out;
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> indices) const {
  FpMatrix out(p_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    auto src = row(indices[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

FpMatrix FpMatrix::unflatten(Residue p, std::span<const Residue> flat, std::size_t rows,
                             std::size_t cols) {
  if (flat.size() != rows * cols) throw DimensionMismatch("unflatten: size mismatch");
  FpMatrix m(p, rows, cols);
  std::copy(flat.begin(), flat.end(), m.data_.begin());
  return m;
}

bool FpMatrix::is_zero() const { return semiloc::is_zero(data_); }

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> gauss_jordan(FpMatrix& m) {
  const Residue p = m.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    const Residue inv = inv_mod(m(r, c), p);
    if (inv != 1)
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = mul_mod(m(r, j), inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Residue f = neg_mod(m(i, c), p);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) = add_mod(m(i, j), mul_mod(f, m(r, j), p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

FpMatrix kernel_from_rref(const FpMatrix& rref, const std::vector<std::size_t>& pivots) {
  const Residue p = rref.p();
  const std::size_t n = rref.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = neg_mod(rref(r, f), p);
    basis.push_back(std::move(x));
  }
  FpMatrix k = FpMatrix::from_rows(p, basis, n);
  // Canonicalize: the kernel of an rref system is returned in rref form.
  gauss_jordan(k);
  return k;
}

}  // namespace

Reduction reduce(const FpMatrix& m) {
  Reduction out;
  out.rref = m;
  out.pivots = gauss_jordan(out.rref);
  out.rank = out.pivots.size();
  out.kernel = kernel_from_rref(out.rref, out.pivots);
  return out;
}

std::size_t rank(const FpMatrix& m) {
  FpMatrix copy = m;
  return gauss_jordan(copy).size();
}

std::optional<AffineSolution> solve_affine(const FpMatrix& m, std::span<const Residue> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length");
  FpMatrix aug(m.p(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r] % m.p();
  }
  auto pivots = gauss_jordan(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(m.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, m.cols());
  // Drop the augmented column to recover the rref of m itself.
  FpMatrix rref(m.p(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rref(r, c) = aug(r, c);
  sol.kernel = kernel_from_rref(rref, pivots);
  return sol;
}

std::optional<Vec> solve(const FpMatrix& m, std::span<const Residue> b) {
  auto sol = solve_affine(m, b);
  if (!sol) return std::nullopt;
  return std::move(sol->particular);
}

std::optional<FpMatrix> invert(const FpMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invert: matrix is not square");
  const std::size_t n = m.rows();
  FpMatrix aug = m.hstack(FpMatrix::identity(m.p(), n));
  auto pivots = gauss_jordan(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  FpMatrix inv(m.p(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

bool is_nonsingular(const FpMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const std::size_t n = m.rows();
  const Residue p = m.p();
  if (p == 2 && n <= 64) {
    std::uint64_t rows[64];
    for (std::size_t r = 0; r < n; ++r) {
      std::uint64_t bits = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (m(r, c)) bits |= std::uint64_t(1) << c;
      rows[r] = bits;
    }
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint64_t mask = std::uint64_t(1) << c;
      std::size_t pivot = n;
      for (std::size_t r = c; r < n; ++r)
        if (rows[r] & mask) {
          pivot = r;
          break;
        }
      if (pivot == n) return false;
      std::swap(rows[c], rows[pivot]);
      for (std::size_t r = c + 1; r < n; ++r)
        if (rows[r] & mask) rows[r] ^= rows[c];
    }
    return true;
  }
  FpMatrix a = m;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r)
      if (a(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return false;
    if (pivot != c)
      for (std::size_t j = c; j < n; ++j) std::swap(a(pivot, j), a(c, j));
    const Residue inv = inv_mod(a(c, c), p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Residue f = neg_mod(mul_mod(a(r, c), inv, p), p);
      for (std::size_t j = c; j < n; ++j)
        if (a(c, j) != 0) a(r, j) = add_mod(a(r, j), mul_mod(f, a(c, j), p), p);
    }
  }
  return true;
}

}  // namespace semiloc
