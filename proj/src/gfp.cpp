#include "joinlat/gfp.hpp"

#include <utility>

namespace joinlat {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = ((a % p) + p) % p, s0 = 0, s1 = 1;
  while (r1) {
    std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return ((s0 % p) + p) % p;
}

MatrixFp MatrixFp::identity(std::size_t n, std::int64_t p) {
  MatrixFp m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFp operator*(const MatrixFp &a, const MatrixFp &b) {
  MatrixFp out(a.rows_, b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) acc = (acc + a(i, k) * b(k, j)) % a.p_;
      out.data_[i * out.cols_ + j] = acc;
    }
  return out;
}

bool MatrixFp::is_identity() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::int64_t> &m, std::size_t rows,
                                    std::size_t cols, std::int64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m[r * cols + k], m[pivot * cols + k]);
    const std::int64_t inv = inverse_mod(m[r * cols + c], p);
    for (std::size_t k = 0; k < cols; ++k) m[r * cols + k] = m[r * cols + k] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      const std::int64_t f = m[i * cols + c];
      for (std::size_t k = 0; k < cols; ++k)
        m[i * cols + k] = ((m[i * cols + k] - f * m[r * cols + k]) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t MatrixFp::rank() const {
  auto m = data_;
  return row_reduce(m, rows_, cols_, p_).size();
}

std::vector<std::vector<std::int64_t>> MatrixFp::nullspace() const {
  auto m = data_;
  const auto pivots = row_reduce(m, rows_, cols_, p_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = (p_ - m[i * cols_ + free]) % p_;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<std::int64_t>> MatrixFp::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

} // namespace joinlat
