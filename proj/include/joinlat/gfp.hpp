#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace joinlat {

/// Dense matrix over the prime field F_p. Entries are kept reduced in [0, p).
class MatrixFp {
public:
  MatrixFp() = default;
  MatrixFp(std::size_t rows, std::size_t cols, std::int64_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  static MatrixFp identity(std::size_t n, std::int64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t prime() const { return p_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) {
    data_[r * cols_ + c] = ((v % p_) + p_) % p_;
  }

  friend MatrixFp operator*(const MatrixFp &a, const MatrixFp &b);
  friend bool operator==(const MatrixFp &, const MatrixFp &) = default;

  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  bool is_identity() const;

  /// Basis of {x : A x = 0}, each vector of length cols().
  std::vector<std::vector<std::int64_t>> nullspace() const;

  std::vector<std::vector<std::int64_t>> to_rows() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::int64_t p_ = 2;
  std::vector<std::int64_t> data_;
};

std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

} // namespace joinlat
