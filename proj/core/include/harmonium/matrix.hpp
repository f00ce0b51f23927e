#pragma once

#include <cstddef>
#include <vector>

#include "harmonium/rational.hpp"

namespace harmonium {

/// Row-major dense matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntegerMatrix transpose() const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

using RationalRow = std::vector<Rational>;

/// Rank by fraction-exact Gaussian elimination. Rows may have any common length.
std::size_t exact_rank(std::vector<RationalRow> rows);
std::size_t exact_rank(const IntegerMatrix& m);

}  // namespace harmonium
