#pragma once

#include <cstddef>
#include <initializer_list>

#include "eef/numbers.hpp"

namespace eef {

// Dense integer matrix, row-major. Zero-dimensional shapes are legal values
// (a full-rank kernel is an n x 0 matrix).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j);
  const Int& at(std::size_t i, std::size_t j) const;

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> col(std::size_t j) const;

  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& x);

}  // namespace eef
