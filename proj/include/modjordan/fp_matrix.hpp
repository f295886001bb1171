#pragma once

#include <cstddef>
#include <vector>

#include "modjordan/arith.hpp"

namespace modjordan {

/// Dense row-major matrix over F_p with entries kept in [0, p).
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, Int p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int prime() const { return p_; }

  Int at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Stores value reduced mod p.
  void set(std::size_t i, std::size_t j, Int value);

  /// Rank by Gaussian elimination; pivot is the first nonzero entry in
  /// column order.
  std::size_t rank() const;

  /// Determinant of a square matrix; the 0x0 determinant is 1.
  Int determinant() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Int p_;
  std::vector<Int> data_;
};

}  // namespace modjordan
