#include "modjordan/fp_matrix.hpp"

#include <utility>

#include "modjordan/error.hpp"

namespace modjordan {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Int p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

void FpMatrix::set(std::size_t i, std::size_t j, Int value) { data_[i * cols_ + j] = mod_floor(value, p_); }

namespace {

// Reduces m in place to row echelon form; returns (rank, determinant sign
// and pivot product) where the determinant is only meaningful when square.
std::pair<std::size_t, Int> eliminate(std::vector<Int>& m, std::size_t rows, std::size_t cols, Int p) {
  std::size_t rank = 0;
  Int det = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
      det = (p - det) % p;
    }
    const Int lead = m[rank * cols + c];
    det = det * lead % p;
    const Int inv = inverse_mod(lead, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int f = m[i * cols + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m[i * cols + j] = mod_floor(m[i * cols + j] - f * m[rank * cols + j], p);
      }
    }
    ++rank;
  }
  return {rank, det};
}

}  // namespace

std::size_t FpMatrix::rank() const {
  auto copy = data_;
  return eliminate(copy, rows_, cols_, p_).first;
}

Int FpMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidArgument("determinant of a non-square matrix");
  if (rows_ == 0) return 1 % p_;
  auto copy = data_;
  const auto [rank, det] = eliminate(copy, rows_, cols_, p_);
  return rank == rows_ ? det : 0;
}

}  // namespace modjordan
