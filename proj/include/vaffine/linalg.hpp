#pragma once

#include "vaffine/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vaffine {

template <class K>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const K& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<K> data_;
};

template <class K>
struct LinearSolution {
  std::size_t rank = 0;
  K determinant;
  // Present iff the system is square with full rank.
  std::optional<std::vector<K>> solution;
};

// Exact Gauss-Jordan elimination over a field; the first nonzero entry in
// each column is the pivot. Requires a square, nonempty system.
template <class K>
LinearSolution<K> solve_linear(Matrix<K> a, std::vector<K> rhs) {
  const std::size_t n = a.rows();
  if (n == 0 || a.cols() != n || rhs.size() != n) {
    throw std::invalid_argument("solve_linear: expected a nonempty square system");
  }
  const K zero = a(0, 0) - a(0, 0);
  K det = embed(BigRational(1), a(0, 0));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) {
      det = zero;
      continue;
    }
    if (pivot != rank) {
      a.swap_rows(pivot, rank);
      std::swap(rhs[pivot], rhs[rank]);
      det = -det;
    }
    const K p = a(rank, col);
    det = det * p;
    const K inv = inverse(p);
    for (std::size_t c = col; c < n; ++c) a(rank, c) = a(rank, c) * inv;
    rhs[rank] = rhs[rank] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || is_zero(a(r, col))) continue;
      const K factor = a(r, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) = a(r, c) - factor * a(rank, c);
      rhs[r] = rhs[r] - factor * rhs[rank];
    }
    ++rank;
  }
  LinearSolution<K> out{rank, det, std::nullopt};
  if (rank == n) out.solution = std::move(rhs);
  return out;
}

// Row rank by forward elimination; any shape.
template <class K>
std::size_t matrix_rank(Matrix<K> a) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, rank);
    const K inv = inverse(a(rank, col));
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (is_zero(a(r, col))) continue;
      const K factor = a(r, col) * inv;
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = a(r, c) - factor * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace vaffine
