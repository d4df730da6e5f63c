#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weylharm/rational.hpp"

namespace weylharm {

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  GaussRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussRational> data_;
};

/// Reduced row echelon form in place; returns pivot columns. The pivot row
/// for each column is the candidate with the smallest coefficient bit length,
/// ties broken by the lowest row index, so the result is deterministic.
std::vector<std::size_t> rref_serial(Matrix& a);
/// Same pivots and result; the elimination sweep runs across OpenMP threads.
std::vector<std::size_t> rref_parallel(Matrix& a);
/// Picks serial or parallel by size.
std::vector<std::size_t> rref(Matrix& a);

std::size_t rank(Matrix a);

/// Standard nullspace basis: one vector per free column, that column set to 1
/// and the other free columns 0.
std::vector<std::vector<GaussRational>> nullspace(Matrix a);

/// Some x with a x = b (free variables 0), or nullopt if inconsistent.
std::optional<std::vector<GaussRational>> solve(const Matrix& a, const std::vector<GaussRational>& b);

}  // namespace weylharm
