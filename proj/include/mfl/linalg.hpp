#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mfl/rational.hpp"

// Dense exact linear algebra over Q. Matrices here are small (a few hundred
// columns at most) and very sparse, so elimination skips zero entries.
namespace mfl::linalg {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t cols) : cols_(cols) {}
  Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  std::span<const Rational> row(std::size_t r) const { return rows_[r]; }
  void append_row(Vector row);

 private:
  std::size_t cols_ = 0;
  std::vector<Vector> rows_;
};

// Reduced row echelon form; `reduced` holds only the nonzero rows and
// pivots[i] is the pivot column of row i, increasing.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
  // Columns that are not pivots, increasing.
  std::vector<std::size_t> free_columns() const;
};

Echelon row_echelon(Matrix m);

std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}; one vector per free column, with a 1 in that column.
std::vector<Vector> null_space(const Matrix& m);

// Subtracts multiples of the echelon rows so that every pivot column of v
// becomes zero. The result is the canonical representative of v modulo the
// row space.
Vector reduce_modulo(const Echelon& e, Vector v);

bool is_zero(std::span<const Rational> v);

}  // namespace mfl::linalg
