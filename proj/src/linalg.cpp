#include "mfl/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfl::linalg {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, Vector(cols)) {}

void Matrix::append_row(Vector row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  rows_.push_back(std::move(row));
}

std::vector<std::size_t> Echelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < reduced.cols(); ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Echelon row_echelon(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows; ++c) {
    std::size_t p = top;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != top) {
      for (std::size_t k = c; k < cols; ++k) swap(m(p, k), m(top, k));
    }
    const Rational inv = 1 / m(top, c);
    for (std::size_t k = c; k < cols; ++k) {
      if (sgn(m(top, k)) != 0) m(top, k) *= inv;
    }
    std::vector<std::size_t> support;
    for (std::size_t k = c + 1; k < cols; ++k) {
      if (sgn(m(top, k)) != 0) support.push_back(k);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == top || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      m(r, c) = 0;
      for (std::size_t k : support) m(r, k) -= factor * m(top, k);
    }
    pivots.push_back(c);
    ++top;
  }
  Echelon e{Matrix(cols), std::move(pivots)};
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    e.reduced.append_row(Vector(m.row(r).begin(), m.row(r).end()));
  }
  return e;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).rank(); }

std::vector<Vector> null_space(const Matrix& m) {
  const Echelon e = row_echelon(m);
  std::vector<Vector> basis;
  for (std::size_t f : e.free_columns()) {
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (sgn(e.reduced(i, f)) != 0) x[e.pivots[i]] = -e.reduced(i, f);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Vector reduce_modulo(const Echelon& e, Vector v) {
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const std::size_t p = e.pivots[i];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    auto row = e.reduced.row(i);
    for (std::size_t k = p; k < v.size(); ++k) {
      if (sgn(row[k]) != 0) v[k] -= factor * row[k];
    }
  }
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace mfl::linalg
