#pragma once

// Dense exact linear algebra over the rationals: rank, determinant, products.

#include <cstddef>
#include <utility>
#include <vector>

#include "descent_lab/errors.hpp"
#include "descent_lab/rational.hpp"

namespace descent_lab {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.cols()) throw Error("matrix-vector size mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (v[j] != 0) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

namespace detail {

/// In-place Gaussian elimination to row echelon form. Returns (rank, sign of the
/// row permutation applied).
inline std::pair<std::size_t, int> eliminate(RationalMatrix& m) {
  std::size_t rank = 0;
  int sign = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return {rank, sign};
}

}  // namespace detail

inline std::size_t matrix_rank(RationalMatrix m) { return detail::eliminate(m).first; }

inline Rational determinant(RationalMatrix m) {
  if (!m.square()) throw Error("determinant of a non-square matrix");
  const auto [rank, sign] = detail::eliminate(m);
  if (rank < m.rows()) return Rational(0);
  Rational det(sign);
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

/// Rows of the matrix are the given vectors.
inline RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("ragged row in from_rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace descent_lab
