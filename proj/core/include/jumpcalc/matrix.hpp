#pragma once

#include "jumpcalc/rational.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace jumpcalc {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);
  Matrix stacked(const Matrix& below) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon form with zero rows dropped. Pivot rule is fixed
/// (leftmost nonzero column, first nonzero row at or below the cursor), so the
/// result is a canonical representative of the row space.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rows form a basis of { x : m x = 0 }.
Matrix nullspace(const Matrix& m);

/// `basis` must be in rref. True iff `v` lies in its row space.
bool in_row_space(const Matrix& basis, std::span<const Rational> v);

/// Sparse vector: strictly increasing column indices, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Incrementally grown row space, used for the large sparse eliminations
/// behind ideal slices. Rows are kept with unit pivots and zero entries in
/// every earlier pivot column; canonicalize() finishes the back substitution.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true iff the rank grew.
  bool insert(const SparseVector& v);

  /// Residual of `v` after eliminating every pivot column. After
  /// canonicalize() the residual is a normal form modulo the row space.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

  void canonicalize();

  /// Canonical rref matrix of the row space (rows sorted by pivot).
  Matrix to_matrix() const;

 private:
  std::size_t dim_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

}  // namespace jumpcalc
