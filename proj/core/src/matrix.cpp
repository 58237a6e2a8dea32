#include "jumpcalc/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jumpcalc {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (below.cols_ != cols_ && !below.empty() && !empty()) {
    throw std::invalid_argument("stacked: width mismatch");
  }
  Matrix out = empty() ? Matrix(0, below.cols_) : *this;
  for (std::size_t r = 0; r < below.rows_; ++r) out.append_row(below.row(r));
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    const int c = cmp(a.data_[i], b.data_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Matrix rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(lead, k));
    }
    const Rational inv = 1 / a(lead, c);
    for (std::size_t k = c; k < cols; ++k) a(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = c; k < cols; ++k) a(r, k) -= f * a(lead, k);
    }
    ++lead;
  }
  Matrix out(0, cols);
  for (std::size_t r = 0; r < lead; ++r) out.append_row(a.row(r));
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Matrix nullspace(const Matrix& m) {
  const Matrix r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<long> pivot_of_col(cols, -1);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (r(i, c) != 0) {
        pivot_of_col[c] = static_cast<long>(i);
        break;
      }
    }
  }
  Matrix out(0, cols);
  std::vector<Rational> v(cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = -r(static_cast<std::size_t>(pivot_of_col[c]), free);
    }
    out.append_row(v);
  }
  return out;
}

bool in_row_space(const Matrix& basis, std::span<const Rational> v) {
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    const auto row = basis.row(i);
    const auto pivot = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    const auto c = static_cast<std::size_t>(pivot - row.begin());
    if (w[c] == 0) continue;
    const Rational f = w[c];
    for (std::size_t k = c; k < w.size(); ++k) w[k] -= f * row[k];
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

RowSpace::RowSpace(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

std::vector<Rational> RowSpace::reduce(std::vector<Rational> v) const {
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c] == 0 || pivot_row_[c] < 0) continue;
    const Rational f = v[c];
    for (const auto& [k, x] : rows_[static_cast<std::size_t>(pivot_row_[c])]) v[k] -= f * x;
  }
  return v;
}

bool RowSpace::insert(const SparseVector& v) {
  std::vector<Rational> dense(dim_);
  for (const auto& [k, x] : v) dense[k] = x;
  dense = reduce(std::move(dense));
  const auto lead = std::find_if(dense.begin(), dense.end(), [](const Rational& x) { return x != 0; });
  if (lead == dense.end()) return false;
  const auto pivot = static_cast<std::size_t>(lead - dense.begin());
  const Rational inv = 1 / dense[pivot];
  SparseVector row;
  for (std::size_t k = pivot; k < dim_; ++k) {
    if (dense[k] != 0) row.emplace_back(k, dense[k] * inv);
  }
  pivot_row_[pivot] = static_cast<long>(rows_.size());
  pivots_.push_back(pivot);
  rows_.push_back(std::move(row));
  return true;
}

void RowSpace::canonicalize() {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<SparseVector> sorted;
  std::vector<std::size_t> sorted_pivots;
  sorted.reserve(rows_.size());
  for (std::size_t i : order) {
    sorted.push_back(std::move(rows_[i]));
    sorted_pivots.push_back(pivots_[i]);
  }
  rows_ = std::move(sorted);
  pivots_ = std::move(sorted_pivots);
  std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
  for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[pivots_[i]] = static_cast<long>(i);

  // Back substitution, bottom row first; lower rows are already fully reduced.
  for (std::size_t i = rows_.size(); i-- > 0;) {
    std::vector<Rational> dense(dim_);
    for (const auto& [k, x] : rows_[i]) dense[k] = x;
    for (std::size_t c = pivots_[i] + 1; c < dim_; ++c) {
      if (dense[c] == 0 || pivot_row_[c] < 0) continue;
      const Rational f = dense[c];
      for (const auto& [k, x] : rows_[static_cast<std::size_t>(pivot_row_[c])]) dense[k] -= f * x;
    }
    SparseVector row;
    for (std::size_t k = pivots_[i]; k < dim_; ++k) {
      if (dense[k] != 0) row.emplace_back(k, dense[k]);
    }
    rows_[i] = std::move(row);
  }
}

Matrix RowSpace::to_matrix() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Matrix out(0, dim_);
  std::vector<Rational> dense(dim_);
  for (std::size_t i : order) {
    std::fill(dense.begin(), dense.end(), Rational(0));
    for (const auto& [k, x] : rows_[i]) dense[k] = x;
    out.append_row(dense);
  }
  return rref(out);
}

}  // namespace jumpcalc
