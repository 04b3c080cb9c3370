#include "ag/linalg.hpp"

#include <algorithm>
#include <utility>

namespace ag {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::vector<RatVec> rows) {
  RatMatrix m;
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (auto& r : rows) {
    if (r.size() != m.cols_) throw std::invalid_argument("ragged row list");
  }
  m.rows_ = std::move(rows);
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& columns) {
  const std::size_t nc = columns.size();
  const std::size_t nr = nc == 0 ? 0 : columns.front().size();
  RatMatrix m(nr, nc);
  for (std::size_t j = 0; j < nc; ++j) {
    if (columns[j].size() != nr) throw std::invalid_argument("ragged column list");
    for (std::size_t i = 0; i < nr; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

void RatMatrix::append_row(RatVec row) {
  if (rows_.empty() && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row size mismatch");
  rows_.push_back(std::move(row));
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatVec RatMatrix::apply(const RatVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector size mismatch");
  RatVec y(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (rows_[i][j] != 0 && x[j] != 0) acc += rows_[i][j] * x[j];
    }
    y[i] = acc;
  }
  return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows()) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix p(rows(), other.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols(); ++j) {
        if (other.at(k, j) != 0) p.at(i, j) += at(i, k) * other.at(k, j);
      }
    }
  return p;
}

Echelon RatMatrix::row_reduce() const {
  Echelon e;
  e.reduced = *this;
  e.pivot_row_of_col.assign(cols_, -1);
  auto& m = e.reduced;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols_ && next_row < m.rows(); ++col) {
    // candidate with the smallest entry bit size
    std::size_t best = m.rows();
    std::size_t best_bits = 0;
    for (std::size_t r = next_row; r < m.rows(); ++r) {
      if (m.at(r, col) == 0) continue;
      const std::size_t bits = bit_size(m.at(r, col));
      if (best == m.rows() || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best == m.rows()) continue;
    std::swap(m.rows_[next_row], m.rows_[best]);
    const Rational inv_pivot = 1 / m.at(next_row, col);
    for (std::size_t j = col; j < cols_; ++j) m.at(next_row, j) *= inv_pivot;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next_row || m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t j = col; j < cols_; ++j)
        m.at(r, j) -= factor * m.at(next_row, j);
    }
    e.pivot_cols.push_back(col);
    e.pivot_row_of_col[col] = static_cast<long>(next_row);
    ++next_row;
  }
  return e;
}

std::size_t RatMatrix::rank() const { return row_reduce().pivot_cols.size(); }

bool RatMatrix::invertible() const {
  return rows() == cols_ && rank() == cols_;
}

RatMatrix RatMatrix::inverse() const {
  if (rows() != cols_) throw SingularMatrixError("inverse of a non-square matrix");
  const std::size_t n = rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  const Echelon e = aug.row_reduce();
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1)
    throw SingularMatrixError("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.reduced.at(i, n + j);
  return inv;
}

std::vector<RatVec> RatMatrix::kernel() const {
  const Echelon e = row_reduce();
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (e.pivot_row_of_col[free_col] >= 0) continue;
    RatVec v(cols_);
    v[free_col] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      const std::size_t pc = e.pivot_cols[k];
      v[pc] = -e.reduced.at(k, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> RatMatrix::solve(const RatVec& rhs) const {
  if (rhs.size() != rows()) throw std::invalid_argument("rhs size mismatch");
  RatMatrix aug(rows(), cols_ + 1);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = rhs[i];
  }
  const Echelon e = aug.row_reduce();
  // a pivot in the rhs column means inconsistency
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols_) return std::nullopt;
  RatVec x(cols_);
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
    x[e.pivot_cols[k]] = e.reduced.at(k, cols_);
  return x;
}

bool RowSpan::insert(RatVec row) {
  if (row.size() != cols_) throw std::invalid_argument("row size mismatch");
  row = reduce(std::move(row));
  std::size_t pivot = cols_;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (row[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot == cols_) return false;
  const Rational inv = 1 / row[pivot];
  for (std::size_t j = pivot; j < cols_; ++j) row[j] *= inv;
  // keep existing rows reduced against the new pivot
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][pivot] == 0) continue;
    const Rational factor = rows_[r][pivot];
    for (std::size_t j = pivot; j < cols_; ++j) rows_[r][j] -= factor * row[j];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

RatVec RowSpan::reduce(RatVec row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (row[p] == 0) continue;
    const Rational factor = row[p];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (rows_[r][j] != 0) row[j] -= factor * rows_[r][j];
    }
  }
  return row;
}

bool RowSpan::contains(const RatVec& row) const {
  return is_zero_vector(reduce(row));
}

bool is_zero_vector(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace ag
