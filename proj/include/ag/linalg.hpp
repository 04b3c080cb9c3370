#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ag/rational.hpp"

namespace ag {

using RatVec = std::vector<Rational>;

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Echelon;

// Dense matrix over the rationals with exact Gauss-Jordan elimination.
// Pivot rows are chosen by minimal numerator+denominator bit length to
// limit coefficient growth; the reduced form itself is canonical.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, RatVec(cols)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(std::vector<RatVec> rows);
  static RatMatrix from_columns(const std::vector<RatVec>& columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const RatVec& row(std::size_t r) const { return rows_[r]; }
  void append_row(RatVec row);

  RatMatrix transposed() const;
  RatVec apply(const RatVec& x) const;  // this * x
  RatMatrix operator*(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const = default;

  Echelon row_reduce() const;

  std::size_t rank() const;
  bool invertible() const;
  RatMatrix inverse() const;  // throws SingularMatrixError

  // Canonical right null space basis (one vector per free column).
  std::vector<RatVec> kernel() const;

  // One solution of this*x = rhs with free coordinates set to zero,
  // or nullopt when the system is inconsistent.
  std::optional<RatVec> solve(const RatVec& rhs) const;

 private:
  std::size_t cols_ = 0;
  std::vector<RatVec> rows_;
};

struct Echelon {
  RatMatrix reduced;                    // full RREF
  std::vector<std::size_t> pivot_cols;  // one per pivot row, ascending
  std::vector<long> pivot_row_of_col;   // -1 for free columns
};

// Incrementally maintained row space; rows are kept reduced so rank
// queries and membership tests stay cheap inside closure loops.
class RowSpan {
 public:
  explicit RowSpan(std::size_t cols) : cols_(cols) {}

  bool insert(RatVec row);  // true if the rank grew
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  RatVec reduce(RatVec row) const;  // residual of row modulo the span
  bool contains(const RatVec& row) const;
  const std::vector<RatVec>& rows() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero_vector(const RatVec& v);

}  // namespace ag
