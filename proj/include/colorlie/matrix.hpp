#pragma once

#include "colorlie/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace colorlie {

/// Dense row-major matrix over Scalar.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> entries);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<std::vector<Scalar>> &columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar> &data() const { return data_; }

  std::vector<Scalar> column(std::size_t c) const;
  Matrix transpose() const;
  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix hstack(const Matrix &right) const;
  /// Block-diagonal sum.
  Matrix direct_sum(const Matrix &other) const;
  /// Places `block` with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix &block);

  bool is_zero() const;
  bool is_scalar() const;

  Matrix &operator+=(const Matrix &o);
  Matrix &operator-=(const Matrix &o);
  Matrix &operator*=(const Scalar &s);

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar &s) { return a *= s; }
  friend Matrix operator*(const Scalar &s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix &a, const Matrix &b);
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Sparse row: (column, value) pairs with strictly increasing columns and
/// no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Incremental row echelon form for sparse linear systems.  Each stored
/// row is monic at its pivot (its first column).
class SparseEchelon {
public:
  explicit SparseEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

  /// Reduces `row` against the stored rows; stores it if independent.
  /// Returns true when the row increased the rank.
  bool insert(SparseRow row);
  /// Reduces `row` against the stored rows without storing it.
  SparseRow reduce(SparseRow row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }
  /// Basis of the solution space of (stored rows) x = 0.  The basis vector
  /// for free column f has a 1 at f and 0 at every other free column.
  std::vector<std::vector<Scalar>> nullspace() const;

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_row_;
};

SparseRow to_sparse(std::span<const Scalar> v);

std::size_t rank(const Matrix &m);
/// Basis of {x : m x = 0} as vectors.
std::vector<std::vector<Scalar>> nullspace(const Matrix &m);
std::optional<Matrix> inverse(const Matrix &m);
/// Solves basis * X = target exactly when every column of target lies in
/// the column span of `basis` (columns independent).  Returns nullopt
/// otherwise.
std::optional<Matrix> solve_in_span(const Matrix &basis, const Matrix &target);
/// One solution of a x = b (free variables set to zero), or nullopt.
std::optional<std::vector<Scalar>> solve_linear(const Matrix &a, std::span<const Scalar> b);
/// Basis (as columns) of the kernel of m.
Matrix kernel_basis(const Matrix &m);

} // namespace colorlie
