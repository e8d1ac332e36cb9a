#include "colorlie/matrix.hpp"

#include "colorlie/error.hpp"

#include <sstream>

namespace colorlie {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw AlgebraError(ErrorCode::Invalid, "matrix data has wrong size");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>> &columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw AlgebraError(ErrorCode::Invalid, "column has wrong length");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  Matrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c)
      m(r, c) = (*this)(r, first + c);
  return m;
}

Matrix Matrix::hstack(const Matrix &right) const {
  if (rows_ != right.rows_)
    throw AlgebraError(ErrorCode::Invalid, "hstack row mismatch");
  Matrix m(rows_, cols_ + right.cols_);
  m.set_block(0, 0, *this);
  m.set_block(0, cols_, right);
  return m;
}

Matrix Matrix::direct_sum(const Matrix &other) const {
  Matrix m(rows_ + other.rows_, cols_ + other.cols_);
  m.set_block(0, 0, *this);
  m.set_block(rows_, cols_, other);
  return m;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix &block) {
  if (r + block.rows_ > rows_ || c + block.cols_ > cols_)
    throw AlgebraError(ErrorCode::Invalid, "block does not fit");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j)
      (*this)(r + i, c + j) = block(i, j);
}

bool Matrix::is_zero() const {
  for (const auto &x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

bool Matrix::is_scalar() const {
  if (!is_square())
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r == c ? (*this)(r, c) != (*this)(0, 0) : !(*this)(r, c).is_zero())
        return false;
    }
  return true;
}

Matrix &Matrix::operator+=(const Matrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw AlgebraError(ErrorCode::Invalid, "matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += o.data_[i];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw AlgebraError(ErrorCode::Invalid, "matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= o.data_[i];
  return *this;
}

Matrix &Matrix::operator*=(const Scalar &s) {
  for (auto &x : data_)
    x *= s;
  return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols_ != b.rows_)
    throw AlgebraError(ErrorCode::Invalid, "matrix product size mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar &x = a(r, k);
      if (x.is_zero())
        continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar &y = b(k, c);
        if (!y.is_zero())
          m(r, c) += x * y;
      }
    }
  return m;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_)
    throw AlgebraError(ErrorCode::Invalid, "vector size mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero())
        out[r] += (*this)(r, c) * v[c];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? ", " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

SparseRow to_sparse(std::span<const Scalar> v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      row.emplace_back(i, v[i]);
  return row;
}

namespace {

// row - factor * pivot, both sorted sparse rows.
SparseRow axpy(const SparseRow &row, const Scalar &factor, const SparseRow &pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, -(factor * pivot[b].second));
      ++b;
    } else {
      Scalar v = row[a].second - factor * pivot[b].second;
      if (!v.is_zero())
        out.emplace_back(row[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

} // namespace

SparseRow SparseEchelon::reduce(SparseRow row) const {
  std::size_t start = 0;
  while (start < row.size()) {
    std::size_t col = row[start].first;
    std::size_t p = pivot_row_[col];
    if (p == npos) {
      ++start;
      continue;
    }
    Scalar factor = row[start].second;
    row = axpy(row, factor, rows_[p]);
    // Entries before `start` are untouched because pivot rows begin at col.
  }
  return row;
}

bool SparseEchelon::insert(SparseRow row) {
  // Only the leading entry has to be a non-pivot column for echelon form.
  while (!row.empty()) {
    std::size_t col = row.front().first;
    std::size_t p = pivot_row_[col];
    if (p == npos)
      break;
    Scalar factor = row.front().second;
    row = axpy(row, factor, rows_[p]);
  }
  if (row.empty())
    return false;
  Scalar lead = row.front().second.inverse();
  for (auto &entry : row)
    entry.second *= lead;
  pivot_row_[row.front().first] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

std::vector<std::vector<Scalar>> SparseEchelon::nullspace() const {
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_row_[f] != npos)
      continue;
    std::vector<Scalar> x(cols_);
    x[f] = 1;
    for (std::size_t col = cols_; col-- > 0;) {
      std::size_t p = pivot_row_[col];
      if (p == npos)
        continue;
      Scalar acc;
      for (std::size_t t = 1; t < rows_[p].size(); ++t) {
        const auto &[c, v] = rows_[p][t];
        if (!x[c].is_zero())
          acc += v * x[c];
      }
      x[col] = -acc;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero())
      ++sel;
    if (sel == m.rows())
      continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(sel, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero())
        continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero())
          m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::size_t rank(const Matrix &m) {
  Matrix copy = m;
  return rref(copy).size();
}

std::vector<std::vector<Scalar>> nullspace(const Matrix &m) {
  SparseEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Scalar> row(m.data().begin() + r * m.cols(),
                            m.data().begin() + (r + 1) * m.cols());
    ech.insert(to_sparse(row));
  }
  return ech.nullspace();
}

Matrix kernel_basis(const Matrix &m) { return Matrix::from_columns(nullspace(m), m.cols()); }

std::optional<Matrix> inverse(const Matrix &m) {
  if (!m.is_square())
    return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug = m.hstack(Matrix::identity(n));
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  return aug.columns(n, n);
}

std::optional<Matrix> solve_in_span(const Matrix &basis, const Matrix &target) {
  const std::size_t k = basis.cols();
  Matrix aug = basis.hstack(target);
  auto pivots = rref(aug);
  if (pivots.size() != k)
    return std::nullopt;
  for (std::size_t i = 0; i < k; ++i)
    if (pivots[i] != i)
      return std::nullopt;
  // Rows beyond k must vanish on the target block.
  for (std::size_t r = k; r < aug.rows(); ++r)
    for (std::size_t c = k; c < aug.cols(); ++c)
      if (!aug(r, c).is_zero())
        return std::nullopt;
  Matrix x(k, target.cols());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < target.cols(); ++c)
      x(r, c) = aug(r, k + c);
  return x;
}

std::optional<std::vector<Scalar>> solve_linear(const Matrix &a, std::span<const Scalar> b) {
  if (b.size() != a.rows())
    throw AlgebraError(ErrorCode::Invalid, "right-hand side has the wrong length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols())
    return std::nullopt;
  std::vector<Scalar> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug(r, a.cols());
  return x;
}

} // namespace colorlie
