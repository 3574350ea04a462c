#include "atk/matrix.hpp"

#include <stdexcept>

namespace atk {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::column(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in addition");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in subtraction");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += aik * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::col(std::size_t j) const {
  Matrix m(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) m.at(i, 0) = at(i, j);
  return m;
}

void Matrix::set_col(std::size_t j, const Matrix& column) {
  if (column.rows() != rows_ || column.cols() != 1)
    throw std::invalid_argument("set_col shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = column.at(i, 0);
}

std::string Matrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += (i == 0) ? "[" : ",[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ",";
      s += at(i, j).str();
    }
    s += "]";
  }
  s += "]";
  return s;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix vec(const Matrix& m) {
  Matrix v(m.rows() * m.cols(), 1);
  for (std::size_t p = 0; p < m.rows(); ++p)
    for (std::size_t q = 0; q < m.cols(); ++q) v.at(p * m.cols() + q, 0) = m.at(p, q);
  return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1)
    throw std::invalid_argument("unvec shape mismatch");
  Matrix m(rows, cols);
  for (std::size_t p = 0; p < rows; ++p)
    for (std::size_t q = 0; q < cols; ++q) m.at(p, q) = v.at(p * cols + q, 0);
  return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

Rref reduced_row_echelon(const Matrix& a) {
  Rref r{a, {}};
  Matrix& m = r.mat;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    const Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    r.pivot_cols.push_back(col);
    ++row;
  }
  return r;
}

std::size_t rank(const Matrix& a) { return reduced_row_echelon(a).pivot_cols.size(); }

Matrix kernel_basis(const Matrix& a) {
  const Rref r = reduced_row_echelon(a);
  std::vector<std::size_t> free_cols;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  Matrix basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis.at(fc, k) = Rational(1);
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
      basis.at(r.pivot_cols[p], k) = -r.mat.at(p, fc);
  }
  return basis;
}

Matrix image_basis(const Matrix& a) {
  const Rref r = reduced_row_echelon(a);
  Matrix basis(a.rows(), r.pivot_cols.size());
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
    basis.set_col(k, a.col(r.pivot_cols[k]));
  return basis;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  const Rref r = reduced_row_echelon(hstack(a, Matrix::identity(n)));
  if (r.pivot_cols.size() < n || (n > 0 && r.pivot_cols[n - 1] != n - 1))
    throw std::invalid_argument("inverse of singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

}  // namespace atk
