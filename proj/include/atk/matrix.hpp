#pragma once

#include "atk/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace atk {

/// Dense matrix of exact rationals. Zero-row and zero-column matrices are
/// legal and behave as the corresponding linear maps between trivial spaces.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// n×1 column from a coordinate list.
  static Matrix column(const std::vector<Rational>& entries);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  bool operator==(const Matrix& o) const = default;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Column j as an n×1 matrix.
  Matrix col(std::size_t j) const;
  void set_col(std::size_t j, const Matrix& column);

  /// "[[a,b],[c,d]]" with exact rational entries.
  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
/// Row-major flattening of a matrix to a column and back. This fixes the
/// coordinates used for End(E) throughout: unit index p*cols+q is the
/// elementary matrix with a single 1 at (p, q).
Matrix vec(const Matrix& m);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);
/// [A B] side by side.
Matrix hstack(const Matrix& a, const Matrix& b);
/// A on top of B.
Matrix vstack(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix mat;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by exact Gauss–Jordan elimination. Pivot choice
/// is the first nonzero entry in each column, so the result is deterministic.
Rref reduced_row_echelon(const Matrix& a);

std::size_t rank(const Matrix& a);
/// Columns form a basis of { x : Ax = 0 }, one per free column of the rref,
/// with a 1 in the free coordinate.
Matrix kernel_basis(const Matrix& a);
/// Columns of A at the rref pivot positions: a basis of the column space.
Matrix image_basis(const Matrix& a);
/// Exact inverse; throws std::invalid_argument on singular or non-square input.
Matrix inverse(const Matrix& a);

}  // namespace atk
