#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hopfimage/scalar.hpp"

namespace hopfimage {

using Vector = std::vector<Scalar>;

/// Sorted (index, nonzero value) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
SparseVector to_sparse(std::span<const Scalar> v);
Vector to_dense(const SparseVector& v, FieldSpec field, std::size_t n);
/// Kronecker product of coordinate vectors, left factor major.
Vector kron(std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols);
  /// Convenience for tests and builtins: integer entries.
  static Matrix from_ints(FieldSpec field, const std::vector<std::vector<long>>& rows);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Canonical reduced row-echelon form with zero rows dropped.
Matrix rref(const Matrix& m);
/// Same, also reporting pivot columns.
Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots);
std::size_t rank(const Matrix& m);

}  // namespace hopfimage
