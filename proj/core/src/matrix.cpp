#include "hopfimage/matrix.hpp"

#include "hopfimage/error.hpp"

namespace hopfimage {

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, Scalar(field)); }

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar(field, 1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

SparseVector to_sparse(std::span<const Scalar> v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

Vector to_dense(const SparseVector& v, FieldSpec field, std::size_t n) {
  Vector out = zero_vector(field, n);
  for (const auto& [i, x] : v) out.at(i) += x;
  return out;
}

Vector kron(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.empty() || b.empty()) return {};
  const FieldSpec field = a.front().field();
  Vector out = zero_vector(field, a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, 1);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw HopfError(ErrorCode::InvalidArgument, "row length mismatch in Matrix::from_rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) {
      throw HopfError(ErrorCode::InvalidArgument, "column length mismatch in Matrix::from_columns");
    }
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw HopfError(ErrorCode::InvalidArgument, "ragged integer matrix");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(field, rows[r][c]);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto rv = row(r);
    out.emplace_back(rv.begin(), rv.end());
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) {
    throw HopfError(ErrorCode::InvalidArgument, "matrix/vector dimension mismatch");
  }
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r].add_product(a, v[c]);
    }
  }
  return out;
}

bool Matrix::is_zero() const { return hopfimage::is_zero(data_); }

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) {
    throw HopfError(ErrorCode::InvalidArgument, "matrix product dimension mismatch");
  }
  if (!(field_ == o.field_)) throw HopfError(ErrorCode::FieldMismatch, "matrix fields differ");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) out(r, c).add_product(a, b);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw HopfError(ErrorCode::InvalidArgument, "matrix sum dimension mismatch");
  }
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw HopfError(ErrorCode::InvalidArgument, "matrix difference dimension mismatch");
  }
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
      }
    }
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw HopfError(ErrorCode::InvalidArgument, "vstack column mismatch");
  }
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) {
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  }
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  }
  return out;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots) {
  Matrix a = m;
  pivots.clear();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(pivot, k), a(lead_row, k));
    }
    const Scalar inv = a(lead_row, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) {
      if (!a(lead_row, k).is_zero()) a(lead_row, k) *= inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c).is_zero()) continue;
      const Scalar factor = -a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        const Scalar& src = a(lead_row, k);
        if (!src.is_zero()) a(r, k).add_product(factor, src);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  Matrix out(a.field(), lead_row, a.cols());
  for (std::size_t r = 0; r < lead_row; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  return out;
}

Matrix rref(const Matrix& m) {
  std::vector<std::size_t> pivots;
  return rref(m, pivots);
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

}  // namespace hopfimage
