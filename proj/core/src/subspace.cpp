#include "hopfimage/subspace.hpp"

#include <algorithm>

#include "hopfimage/error.hpp"

namespace hopfimage {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw HopfError(ErrorCode::AmbientMismatch,
                    "ambient dimensions differ: " + std::to_string(a.ambient_dim()) + " vs " +
                        std::to_string(b.ambient_dim()));
  }
}

// Null space basis read off an RREF with the given pivots.
std::vector<Vector> null_basis(const Matrix& reduced, const std::vector<std::size_t>& pivots,
                               std::size_t cols) {
  const FieldSpec field = reduced.field();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(field, cols, f);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!reduced(r, f).is_zero()) v[pivots[r]] = -reduced(r, f);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Subspace Subspace::zero(FieldSpec field, std::size_t ambient_dim) {
  Subspace s;
  s.basis_ = Matrix(field, 0, ambient_dim);
  return s;
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  Subspace s;
  s.basis_ = Matrix::identity(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s;
  s.basis_ = rref(m, s.pivots_);
  return s;
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim,
                        const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) {
    throw HopfError(ErrorCode::AmbientMismatch, "vector length does not match ambient dimension");
  }
  Vector out(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar coeff = out[pivots_[r]];
    if (coeff.is_zero()) continue;
    const Scalar factor = -coeff;
    auto row = basis_.row(r);
    for (std::size_t c = pivots_[r]; c < row.size(); ++c) {
      if (!row[c].is_zero()) out[c].add_product(factor, row[c]);
    }
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace kernel(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix reduced = rref(m, pivots);
  return Subspace::span(m.field(), m.cols(), null_basis(reduced, pivots, m.cols()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const FieldSpec field = a.field();
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(field, n);
  // (c, d) with c.A = d.B; the intersection is spanned by the c.A.
  Matrix system(field, n, a.dim() + b.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) system(c, r) = a.basis()(r, c);
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) system(c, a.dim() + r) = -b.basis()(r, c);
  }
  const Subspace solutions = kernel(system);
  std::vector<Vector> vectors;
  for (std::size_t s = 0; s < solutions.dim(); ++s) {
    Vector v = zero_vector(field, n);
    for (std::size_t r = 0; r < a.dim(); ++r) {
      const Scalar& coeff = solutions.basis()(s, r);
      if (coeff.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) v[c].add_product(coeff, a.basis()(r, c));
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(field, n, vectors);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

bool contains(const Subspace& a, std::span<const Scalar> v) { return a.contains(v); }

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) {
    throw HopfError(ErrorCode::AmbientMismatch, "image: matrix source does not match subspace");
  }
  std::vector<Vector> vectors;
  for (std::size_t r = 0; r < s.dim(); ++r) vectors.push_back(m.apply(s.basis().row(r)));
  return Subspace::span(m.field(), m.rows(), vectors);
}

QuotientBasis quotient_basis(const Subspace& a) {
  const FieldSpec field = a.field();
  const std::size_t n = a.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : a.pivots()) is_pivot[p] = true;
  QuotientBasis out;
  std::vector<std::size_t> slot(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      slot[c] = out.complement_coordinates.size();
      out.complement_coordinates.push_back(c);
    }
  }
  const std::size_t q = out.complement_coordinates.size();
  out.projection = Matrix(field, q, n);
  out.complement = Matrix(field, n, q);
  for (std::size_t k = 0; k < q; ++k) {
    const std::size_t c = out.complement_coordinates[k];
    out.projection(k, c) = Scalar(field, 1);
    out.complement(c, k) = Scalar(field, 1);
  }
  // A pivot coordinate e_p equals e_p - b_r modulo a, which has no pivot support.
  for (std::size_t r = 0; r < a.pivots().size(); ++r) {
    const std::size_t p = a.pivots()[r];
    for (std::size_t c = 0; c < n; ++c) {
      if (is_pivot[c] || a.basis()(r, c).is_zero()) continue;
      out.projection(slot[c], p) = -a.basis()(r, c);
    }
  }
  return out;
}

RowEchelon::RowEchelon(FieldSpec field, std::size_t cols) : field_(field), cols_(cols) {}

bool RowEchelon::add(std::span<const Scalar> row) {
  if (row.size() != cols_) {
    throw HopfError(ErrorCode::AmbientMismatch, "RowEchelon: row length mismatch");
  }
  if (full_rank()) return false;
  Vector v(row.begin(), row.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar coeff = v[pivots_[r]];
    if (coeff.is_zero()) continue;
    const Scalar factor = -coeff;
    for (std::size_t c = pivots_[r]; c < cols_; ++c) {
      if (!rows_[r][c].is_zero()) v[c].add_product(factor, rows_[r][c]);
    }
  }
  std::size_t lead = 0;
  while (lead < cols_ && v[lead].is_zero()) ++lead;
  if (lead == cols_) return false;
  const Scalar inv = v[lead].inverse();
  for (std::size_t c = lead; c < cols_; ++c) {
    if (!v[c].is_zero()) v[c] *= inv;
  }
  for (auto& existing : rows_) {
    const Scalar coeff = existing[lead];
    if (coeff.is_zero()) continue;
    const Scalar factor = -coeff;
    for (std::size_t c = lead; c < cols_; ++c) {
      if (!v[c].is_zero()) existing[c].add_product(factor, v[c]);
    }
  }
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

Subspace RowEchelon::row_space() const { return Subspace::span(field_, cols_, rows_); }

Subspace RowEchelon::kernel() const {
  const Matrix reduced = Matrix::from_rows(field_, cols_, rows_);
  return Subspace::span(field_, cols_, null_basis(reduced, pivots_, cols_));
}

}  // namespace hopfimage
