#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hopfimage/matrix.hpp"

namespace hopfimage {

/// Subspace of k^n held as its canonical RREF row basis, so equality of
/// subspaces is equality of basis matrices.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(FieldSpec field, std::size_t ambient_dim);
  static Subspace full(FieldSpec field, std::size_t ambient_dim);
  /// Row space of the given vectors (need not be independent).
  static Subspace span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  FieldSpec field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  /// v minus its reduction against the basis; zero iff v lies in the subspace.
  Vector reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}.
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, std::span<const Scalar> v);
/// Image m(s) of a subspace of the source.
Subspace image(const Matrix& m, const Subspace& s);

/// Projection H -> H/a realised on the complement spanned by the non-pivot
/// coordinates. projection * complement = identity, and ker projection = a.
struct QuotientBasis {
  Matrix projection;  // q x n
  Matrix complement;  // n x q, columns are standard basis vectors
  std::vector<std::size_t> complement_coordinates;
};
QuotientBasis quotient_basis(const Subspace& a);

/// Incrementally maintained RREF of a growing set of rows. Used for kernels of
/// tall constraint systems where most rows become redundant quickly.
class RowEchelon {
 public:
  RowEchelon(FieldSpec field, std::size_t cols);

  /// Returns true when the row increased the rank.
  bool add(std::span<const Scalar> row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full_rank() const { return rows_.size() == cols_; }
  /// Null space of all rows added so far.
  Subspace kernel() const;
  Subspace row_space() const;

 private:
  FieldSpec field_;
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hopfimage
