#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hopfimage/matrix.hpp"

namespace hopfimage {

/// Finite-dimensional unital algebra given by structure constants
/// e_i * e_j = sum_k m_ij^k e_k. Products are stored sparsely per basis pair.
class Algebra {
 public:
  Algebra() = default;
  Algebra(FieldSpec field, std::size_t dim, std::vector<SparseVector> products, Vector unit);

  /// mult is the flattened n x n x n tensor, index (i * n + j) * n + k.
  static Algebra from_dense(FieldSpec field, std::size_t dim, const Vector& mult, Vector unit);
  /// The one-dimensional algebra k.
  static Algebra ground_field(FieldSpec field);
  /// Full matrix algebra M_n(k) on matrix units E_rc, index r * n + c.
  static Algebra matrix_algebra(FieldSpec field, std::size_t n);

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vector& unit() const { return unit_; }
  const SparseVector& product(std::size_t i, std::size_t j) const {
    return products_[i * dim_ + j];
  }
  const std::vector<SparseVector>& products() const { return products_; }

  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Dense n x n x n tensor in the from_dense layout.
  Vector dense_mult() const;
  /// Matrices of x -> e_a x and x -> x e_a.
  Matrix left_multiplication(std::size_t a) const;
  Matrix right_multiplication(std::size_t a) const;
  bool is_commutative() const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<SparseVector> products_;
  Vector unit_;
};

Algebra opposite(const Algebra& a);
/// Basis (i, j) -> i * dim(b) + j.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
/// Componentwise product A_1 x ... x A_m, blocks in order.
Algebra direct_product(const std::vector<std::shared_ptr<const Algebra>>& factors);

}  // namespace hopfimage
