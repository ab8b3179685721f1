#pragma once

#include <memory>

#include "hopfimage/hopf_algebra.hpp"

namespace hopfimage {

/// Source or target of a morphism: an algebra, optionally carrying Hopf data.
class Endpoint {
 public:
  Endpoint(std::shared_ptr<const HopfAlgebra> hopf);  // NOLINT(google-explicit-constructor)
  Endpoint(std::shared_ptr<const Algebra> algebra);   // NOLINT(google-explicit-constructor)

  const Algebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return algebra_; }
  const std::shared_ptr<const HopfAlgebra>& hopf_ptr() const { return hopf_; }
  bool is_hopf() const { return hopf_ != nullptr; }
  const HopfAlgebra& hopf() const;
  std::size_t dim() const { return algebra_->dim(); }
  FieldSpec field() const { return algebra_->field(); }

 private:
  std::shared_ptr<const Algebra> algebra_;
  std::shared_ptr<const HopfAlgebra> hopf_;
};

/// Linear map given by a target_dim x source_dim matrix, claimed to be an
/// algebra morphism (and a Hopf morphism when is_hopf). Claims are verified by
/// check_morphism, not by the constructor, which only checks shapes.
class AlgebraMorphism {
 public:
  AlgebraMorphism(Endpoint source, Endpoint target, Matrix matrix, bool is_hopf = false);

  const Endpoint& source() const { return source_; }
  const Endpoint& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  bool is_hopf() const { return is_hopf_; }

  Vector apply(std::span<const Scalar> x) const { return matrix_.apply(x); }

 private:
  Endpoint source_;
  Endpoint target_;
  Matrix matrix_;
  bool is_hopf_;
};

std::shared_ptr<const HopfAlgebra> share(HopfAlgebra h);
std::shared_ptr<const Algebra> share(Algebra a);

AlgebraMorphism identity_morphism(const std::shared_ptr<const HopfAlgebra>& h);
/// The counit as a Hopf morphism onto the one-dimensional Hopf algebra k.
AlgebraMorphism counit_morphism(const std::shared_ptr<const HopfAlgebra>& h);
/// f o g.
AlgebraMorphism compose(const AlgebraMorphism& f, const AlgebraMorphism& g);
/// Kronecker product; Hopf iff both factors are.
AlgebraMorphism tensor_morphism(const AlgebraMorphism& f, const AlgebraMorphism& g);

}  // namespace hopfimage
