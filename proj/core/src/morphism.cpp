#include "hopfimage/morphism.hpp"

#include "hopfimage/error.hpp"

namespace hopfimage {

Endpoint::Endpoint(std::shared_ptr<const HopfAlgebra> hopf)
    : algebra_(hopf, hopf ? &hopf->algebra() : nullptr), hopf_(std::move(hopf)) {
  if (!hopf_) throw HopfError(ErrorCode::InvalidArgument, "null Hopf algebra endpoint");
}

Endpoint::Endpoint(std::shared_ptr<const Algebra> algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw HopfError(ErrorCode::InvalidArgument, "null algebra endpoint");
}

const HopfAlgebra& Endpoint::hopf() const {
  if (!hopf_) throw HopfError(ErrorCode::InvalidArgument, "endpoint carries no Hopf structure");
  return *hopf_;
}

AlgebraMorphism::AlgebraMorphism(Endpoint source, Endpoint target, Matrix matrix, bool is_hopf)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)),
      is_hopf_(is_hopf) {
  if (!(source_.field() == target_.field()) || !(matrix_.field() == source_.field())) {
    throw HopfError(ErrorCode::FieldMismatch, "morphism fields differ");
  }
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
    throw HopfError(ErrorCode::InvalidArgument,
                    "morphism matrix must be " + std::to_string(target_.dim()) + " x " +
                        std::to_string(source_.dim()));
  }
  if (is_hopf_ && !(source_.is_hopf() && target_.is_hopf())) {
    throw HopfError(ErrorCode::InvalidArgument, "Hopf morphism needs Hopf source and target");
  }
}

std::shared_ptr<const HopfAlgebra> share(HopfAlgebra h) {
  return std::make_shared<const HopfAlgebra>(std::move(h));
}

std::shared_ptr<const Algebra> share(Algebra a) {
  return std::make_shared<const Algebra>(std::move(a));
}

AlgebraMorphism identity_morphism(const std::shared_ptr<const HopfAlgebra>& h) {
  return AlgebraMorphism(h, h, Matrix::identity(h->field(), h->dim()), true);
}

AlgebraMorphism counit_morphism(const std::shared_ptr<const HopfAlgebra>& h) {
  auto k = share(HopfAlgebra::ground_field(h->field()));
  return AlgebraMorphism(h, k, Matrix::from_rows(h->field(), h->dim(), {h->counit()}), true);
}

AlgebraMorphism compose(const AlgebraMorphism& f, const AlgebraMorphism& g) {
  if (g.target().dim() != f.source().dim()) {
    throw HopfError(ErrorCode::InvalidArgument, "compose: dimensions do not chain");
  }
  return AlgebraMorphism(g.source(), f.target(), f.matrix() * g.matrix(),
                         f.is_hopf() && g.is_hopf());
}

AlgebraMorphism tensor_morphism(const AlgebraMorphism& f, const AlgebraMorphism& g) {
  if (!(f.source().field() == g.source().field())) {
    throw HopfError(ErrorCode::FieldMismatch, "tensor_morphism: fields differ");
  }
  auto tensor_end = [](const Endpoint& a, const Endpoint& b) -> Endpoint {
    if (a.is_hopf() && b.is_hopf()) return share(tensor_hopf(a.hopf(), b.hopf()));
    return share(tensor_algebra(a.algebra(), b.algebra()));
  };
  const bool hopf = f.is_hopf() && g.is_hopf();
  return AlgebraMorphism(tensor_end(f.source(), g.source()), tensor_end(f.target(), g.target()),
                         kronecker(f.matrix(), g.matrix()), hopf);
}

}  // namespace hopfimage
