#include "hopfimage/algebra.hpp"

#include <map>

#include "hopfimage/error.hpp"

namespace hopfimage {

namespace {

SparseVector normalized(SparseVector v) {
  std::map<std::size_t, Scalar> acc;
  for (auto& [i, x] : v) {
    auto [it, inserted] = acc.try_emplace(i, x);
    if (!inserted) it->second += x;
  }
  SparseVector out;
  for (auto& [i, x] : acc) {
    if (!x.is_zero()) out.emplace_back(i, x);
  }
  return out;
}

}  // namespace

Algebra::Algebra(FieldSpec field, std::size_t dim, std::vector<SparseVector> products, Vector unit)
    : field_(field), dim_(dim), products_(std::move(products)), unit_(std::move(unit)) {
  if (products_.size() != dim_ * dim_ || unit_.size() != dim_) {
    throw HopfError(ErrorCode::InvalidArgument, "algebra structure has wrong shape");
  }
  for (auto& p : products_) {
    for (auto& [k, x] : p) {
      if (k >= dim_) throw HopfError(ErrorCode::InvalidArgument, "product index out of range");
      if (!(x.field() == field_)) throw HopfError(ErrorCode::FieldMismatch, "algebra field mismatch");
    }
    p = normalized(std::move(p));
  }
  for (const auto& u : unit_) {
    if (!(u.field() == field_)) throw HopfError(ErrorCode::FieldMismatch, "algebra field mismatch");
  }
}

Algebra Algebra::from_dense(FieldSpec field, std::size_t dim, const Vector& mult, Vector unit) {
  if (mult.size() != dim * dim * dim) {
    throw HopfError(ErrorCode::InvalidArgument, "dense multiplication tensor has wrong size");
  }
  std::vector<SparseVector> products(dim * dim);
  for (std::size_t ij = 0; ij < dim * dim; ++ij) {
    products[ij] = to_sparse(std::span<const Scalar>(mult).subspan(ij * dim, dim));
  }
  return Algebra(field, dim, std::move(products), std::move(unit));
}

Algebra Algebra::ground_field(FieldSpec field) {
  return Algebra(field, 1, {SparseVector{{0, Scalar(field, 1)}}}, {Scalar(field, 1)});
}

Algebra Algebra::matrix_algebra(FieldSpec field, std::size_t n) {
  const std::size_t dim = n * n;
  std::vector<SparseVector> products(dim * dim);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t d = 0; d < n; ++d) {
        products[(r * n + c) * dim + (c * n + d)] = {{r * n + d, Scalar(field, 1)}};
      }
    }
  }
  Vector unit = zero_vector(field, dim);
  for (std::size_t r = 0; r < n; ++r) unit[r * n + r] = Scalar(field, 1);
  return Algebra(field, dim, std::move(products), std::move(unit));
}

Vector Algebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw HopfError(ErrorCode::InvalidArgument, "multiply: vector length mismatch");
  }
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar coeff = x[i] * y[j];
      for (const auto& [k, m] : product(i, j)) out[k].add_product(coeff, m);
    }
  }
  return out;
}

Vector Algebra::dense_mult() const {
  Vector out = zero_vector(field_, dim_ * dim_ * dim_);
  for (std::size_t ij = 0; ij < dim_ * dim_; ++ij) {
    for (const auto& [k, m] : products_[ij]) out[ij * dim_ + k] = m;
  }
  return out;
}

Matrix Algebra::left_multiplication(std::size_t a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t x = 0; x < dim_; ++x) {
    for (const auto& [k, c] : product(a, x)) m(k, x) = c;
  }
  return m;
}

Matrix Algebra::right_multiplication(std::size_t a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t x = 0; x < dim_; ++x) {
    for (const auto& [k, c] : product(x, a)) m(k, x) = c;
  }
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (product(i, j) != product(j, i)) return false;
    }
  }
  return true;
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.products_ == b.products_ &&
         a.unit_ == b.unit_;
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = a.product(j, i);
  }
  return Algebra(a.field(), n, std::move(products), a.unit());
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) {
    throw HopfError(ErrorCode::FieldMismatch, "tensor_algebra: fields differ");
  }
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na * nb;
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t k = 0; k < na; ++k) {
        const SparseVector& left = a.product(i, k);
        if (left.empty()) continue;
        for (std::size_t l = 0; l < nb; ++l) {
          const SparseVector& right = b.product(j, l);
          if (right.empty()) continue;
          SparseVector& out = products[(i * nb + j) * n + (k * nb + l)];
          for (const auto& [p, x] : left) {
            for (const auto& [q, y] : right) out.emplace_back(p * nb + q, x * y);
          }
        }
      }
    }
  }
  return Algebra(a.field(), n, std::move(products), kron(a.unit(), b.unit()));
}

Algebra direct_product(const std::vector<std::shared_ptr<const Algebra>>& factors) {
  if (factors.empty()) throw HopfError(ErrorCode::InvalidArgument, "direct_product of nothing");
  const FieldSpec field = factors.front()->field();
  std::size_t n = 0;
  for (const auto& f : factors) {
    if (!(f->field() == field)) throw HopfError(ErrorCode::FieldMismatch, "direct_product fields");
    n += f->dim();
  }
  std::vector<SparseVector> products(n * n);
  Vector unit = zero_vector(field, n);
  std::size_t offset = 0;
  for (const auto& f : factors) {
    const std::size_t d = f->dim();
    for (std::size_t i = 0; i < d; ++i) {
      unit[offset + i] = f->unit()[i];
      for (std::size_t j = 0; j < d; ++j) {
        SparseVector& out = products[(offset + i) * n + (offset + j)];
        for (const auto& [k, x] : f->product(i, j)) out.emplace_back(offset + k, x);
      }
    }
    offset += d;
  }
  return Algebra(field, n, std::move(products), std::move(unit));
}

}  // namespace hopfimage
