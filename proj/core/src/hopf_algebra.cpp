#include "hopfimage/hopf_algebra.hpp"

#include <cstdlib>
#include <string>

#include "hopfimage/error.hpp"

namespace hopfimage {

namespace {

void add_term(TensorTerms& terms, std::vector<std::uint32_t> key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(key), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void require_cap(std::size_t rows, std::size_t cols, std::size_t cap) {
  if (cols != 0 && rows > cap / cols) {
    throw HopfError(ErrorCode::ResourceCap,
                    "matrix of " + std::to_string(rows) + " x " + std::to_string(cols) +
                        " exceeds the entry cap " + std::to_string(cap));
  }
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) {
      throw HopfError(ErrorCode::ResourceCap, "tensor power exceeds the entry cap");
    }
    out *= base;
  }
  return out;
}

}  // namespace

std::size_t default_cap_entries() {
  if (const char* env = std::getenv("HOPFIMAGE_CAP_ENTRIES")) {
    try {
      const auto value = std::stoull(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return 1'000'000;
}

HopfAlgebra::HopfAlgebra(Algebra algebra, std::vector<SparseVector> coproducts, Vector counit,
                         Matrix antipode)
    : algebra_(std::move(algebra)),
      coproducts_(std::move(coproducts)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t n = algebra_.dim();
  if (coproducts_.size() != n || counit_.size() != n || antipode_.rows() != n ||
      antipode_.cols() != n) {
    throw HopfError(ErrorCode::InvalidArgument, "Hopf structure has wrong shape");
  }
  for (auto& cp : coproducts_) {
    for (const auto& [idx, x] : cp) {
      if (idx >= n * n) throw HopfError(ErrorCode::InvalidArgument, "coproduct index out of range");
      if (!(x.field() == field())) throw HopfError(ErrorCode::FieldMismatch, "coproduct field");
    }
    cp = to_sparse(to_dense(cp, field(), n * n));
  }
  if (!(antipode_.field() == field())) {
    throw HopfError(ErrorCode::FieldMismatch, "antipode field mismatch");
  }
}

HopfAlgebra HopfAlgebra::from_dense(Algebra algebra, const Vector& comult, Vector counit,
                                    Matrix antipode) {
  const std::size_t n = algebra.dim();
  if (comult.size() != n * n * n) {
    throw HopfError(ErrorCode::InvalidArgument, "dense comultiplication has wrong size");
  }
  std::vector<SparseVector> coproducts(n);
  for (std::size_t c = 0; c < n; ++c) {
    coproducts[c] = to_sparse(std::span<const Scalar>(comult).subspan(c * n * n, n * n));
  }
  return HopfAlgebra(std::move(algebra), std::move(coproducts), std::move(counit),
                     std::move(antipode));
}

HopfAlgebra HopfAlgebra::ground_field(FieldSpec field) {
  return HopfAlgebra(Algebra::ground_field(field), {SparseVector{{0, Scalar(field, 1)}}},
                     {Scalar(field, 1)}, Matrix::identity(field, 1));
}

SparseVector HopfAlgebra::comultiply(std::span<const Scalar> x) const {
  const std::size_t n = dim();
  Vector acc = zero_vector(field(), n * n);
  for (std::size_t c = 0; c < n; ++c) {
    if (x[c].is_zero()) continue;
    for (const auto& [idx, v] : coproducts_[c]) acc[idx].add_product(x[c], v);
  }
  return to_sparse(acc);
}

Scalar HopfAlgebra::apply_counit(std::span<const Scalar> x) const {
  Scalar out(field());
  for (std::size_t c = 0; c < dim(); ++c) {
    if (!x[c].is_zero()) out.add_product(x[c], counit_[c]);
  }
  return out;
}

Vector HopfAlgebra::dense_comult() const {
  const std::size_t n = dim();
  Vector out = zero_vector(field(), n * n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& [idx, v] : coproducts_[c]) out[c * n * n + idx] = v;
  }
  return out;
}

Matrix HopfAlgebra::comult_matrix() const {
  const std::size_t n = dim();
  Matrix m(field(), n * n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& [idx, v] : coproducts_[c]) m(idx, c) = v;
  }
  return m;
}

bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.algebra_ == b.algebra_ && a.coproducts_ == b.coproducts_ && a.counit_ == b.counit_ &&
         a.antipode_ == b.antipode_;
}

TensorTerms iterated_coproduct_terms(const HopfAlgebra& h, std::span<const Scalar> x,
                                     std::size_t k) {
  TensorTerms terms;
  if (k == 0) {
    add_term(terms, {}, h.apply_counit(x));
    return terms;
  }
  for (std::size_t c = 0; c < h.dim(); ++c) {
    add_term(terms, {static_cast<std::uint32_t>(c)}, x[c]);
  }
  const std::size_t n = h.dim();
  for (std::size_t level = 1; level < k; ++level) {
    TensorTerms next;
    for (const auto& [key, coeff] : terms) {
      for (const auto& [idx, v] : h.coproduct(key.front())) {
        std::vector<std::uint32_t> expanded;
        expanded.reserve(key.size() + 1);
        expanded.push_back(static_cast<std::uint32_t>(idx / n));
        expanded.push_back(static_cast<std::uint32_t>(idx % n));
        expanded.insert(expanded.end(), key.begin() + 1, key.end());
        add_term(next, std::move(expanded), coeff * v);
      }
    }
    terms = std::move(next);
  }
  return terms;
}

TensorTerms twisted_coproduct_terms(const HopfAlgebra& h, std::span<const Scalar> x,
                                    const std::vector<bool>& starred) {
  TensorTerms terms = iterated_coproduct_terms(h, x, starred.size());
  for (std::size_t leg = 0; leg < starred.size(); ++leg) {
    if (!starred[leg]) continue;
    TensorTerms next;
    for (const auto& [key, coeff] : terms) {
      for (std::size_t r = 0; r < h.dim(); ++r) {
        const Scalar& s = h.antipode()(r, key[leg]);
        if (s.is_zero()) continue;
        auto moved = key;
        moved[leg] = static_cast<std::uint32_t>(r);
        add_term(next, std::move(moved), coeff * s);
      }
    }
    terms = std::move(next);
  }
  return terms;
}

namespace {

Matrix terms_to_matrix(const HopfAlgebra& h, std::size_t k, std::size_t cap,
                       const std::vector<bool>& starred) {
  const std::size_t n = h.dim();
  const std::size_t rows = checked_power(n, k, cap);
  require_cap(rows, n, cap);
  Matrix out(h.field(), rows, n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector e = unit_vector(h.field(), n, c);
    const TensorTerms terms = twisted_coproduct_terms(h, e, starred);
    for (const auto& [key, coeff] : terms) {
      std::size_t flat = 0;
      for (auto idx : key) flat = flat * n + idx;
      out(flat, c) = coeff;
    }
  }
  return out;
}

}  // namespace

Matrix iterated_coproduct(const HopfAlgebra& h, std::size_t k, std::size_t cap_entries) {
  return terms_to_matrix(h, k, cap_entries, std::vector<bool>(k, false));
}

Matrix iterated_coproduct(const HopfAlgebra& h, std::size_t k) {
  return iterated_coproduct(h, k, default_cap_entries());
}

Matrix twisted_coproduct(const HopfAlgebra& h, const Word& w, std::size_t cap_entries) {
  return terms_to_matrix(h, w.size(), cap_entries, star_pattern(w));
}

Matrix twisted_coproduct(const HopfAlgebra& h, const Word& w) {
  return twisted_coproduct(h, w, default_cap_entries());
}

LegMap make_leg_map(const Matrix& m) {
  LegMap out;
  out.target_dim = m.rows();
  out.columns.resize(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) out.columns[c].emplace_back(r, m(r, c));
    }
  }
  return out;
}

namespace {

void expand_legs(const std::vector<const SparseVector*>& cols,
                 const std::vector<const LegMap*>& legs, std::size_t depth, const Scalar& partial,
                 std::size_t flat, Vector& out) {
  if (depth == cols.size()) {
    out[flat] += partial;
    return;
  }
  for (const auto& [row, value] : *cols[depth]) {
    expand_legs(cols, legs, depth + 1, partial * value, flat * legs[depth]->target_dim + row, out);
  }
}

}  // namespace

void contract_legs(const TensorTerms& terms, const std::vector<const LegMap*>& legs,
                   Vector& out) {
  std::vector<const SparseVector*> cols(legs.size());
  for (const auto& [key, coeff] : terms) {
    for (std::size_t t = 0; t < legs.size(); ++t) cols[t] = &legs[t]->columns[key[t]];
    expand_legs(cols, legs, 0, coeff, 0, out);
  }
}

HopfAlgebra tensor_hopf(const HopfAlgebra& h, const HopfAlgebra& k) {
  if (!(h.field() == k.field())) throw HopfError(ErrorCode::FieldMismatch, "tensor_hopf: fields differ");
  Algebra algebra = tensor_algebra(h.algebra(), k.algebra());
  const std::size_t nh = h.dim();
  const std::size_t nk = k.dim();
  const std::size_t n = nh * nk;
  std::vector<SparseVector> coproducts(n);
  for (std::size_t i = 0; i < nh; ++i) {
    for (std::size_t j = 0; j < nk; ++j) {
      SparseVector& out = coproducts[i * nk + j];
      for (const auto& [hidx, x] : h.coproduct(i)) {
        const std::size_t a = hidx / nh;
        const std::size_t b = hidx % nh;
        for (const auto& [kidx, y] : k.coproduct(j)) {
          const std::size_t c = kidx / nk;
          const std::size_t d = kidx % nk;
          out.emplace_back((a * nk + c) * n + (b * nk + d), x * y);
        }
      }
    }
  }
  return HopfAlgebra(std::move(algebra), std::move(coproducts), kron(h.counit(), k.counit()),
                     kronecker(h.antipode(), k.antipode()));
}

HopfAlgebra op_cop(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  std::vector<SparseVector> coproducts(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& [idx, v] : h.coproduct(c)) {
      coproducts[c].emplace_back((idx % n) * n + idx / n, v);
    }
  }
  return HopfAlgebra(opposite(h.algebra()), std::move(coproducts), h.counit(), h.antipode());
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const FieldSpec field = h.field();
  std::vector<SparseVector> products(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& [idx, v] : h.coproduct(c)) products[idx].emplace_back(c, v);
  }
  std::vector<SparseVector> coproducts(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, v] : h.algebra().product(i, j)) coproducts[k].emplace_back(i * n + j, v);
    }
  }
  Algebra algebra(field, n, std::move(products), h.counit());
  return HopfAlgebra(std::move(algebra), std::move(coproducts), h.algebra().unit(),
                     h.antipode().transpose());
}

}  // namespace hopfimage
