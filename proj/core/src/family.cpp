#include "hopfimage/family.hpp"

#include "hopfimage/axioms.hpp"
#include "hopfimage/error.hpp"

namespace hopfimage {

MorphismFamily::MorphismFamily(std::shared_ptr<const HopfAlgebra> domain,
                               std::vector<AlgebraMorphism> maps, std::vector<std::string> labels)
    : domain_(std::move(domain)), maps_(std::move(maps)), labels_(std::move(labels)) {
  if (!domain_) throw HopfError(ErrorCode::InvalidArgument, "family without a domain");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < maps_.size(); ++i) labels_.push_back("pi" + std::to_string(i));
  }
  if (labels_.size() != maps_.size()) {
    throw HopfError(ErrorCode::InvalidArgument, "family labels do not match its maps");
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const Endpoint& src = maps_[i].source();
    if (!(src.field() == domain_->field())) {
      throw HopfError(ErrorCode::FieldMismatch, "family member " + labels_[i] + " has another field");
    }
    const bool same = src.hopf_ptr() == domain_ || src.algebra_ptr().get() == &domain_->algebra() ||
                      src.algebra() == domain_->algebra();
    if (!same) {
      throw HopfError(ErrorCode::InvalidArgument,
                      "family member " + labels_[i] + " is not defined on the family domain");
    }
    hopf_family_ = hopf_family_ && maps_[i].is_hopf();
  }
}

void verify_family(const MorphismFamily& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    require_valid(check_morphism(fam.map(i)), "family member " + fam.label(i));
  }
}

namespace {

void check_letters(const MorphismFamily& fam, const Word& w) {
  for (const auto& letter : w) {
    if (letter.index >= fam.size()) {
      throw HopfError(ErrorCode::UnknownIndex, "letter index " + std::to_string(letter.index) +
                                                   " outside a family of size " +
                                                   std::to_string(fam.size()));
    }
  }
}

}  // namespace

std::size_t word_target_dim(const MorphismFamily& fam, const Word& w) {
  check_letters(fam, w);
  std::size_t d = 1;
  for (const auto& letter : w) d *= fam.map(letter.index).target().dim();
  return d;
}

Algebra word_target(const MorphismFamily& fam, const Word& w) {
  check_letters(fam, w);
  Algebra out = Algebra::ground_field(fam.field());
  for (std::size_t t = 0; t < w.size(); ++t) {
    const Algebra& a = fam.map(w[t].index).target().algebra();
    const Algebra leg = w[t].starred ? opposite(a) : a;
    out = t == 0 ? leg : tensor_algebra(out, leg);
  }
  return out;
}

WordEvaluator::WordEvaluator(const MorphismFamily& fam, std::size_t cap_entries)
    : fam_(fam), cap_(cap_entries) {
  legs_.reserve(fam.size());
  for (const auto& m : fam.maps()) legs_.push_back(make_leg_map(m.matrix()));
}

const TensorTerms& WordEvaluator::terms(const std::vector<bool>& pattern, std::size_t c) {
  auto key = std::make_pair(pattern, c);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    const HopfAlgebra& h = fam_.domain();
    it = cache_.emplace(std::move(key),
                        twisted_coproduct_terms(h, unit_vector(h.field(), h.dim(), c), pattern))
             .first;
  }
  return it->second;
}

Matrix WordEvaluator::images(const Word& w, const std::vector<Vector>& vectors) {
  const std::size_t target = word_target_dim(fam_, w);
  const std::size_t cols = std::max<std::size_t>(vectors.size(), 1);
  if (target > cap_ / cols) {
    throw HopfError(ErrorCode::ResourceCap, "word " + format_word(w) + " has a target of dimension " +
                                                std::to_string(target) + " beyond the entry cap");
  }
  const std::size_t n = fam_.domain().dim();
  const FieldSpec field = fam_.field();
  const std::vector<bool> pattern = star_pattern(w);
  std::vector<const LegMap*> legs;
  for (const auto& letter : w) legs.push_back(&legs_[letter.index]);

  std::vector<std::optional<Vector>> basis_images(n);
  Matrix out(field, target, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const Vector& v = vectors[j];
    for (std::size_t c = 0; c < n; ++c) {
      if (v[c].is_zero()) continue;
      if (!basis_images[c]) {
        Vector col = zero_vector(field, target);
        contract_legs(terms(pattern, c), legs, col);
        basis_images[c] = std::move(col);
      }
      const Vector& col = *basis_images[c];
      for (std::size_t r = 0; r < target; ++r) {
        if (!col[r].is_zero()) out(r, j).add_product(v[c], col[r]);
      }
    }
  }
  return out;
}

Vector WordEvaluator::image(const Word& w, std::span<const Scalar> v) {
  return images(w, {Vector(v.begin(), v.end())}).column(0);
}

Matrix word_matrix(const MorphismFamily& fam, const Word& w, std::size_t cap_entries) {
  WordEvaluator eval(fam, cap_entries);
  const std::size_t n = fam.domain().dim();
  std::vector<Vector> basis;
  basis.reserve(n);
  for (std::size_t c = 0; c < n; ++c) basis.push_back(unit_vector(fam.field(), n, c));
  return eval.images(w, basis);
}

Matrix word_matrix(const MorphismFamily& fam, const Word& w) {
  return word_matrix(fam, w, default_cap_entries());
}

Matrix word_images(const MorphismFamily& fam, const Word& w, const std::vector<Vector>& vectors,
                   std::size_t cap_entries) {
  WordEvaluator eval(fam, cap_entries);
  return eval.images(w, vectors);
}

AlgebraMorphism word_map(const MorphismFamily& fam, const Word& w) {
  Matrix m = word_matrix(fam, w);
  return AlgebraMorphism(fam.domain_ptr(), share(word_target(fam, w)), std::move(m));
}

Subspace word_kernel(const MorphismFamily& fam, const Word& w) {
  return kernel(word_matrix(fam, w));
}

Subspace common_kernel(const MorphismFamily& fam) {
  const std::size_t n = fam.domain().dim();
  RowEchelon rows(fam.field(), n);
  for (const auto& m : fam.maps()) {
    for (std::size_t r = 0; r < m.matrix().rows() && !rows.full_rank(); ++r) {
      rows.add(m.matrix().row(r));
    }
  }
  return rows.kernel();
}

}  // namespace hopfimage
