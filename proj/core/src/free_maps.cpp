#include "hopfimage/free_maps.hpp"

#include "hopfimage/builtins.hpp"
#include "hopfimage/error.hpp"
#include "hopfimage/inner_faithful.hpp"

namespace hopfimage {

namespace {

FPElement single_leg(const FPTensor& t) {
  FPElement out;
  for (const auto& [k, v] : t) add_term(out, k.at(0), v);
  return out;
}

FPTensor as_tensor(const FPElement& x) {
  FPTensor out;
  for (const auto& [w, v] : x) add_term(out, {w}, v);
  return out;
}

}  // namespace

FPElement free_product_map(const TruncatedFreeProduct& target, const std::vector<Matrix>& factor_maps,
                           const FPElement& x) {
  const std::vector<LegTarget> legs{{&target, false}};
  return single_leg(apply_letter_map(legs, [&](const FPLetter& l) {
    return as_tensor(target.embed(l.factor, factor_maps.at(l.factor).column(l.index)));
  }, x));
}

Z2Extension::Z2Extension(MorphismFamily fam, std::size_t bound)
    : fam_(std::move(fam)),
      source_({share(group_algebra(fam_.field(), cyclic_group(2))), fam_.domain_ptr()}, bound) {
  const Endpoint z2 = source_.factor(0);
  for (const auto& m : fam_.maps()) targets_.emplace_back(std::vector<Endpoint>{z2, m.target()}, bound);
}

FPElement Z2Extension::sigma() const { return source_.basis_element(0, 1); }

FPElement Z2Extension::eta(std::size_t i, const FPElement& x) const {
  const TruncatedFreeProduct& target = targets_.at(i);
  const Matrix id = Matrix::identity(fam_.field(), 2);
  return free_product_map(target, {id, fam_.map(i).matrix()}, x);
}

FPTensor Z2Extension::eta_word(const Word& w, const FPElement& x) const {
  for (const auto& letter : w) {
    if (letter.index >= fam_.size()) {
      throw HopfError(ErrorCode::UnknownIndex, "letter index " + std::to_string(letter.index) +
                                                   " outside the family");
    }
  }
  std::vector<LegTarget> legs;
  for (const auto& letter : w) legs.push_back({&targets_[letter.index], letter.starred});
  const std::vector<bool> pattern = star_pattern(w);
  return apply_letter_map(legs, [&](const FPLetter& l) {
    const HopfAlgebra& h = source_.factor(l.factor).hopf();
    const TensorTerms terms =
        twisted_coproduct_terms(h, unit_vector(h.field(), h.dim(), l.index), pattern);
    FPTensor out;
    for (const auto& [key, c] : terms) {
      if (w.empty()) {
        add_term(out, {}, c);
        continue;
      }
      std::vector<FPElement> leg_values;
      for (std::size_t t = 0; t < w.size(); ++t) {
        const TruncatedFreeProduct& target = targets_[w[t].index];
        if (l.factor == 0) {
          leg_values.push_back(target.basis_element(0, key[t]));
        } else {
          leg_values.push_back(target.embed(1, fam_.map(w[t].index).matrix().column(key[t])));
        }
      }
      for (const auto& [k, v] : tensor_of(leg_values)) add_term(out, k, c * v);
    }
    return out;
  }, x);
}

Z2Extension z2_family(const MorphismFamily& fam, std::size_t bound) { return Z2Extension(fam, bound); }

FPTensor eta_word_evaluate(const Z2Extension& ext, const Word& w, const FPElement& x) {
  return ext.eta_word(w, x);
}

FPElement embed_sigma(const TruncatedFreeProduct& target, const FPElement& x) {
  const std::vector<LegTarget> legs{{&target, false}};
  const FPElement sigma = target.basis_element(0, 1);
  return single_leg(apply_letter_map(legs, [&](const FPLetter& l) {
    const FPElement letter = target.basis_element(1, l.index);
    if (l.factor == 0) return as_tensor(letter);
    return as_tensor(target.multiply_unbounded(target.multiply_unbounded(sigma, letter), sigma));
  }, x));
}

FPElement embed_tensor_square(const TruncatedFreeProduct& source, const TruncatedFreeProduct& target,
                              const FPElement& x) {
  const Vector& unit_h = source.factor(0).algebra().unit();
  const Vector& unit_k = source.factor(1).algebra().unit();
  const FieldSpec field = source.field();
  const std::vector<LegTarget> legs{{&target, false}};
  return single_leg(apply_letter_map(legs, [&](const FPLetter& l) {
    if (l.factor == 0) {
      return as_tensor(target.embed(0, kron(unit_vector(field, unit_h.size(), l.index), unit_k)));
    }
    return as_tensor(target.embed(1, kron(unit_h, unit_vector(field, unit_k.size(), l.index))));
  }, x));
}

std::optional<FreeSeparation> z2_separation(const Z2Extension& ext, const FPElement& x,
                                            std::size_t word_bound) {
  FreeSeparation out;
  const std::size_t m = ext.family().size();
  for (std::size_t len = 0; len <= word_bound; ++len) {
    if (len > 0 && m == 0) break;
    Word w(len, Letter{0, false});
    do {
      ++out.words_tried;
      FPTensor image = ext.eta_word(w, x);
      if (!image.empty()) {
        out.word = w;
        out.image = std::move(image);
        return out;
      }
    } while (len > 0 && next_word(w, m));
  }
  return std::nullopt;
}

std::optional<FreeSeparation> square_separation(const MorphismFamily& fam,
                                                const TruncatedFreeProduct& hh, const FPElement& x,
                                                std::size_t word_bound) {
  if (x.empty()) throw HopfError(ErrorCode::InvalidArgument, "x must be non-zero");
  const Z2Extension ext(fam, 2 * hh.bound() + 1);
  return z2_separation(ext, embed_sigma(ext.source(), x), word_bound);
}

std::optional<FreeSeparation> free_separation_test(const MorphismFamily& fam_h,
                                                   const MorphismFamily& fam_k,
                                                   const TruncatedFreeProduct& hk,
                                                   const FPElement& x, std::size_t word_bound) {
  if (x.empty()) throw HopfError(ErrorCode::InvalidArgument, "x must be non-zero");
  if (!decide_jointly_if(fam_h, 0).jointly_inner_faithful ||
      !decide_jointly_if(fam_k, 0).jointly_inner_faithful) {
    throw HopfError(ErrorCode::InvalidArgument, "free_separation_test needs jointly inner faithful families");
  }
  const MorphismFamily tensor = tensor_family(fam_h, fam_k);
  const TruncatedFreeProduct square({tensor.domain_ptr(), tensor.domain_ptr()}, hk.bound());
  const FPElement y = embed_tensor_square(hk, square, x);
  const Z2Extension ext(tensor, 2 * hk.bound() + 1);
  return z2_separation(ext, embed_sigma(ext.source(), y), word_bound);
}

}  // namespace hopfimage
