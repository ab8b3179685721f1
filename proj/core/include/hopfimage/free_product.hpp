#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hopfimage/morphism.hpp"

namespace hopfimage {

/// Basis vector `index` of factor `factor`; only complement coordinates occur
/// as letters of reduced words.
struct FPLetter {
  std::uint32_t factor = 0;
  std::uint32_t index = 0;

  friend auto operator<=>(const FPLetter&, const FPLetter&) = default;
};

using FPWord = std::vector<FPLetter>;

/// Shorter words first, then lexicographic.
struct ShortLex {
  bool operator()(const FPWord& a, const FPWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Sparse element of a free product: reduced word -> nonzero coefficient.
using FPElement = std::map<FPWord, Scalar, ShortLex>;
/// Sparse element of a tensor product of free products, one word per leg.
using FPTensor = std::map<std::vector<FPWord>, Scalar>;

void add_term(FPElement& x, const FPWord& w, const Scalar& c);
void add_term(FPTensor& x, const std::vector<FPWord>& w, const Scalar& c);
FPElement scaled(const FPElement& x, const Scalar& c);
FPElement operator+(const FPElement& a, const FPElement& b);
FPElement operator-(const FPElement& a, const FPElement& b);
/// Longest word in the support (0 for the zero element).
std::size_t support_length(const FPElement& x);
std::size_t support_length(const FPTensor& x);

/// Free product A_0 * ... * A_{m-1} restricted to reduced words of length at
/// most bound. Each factor's unit line is complemented by the coordinate
/// vectors other than the first nonzero coordinate of its unit.
class TruncatedFreeProduct {
 public:
  TruncatedFreeProduct(std::vector<Endpoint> factors, std::size_t bound);

  FieldSpec field() const { return field_; }
  std::size_t bound() const { return bound_; }
  std::size_t factor_count() const { return factors_.size(); }
  const Endpoint& factor(std::size_t f) const { return factors_.at(f); }
  bool hopf_factors() const;
  std::size_t unit_coordinate(std::size_t f) const { return unit_coordinate_.at(f); }
  const std::vector<std::size_t>& letters(std::size_t f) const { return letters_.at(f); }

  FPElement one() const;
  /// Image of a factor element v in A_f.
  FPElement embed(std::size_t f, std::span<const Scalar> v) const;
  FPElement basis_element(std::size_t f, std::size_t index) const;
  bool is_reduced(const FPWord& w) const;

  /// Product reduced at factor junctions. Throws TruncationOverflow when the
  /// exact result has a word longer than the bound.
  FPElement multiply(const FPElement& a, const FPElement& b) const;
  FPElement multiply_unbounded(const FPElement& a, const FPElement& b) const;
  void check_bound(const FPElement& x) const;

  /// Number of reduced words of length <= bound.
  std::size_t basis_size() const;
  /// Reduced words by length, then lexicographically. Throws ResourceCap past cap words.
  std::vector<FPWord> basis(std::size_t cap = 1'000'000) const;
  Vector coordinates(const FPElement& x, const std::vector<FPWord>& basis) const;

  /// "0:e1 1:e2 0:e1"; the empty word prints as "1".
  std::string format(const FPWord& w) const;

 private:
  void multiply_words(const FPWord& a, std::size_t a_len, const FPWord& b, std::size_t b_start,
                      const Scalar& coeff, FPElement& out) const;
  void require_factor(std::size_t f) const;

  FieldSpec field_;
  std::vector<Endpoint> factors_;
  std::size_t bound_;
  std::vector<std::size_t> unit_coordinate_;
  std::vector<std::vector<std::size_t>> letters_;
};

/// One tensor leg of a letter homomorphism: its free product, and whether
/// products on that leg are taken in the opposite order.
struct LegTarget {
  const TruncatedFreeProduct* product = nullptr;
  bool opposite = false;
};

using LetterImage = std::function<FPTensor(const FPLetter&)>;

/// Extends a map on letters to the multiplicative (legwise, opposite on
/// flagged legs) map on reduced words, then linearly. Zero legs give scalars
/// under the empty key. Checks every leg against its bound.
FPTensor apply_letter_map(const std::vector<LegTarget>& legs, const LetterImage& image,
                          const FPElement& x);
FPTensor multiply_tensors(const std::vector<LegTarget>& legs, const FPTensor& a, const FPTensor& b);

/// Tensor of factor elements placed on the legs.
FPTensor tensor_of(const std::vector<FPElement>& legs);

/// The Hopf structure extended from the factors (all factors must be Hopf).
FPTensor free_coproduct(const TruncatedFreeProduct& fp, const FPElement& x);
Scalar free_counit(const TruncatedFreeProduct& fp, const FPElement& x);
FPElement free_antipode(const TruncatedFreeProduct& fp, const FPElement& x);
/// Multiplication of a two-leg tensor back into fp.
FPElement multiply_legs(const TruncatedFreeProduct& fp, const FPTensor& t, bool twist_left,
                        bool twist_right);

/// Random nonzero element: terms random reduced words of length 1..max_len with
/// coefficients in [-3, 3]. With augmented, eps(x) * 1 is subtracted so the
/// result lies in ker eps.
FPElement random_element(const TruncatedFreeProduct& fp, std::size_t max_len, std::size_t terms,
                         std::mt19937_64& rng, bool augmented = true);

}  // namespace hopfimage
