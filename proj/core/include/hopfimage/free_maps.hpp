#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hopfimage/family.hpp"
#include "hopfimage/free_product.hpp"

namespace hopfimage {

/// Letterwise image of x: factor f letters go through factor_maps[f] into
/// factor f of the target, followed by reduction.
FPElement free_product_map(const TruncatedFreeProduct& target, const std::vector<Matrix>& factor_maps,
                           const FPElement& x);

/// k Z2 * H with the maps eta_i = id * pi_i into k Z2 * A_i. The generator
/// sigma of Z2 is the letter 0:e1.
class Z2Extension {
 public:
  Z2Extension(MorphismFamily fam, std::size_t bound);

  const MorphismFamily& family() const { return fam_; }
  const TruncatedFreeProduct& source() const { return source_; }
  const TruncatedFreeProduct& target(std::size_t i) const { return targets_.at(i); }
  FPElement sigma() const;

  FPElement eta(std::size_t i, const FPElement& x) const;
  /// (eta_{i_1} (x) ... (x) eta_{i_k}) o Delta^(w) on the source, antipode then
  /// opposite target on starred letters; the empty word gives eps.
  FPTensor eta_word(const Word& w, const FPElement& x) const;

 private:
  MorphismFamily fam_;
  TruncatedFreeProduct source_;
  std::vector<TruncatedFreeProduct> targets_;
};

Z2Extension z2_family(const MorphismFamily& fam, std::size_t bound);
FPTensor eta_word_evaluate(const Z2Extension& ext, const Word& w, const FPElement& x);

/// H * H -> k Z2 * H: the first copy maps identically, a second-copy letter x
/// goes to sigma x sigma.
FPElement embed_sigma(const TruncatedFreeProduct& target, const FPElement& x);
/// H * K -> (H (x) K) * (H (x) K): h -> h (x) 1 in the first copy, k -> 1 (x) k
/// in the second.
FPElement embed_tensor_square(const TruncatedFreeProduct& source, const TruncatedFreeProduct& target,
                              const FPElement& x);

struct FreeSeparation {
  Word word;
  FPTensor image;
  std::size_t words_tried = 0;
};

/// First word (by length, then enumeration order) of length <= word_bound
/// whose eta map does not annihilate x in k Z2 * H.
std::optional<FreeSeparation> z2_separation(const Z2Extension& ext, const FPElement& x,
                                            std::size_t word_bound);
/// x in the truncated H * H, pushed through embed_sigma and then scanned with
/// the eta maps of fam.
std::optional<FreeSeparation> square_separation(const MorphismFamily& fam,
                                                const TruncatedFreeProduct& hh, const FPElement& x,
                                                std::size_t word_bound);
/// x in the truncated H * K. Embeds into (H (x) K)^{*2}, then into
/// k Z2 * (H (x) K), and scans the eta words of the tensor family. The word
/// indexes tensor_family(fam_h, fam_k). Throws InvalidArgument unless both
/// families are jointly inner faithful and x != 0.
std::optional<FreeSeparation> free_separation_test(const MorphismFamily& fam_h,
                                                   const MorphismFamily& fam_k,
                                                   const TruncatedFreeProduct& hk,
                                                   const FPElement& x, std::size_t word_bound);

}  // namespace hopfimage
