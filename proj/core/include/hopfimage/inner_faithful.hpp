#pragma once

#include <optional>
#include <vector>

#include "hopfimage/family.hpp"

namespace hopfimage {

/// A subspace J of H verified to be a Hopf ideal inside ker eps.
struct HopfIdealCertificate {
  Subspace subspace;
  bool contained_in_ker_eps = false;
  bool two_sided_ideal = false;
  bool coideal = false;
  bool antipode_stable = false;
  /// Refinement rounds used by largest_hopf_ideal (0 when certified directly).
  std::size_t iterations = 0;

  bool valid() const {
    return contained_in_ker_eps && two_sided_ideal && coideal && antipode_stable;
  }
};

/// Checks the four Hopf ideal conditions exactly; the flags record each one.
HopfIdealCertificate certify_hopf_ideal(const HopfAlgebra& h, const Subspace& j);

/// Greatest Hopf ideal of h contained in v, by fixed-point refinement from
/// v intersected with ker eps.
HopfIdealCertificate largest_hopf_ideal(const HopfAlgebra& h, const Subspace& v);

struct KernelChain {
  /// levels[n] is the intersection of word kernels over all words of length <= n.
  std::vector<Subspace> levels;
  /// First n with levels[n] == levels[n + 1], if one was observed.
  std::optional<std::size_t> stabilized_at;
  std::size_t words_evaluated = 0;
};

KernelChain kernel_chain(const MorphismFamily& fam, std::size_t max_len,
                         std::size_t cap_entries = default_cap_entries());

struct ScanEntry {
  std::size_t length = 0;
  std::size_t dim = 0;
};

struct IFVerdict {
  bool jointly_inner_faithful = false;
  HopfIdealCertificate witness;
  Subspace common_kernel;
  std::vector<ScanEntry> word_scan;
  std::optional<std::size_t> stabilized_at;
  /// The scan at its largest length is still bigger than the witness.
  bool warn = false;
  /// witness is contained in every scan level (checked, always expected).
  bool sandwich_holds = true;
};

IFVerdict decide_jointly_if(const MorphismFamily& fam, std::size_t scan_len = 4,
                            std::size_t cap_entries = default_cap_entries());

struct HopfImage {
  std::shared_ptr<const HopfAlgebra> image;
  AlgebraMorphism quotient;
  MorphismFamily factored;
  HopfIdealCertificate kernel;
};

/// H / J for the largest Hopf ideal J in the common kernel, with the maps
/// factored through it.
HopfImage hopf_image(const MorphismFamily& fam);
/// Same, reusing an already computed verdict.
HopfImage hopf_image(const MorphismFamily& fam, const HopfIdealCertificate& witness);

/// Maps pi_i (x) pi_j on H (x) K, index i * |J| + j.
MorphismFamily tensor_family(const MorphismFamily& fam_i, const MorphismFamily& fam_j);

/// Shortest word (ties broken by enumeration order) with pi_w(vectors)
/// linearly independent, over lengths 0..max_len. Throws NotIndependent when
/// the input vectors are dependent.
std::optional<Word> separating_word(const MorphismFamily& fam, const std::vector<Vector>& vectors,
                                    std::size_t max_len,
                                    std::size_t cap_entries = default_cap_entries());

/// Adds the direct-product maps H -> A_i1 x ... x A_im for every subset of
/// size 2..max_subset (subsets in lexicographic order).
MorphismFamily close_under_products(const MorphismFamily& fam, std::size_t max_subset);
MorphismFamily close_under_products(const MorphismFamily& fam);
bool is_jointly_faithful(const MorphismFamily& fam);
bool antipode_injective(const HopfAlgebra& h);

struct MixedSeparation {
  /// Word over the index set of tensor_family(fam_i, fam_j).
  Word word;
  Word i_word;
  Word j_word;
  Vector image;
};

struct MixedBounds {
  std::size_t max_j_length = 4;
  std::size_t cap_entries = default_cap_entries();
};

/// For a jointly faithful plain family on H (antipode injective) and a
/// jointly IF family on K, finds a word over I x J not annihilating x.
/// Throws InvalidArgument when x = 0 or the hypotheses fail, BoundExceeded
/// when no j-word within the bound sees x.
MixedSeparation mixed_tensor_separation(const MorphismFamily& fam_i, const MorphismFamily& fam_j,
                                        std::span<const Scalar> x, const MixedBounds& bounds = {});

}  // namespace hopfimage
