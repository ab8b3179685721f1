#pragma once

#include <map>
#include <optional>
#include <memory>
#include <string>
#include <vector>

#include "hopfimage/hopf_algebra.hpp"
#include "hopfimage/morphism.hpp"
#include "hopfimage/subspace.hpp"
#include "hopfimage/word.hpp"

namespace hopfimage {

/// Indexed family of algebra morphisms pi_i : H -> A_i out of one Hopf algebra.
class MorphismFamily {
 public:
  MorphismFamily(std::shared_ptr<const HopfAlgebra> domain, std::vector<AlgebraMorphism> maps,
                 std::vector<std::string> labels = {});

  const HopfAlgebra& domain() const { return *domain_; }
  const std::shared_ptr<const HopfAlgebra>& domain_ptr() const { return domain_; }
  std::size_t size() const { return maps_.size(); }
  const AlgebraMorphism& map(std::size_t i) const { return maps_.at(i); }
  const std::vector<AlgebraMorphism>& maps() const { return maps_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  FieldSpec field() const { return domain_->field(); }
  /// Every map claims to be a Hopf morphism.
  bool hopf_family() const { return hopf_family_; }

 private:
  std::shared_ptr<const HopfAlgebra> domain_;
  std::vector<AlgebraMorphism> maps_;
  std::vector<std::string> labels_;
  bool hopf_family_ = true;
};

/// Runs check_morphism on every member; throws AxiomViolation on failure.
void verify_family(const MorphismFamily& fam);

/// Target algebra A_w: tensor product of the A_i, opposite on starred letters;
/// the ground field for the empty word.
Algebra word_target(const MorphismFamily& fam, const Word& w);
std::size_t word_target_dim(const MorphismFamily& fam, const Word& w);

/// pi_w = (c_1 (x) ... (x) c_k) o Delta^(k) with c_t = pi_{i_t} or pi_{i_t} o S.
/// Throws UnknownIndex, or ResourceCap when the matrix exceeds cap_entries.
AlgebraMorphism word_map(const MorphismFamily& fam, const Word& w);
Matrix word_matrix(const MorphismFamily& fam, const Word& w, std::size_t cap_entries);
Matrix word_matrix(const MorphismFamily& fam, const Word& w);
/// pi_w applied to each vector; the columns of the result are the images.
/// Cheaper than word_matrix when only a few vectors are needed.
Matrix word_images(const MorphismFamily& fam, const Word& w, const std::vector<Vector>& vectors,
                   std::size_t cap_entries);
Subspace word_kernel(const MorphismFamily& fam, const Word& w);

/// Evaluates word maps on chosen vectors, caching the twisted coproducts of
/// basis elements per star pattern. Not safe for concurrent use.
class WordEvaluator {
 public:
  explicit WordEvaluator(const MorphismFamily& fam, std::size_t cap_entries = default_cap_entries());

  /// Columns are pi_w(v) for the given vectors.
  Matrix images(const Word& w, const std::vector<Vector>& vectors);
  Vector image(const Word& w, std::span<const Scalar> v);

 private:
  const TensorTerms& terms(const std::vector<bool>& pattern, std::size_t basis_index);

  const MorphismFamily& fam_;
  std::size_t cap_;
  std::vector<LegMap> legs_;
  std::map<std::pair<std::vector<bool>, std::size_t>, TensorTerms> cache_;
};

/// Intersection of ker pi_i over the family.
Subspace common_kernel(const MorphismFamily& fam);

}  // namespace hopfimage
