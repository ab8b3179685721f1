#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "hopfimage/algebra.hpp"
#include "hopfimage/word.hpp"

namespace hopfimage {

/// Sparse element of a tensor power H^{(x)k}: multi-index -> coefficient.
using TensorTerms = std::map<std::vector<std::uint32_t>, Scalar>;

/// Finite-dimensional Hopf algebra by structure constants. Coproducts are
/// stored per basis element as sparse vectors over H (x) H, index a * n + b.
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  HopfAlgebra(Algebra algebra, std::vector<SparseVector> coproducts, Vector counit,
              Matrix antipode);

  /// comult is n rows of n^2 entries: comult[c * n * n + a * n + b] is the
  /// coefficient of e_a (x) e_b in Delta(e_c).
  static HopfAlgebra from_dense(Algebra algebra, const Vector& comult, Vector counit,
                                Matrix antipode);
  static HopfAlgebra ground_field(FieldSpec field);

  const Algebra& algebra() const { return algebra_; }
  FieldSpec field() const { return algebra_.field(); }
  std::size_t dim() const { return algebra_.dim(); }

  const SparseVector& coproduct(std::size_t c) const { return coproducts_[c]; }
  const Vector& counit() const { return counit_; }
  const Matrix& antipode() const { return antipode_; }

  /// Delta(x) as a sparse vector over H (x) H.
  SparseVector comultiply(std::span<const Scalar> x) const;
  Scalar apply_counit(std::span<const Scalar> x) const;
  Vector dense_comult() const;
  /// n^2 x n matrix of Delta.
  Matrix comult_matrix() const;

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b);

 private:
  Algebra algebra_;
  std::vector<SparseVector> coproducts_;
  Vector counit_;
  Matrix antipode_;
};

/// Delta^{(k)}(x): k = 0 gives the counit (empty multi-index), k = 1 gives x,
/// and Delta^{(k)} = (Delta (x) id^{k-2}) Delta^{(k-1)}.
TensorTerms iterated_coproduct_terms(const HopfAlgebra& h, std::span<const Scalar> x,
                                     std::size_t k);
/// Same with the antipode applied on every leg whose star flag is set.
TensorTerms twisted_coproduct_terms(const HopfAlgebra& h, std::span<const Scalar> x,
                                    const std::vector<bool>& starred);

/// Dense matrices of the above (dim^k x dim). Throws ResourceCap when the
/// matrix would have more than cap_entries entries.
Matrix iterated_coproduct(const HopfAlgebra& h, std::size_t k, std::size_t cap_entries);
Matrix iterated_coproduct(const HopfAlgebra& h, std::size_t k);
Matrix twisted_coproduct(const HopfAlgebra& h, const Word& w, std::size_t cap_entries);
Matrix twisted_coproduct(const HopfAlgebra& h, const Word& w);

/// Sparse columns of a linear map, for contracting tensor legs.
struct LegMap {
  std::size_t target_dim = 0;
  std::vector<SparseVector> columns;
};
LegMap make_leg_map(const Matrix& m);

/// Applies leg_t to tensor leg t and accumulates the result into out,
/// a dense vector over the left-major tensor product of the target spaces.
void contract_legs(const TensorTerms& terms, const std::vector<const LegMap*>& legs,
                   Vector& out);

HopfAlgebra tensor_hopf(const HopfAlgebra& h, const HopfAlgebra& k);
/// Opposite multiplication and opposite comultiplication, same antipode.
HopfAlgebra op_cop(const HopfAlgebra& h);
/// Linear dual: transposed structure tensors, antipode transposed.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

/// Environment-aware default for the entry cap (HOPFIMAGE_CAP_ENTRIES, else 10^6).
std::size_t default_cap_entries();

}  // namespace hopfimage
