#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hopfimage/family.hpp"

namespace hopfimage {

/// Multiplication table of a finite group: mult[a][b] = index of ab.
struct GroupTable {
  std::vector<std::vector<std::size_t>> mult;
  std::vector<std::string> names;

  std::size_t order() const { return mult.size(); }
  std::size_t identity() const;
  std::size_t inverse(std::size_t g) const;
};

/// Throws NotAGroup naming the failing element tuple.
void validate_group(const GroupTable& g);

GroupTable cyclic_group(std::size_t n);
/// Elements 1, a, b, ab.
GroupTable klein_four();
/// Permutations of {0,1,2} in lexicographic order of their images; the
/// identity comes first.
GroupTable symmetric_group_s3();
/// Permutation of {0,1,2} for an element of symmetric_group_s3().
std::vector<std::size_t> s3_permutation(std::size_t g);

/// kG with basis G, Delta g = g (x) g, eps g = 1, S g = g^-1. A table whose
/// identity is not element 0 is relabelled so that the unit comes first.
HopfAlgebra group_algebra(FieldSpec field, const GroupTable& g);
/// Functions on G (the dual of kG), basis of point masses.
HopfAlgebra function_algebra(FieldSpec field, const GroupTable& g);

/// Taft algebra on g^a x^b (index a * n + b): g^n = 1, x^n = 0, xg = q gx,
/// Delta x = x (x) 1 + g (x) x. Throws NotPrimitiveRoot.
HopfAlgebra taft(FieldSpec field, std::size_t n, const Scalar& q);
/// taft(2, -1) over Q, basis 1, x, g, gx.
HopfAlgebra sweedler(FieldSpec field = FieldSpec::rationals());

/// Builtin Hopf algebras by name: "group:Z2", "group:Z2xZ2", "group:S3",
/// "group:Z<n>", "sweedler", "taft:n:q", "taft:n:q:p", "dual:<name>",
/// "tensor(<a>,<b>)". "<name>@F<p>" moves group algebras and Sweedler to F_p.
/// Throws InvalidArgument for unknown names.
std::shared_ptr<const HopfAlgebra> builtin_hopf(std::string_view name);
/// Builtin morphisms "morph:..." and families "fam:...".
AlgebraMorphism builtin_morphism(std::string_view name);
MorphismFamily builtin_family(std::string_view name);
/// True when the name has builtin syntax (it may still fail to resolve).
bool is_builtin_name(std::string_view name);

/// Names listed by the CLI and used by the test suites.
std::vector<std::string> builtin_hopf_names();
std::vector<std::string> builtin_morphism_names();
std::vector<std::string> builtin_family_names();

}  // namespace hopfimage
