#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hopfimage/morphism.hpp"

namespace hopfimage {

struct AxiomResult {
  std::string name;
  bool passed = true;
  /// Informational entries (such as S^2 = id) never count as failures.
  bool informational = false;
  /// Basis indices of the first failing tuple.
  std::vector<std::size_t> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_passed() const;
  const AxiomResult* find(std::string_view name) const;
  /// Name and witness of the first failure, empty when everything passed.
  std::string first_failure() const;
};

enum class CheckMode { Exhaustive, StopAtFirstFailure };

AxiomReport check_algebra(const Algebra& a, CheckMode mode = CheckMode::Exhaustive);
AxiomReport check_hopf(const HopfAlgebra& h, CheckMode mode = CheckMode::Exhaustive);
/// Unitality and multiplicativity; comultiplicativity, counit and antipode
/// compatibility as well when the morphism claims to be Hopf.
AxiomReport check_morphism(const AlgebraMorphism& f, CheckMode mode = CheckMode::Exhaustive);

/// Throws AxiomViolation naming the first failure.
void require_valid(const AxiomReport& report, std::string_view what);

}  // namespace hopfimage
