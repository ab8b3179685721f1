#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfimage {

/// The base field: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws InvalidArgument unless p is prime.
  static FieldSpec prime_field(std::uint32_t p);

  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms by GMP; residues
/// are reduced into [0, p). Mixing fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(FieldSpec field, long value = 0);
  Scalar(FieldSpec field, const mpq_class& value);

  /// "a/b" or "a" over Q, a (possibly negative or fractional) integer over F_p.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  Scalar inverse() const;

  /// Q only.
  const mpq_class& rational() const { return q_; }
  /// F_p only.
  std::uint64_t residue() const { return r_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  /// this += a * b, the inner loop of every elimination.
  Scalar& add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace hopfimage
