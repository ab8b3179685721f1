#include "hopfimage/scalar.hpp"

#include <string>

#include "hopfimage/error.hpp"

namespace hopfimage {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case ErrorCode::UnknownIndex: return "UnknownIndex";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::TruncationOverflow: return "TruncationOverflow";
    case ErrorCode::ResourceCap: return "ResourceCap";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p)) {
    throw HopfError(ErrorCode::InvalidArgument,
                    "field modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
  return is_prime_field() ? "F" + std::to_string(p) : std::string("Q");
}

namespace {

std::uint64_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

}  // namespace

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_prime_field()) {
    r_ = reduce_mod(mpz_class(value), field_.p);
  } else {
    q_ = value;
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_prime_field()) {
    const std::uint64_t den = reduce_mod(value.get_den(), field_.p);
    if (den == 0) {
      throw HopfError(ErrorCode::InvalidArgument,
                      "denominator vanishes in " + field_.to_string());
    }
    r_ = reduce_mod(value.get_num(), field_.p) * pow_mod(den, field_.p - 2, field_.p) %
         field_.p;
  } else {
    q_ = value;
    q_.canonicalize();
  }
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  mpq_class value;
  if (s.empty() || value.set_str(s, 10) != 0) {
    throw HopfError(ErrorCode::ParseError, "not a scalar: '" + std::string(text) + "'");
  }
  if (value.get_den() == 0) {
    throw HopfError(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  }
  value.canonicalize();
  try {
    return Scalar(field, value);
  } catch (const HopfError& e) {
    throw HopfError(ErrorCode::ParseError, e.what());
  }
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? r_ == 0 : sgn(q_) == 0;
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? r_ == 1 : q_ == 1;
}

std::string Scalar::to_string() const {
  return field_.is_prime_field() ? std::to_string(r_) : q_.get_str();
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw HopfError(ErrorCode::FieldMismatch,
                    "scalar fields differ: " + field_.to_string() + " vs " + o.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw HopfError(ErrorCode::InvalidArgument, "inverse of zero");
  Scalar out(*this);
  if (field_.is_prime_field()) {
    out.r_ = pow_mod(r_, field_.p - 2, field_.p);
  } else {
    out.q_ = 1 / q_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime_field()) {
    r_ = (r_ + o.r_) % field_.p;
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime_field()) {
    r_ = (r_ + field_.p - o.r_) % field_.p;
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime_field()) {
    r_ = r_ * o.r_ % field_.p;
  } else {
    q_ *= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (field_.is_prime_field()) {
    out.r_ = (field_.p - r_) % field_.p;
  } else {
    out.q_ = -q_;
  }
  return out;
}

Scalar& Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (field_.is_prime_field()) {
    r_ = (r_ + a.r_ * b.r_) % field_.p;
  } else if (sgn(a.q_) != 0 && sgn(b.q_) != 0) {
    q_ += a.q_ * b.q_;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_prime_field() ? a.r_ == b.r_ : a.q_ == b.q_;
}

}  // namespace hopfimage
