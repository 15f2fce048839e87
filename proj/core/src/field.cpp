#include "nart/field.hpp"

#include <ostream>

#include "nart/error.hpp"

namespace nart {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::non_unit: return "NonUnit";
    case ErrorCode::composition_ill_defined: return "CompositionIllDefined";
    case ErrorCode::invalid_code: return "InvalidCode";
    case ErrorCode::not_simple_root: return "NotSimpleRoot";
    case ErrorCode::precision_too_low: return "PrecisionTooLow";
    case ErrorCode::target_not_solution: return "TargetNotSolution";
    case ErrorCode::not_regular: return "NotRegular";
    case ErrorCode::not_transverse: return "NotTransverse";
    case ErrorCode::non_polynomial_images: return "NonPolynomialImages";
    case ErrorCode::not_local: return "NotLocal";
    case ErrorCode::ill_defined_morphism: return "IllDefinedMorphism";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::internal_invariant: return "InternalInvariant";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) fail(ErrorCode::not_prime, "modulus " + std::to_string(p) + " is not below 2^31");
  if (!is_prime(p)) fail(ErrorCode::not_prime, "modulus " + std::to_string(p) + " is not prime");
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return modulus_ == 0 ? Scalar() : Scalar::modular(0, modulus_); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (modulus_ == 0) return Scalar(mpq_class(value));
  long r = value % static_cast<long>(modulus_);
  if (r < 0) r += modulus_;
  return Scalar::modular(static_cast<std::uint64_t>(r), modulus_);
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (modulus_ == 0) return Scalar(value);
  mpz_class num = value.get_num() % modulus_;
  mpz_class den = value.get_den() % modulus_;
  if (num < 0) num += modulus_;
  if (den == 0) fail(ErrorCode::invalid_argument, "denominator vanishes modulo " + std::to_string(modulus_));
  Scalar n = Scalar::modular(num.get_ui(), modulus_);
  Scalar d = Scalar::modular(den.get_ui(), modulus_);
  return n / d;
}

std::string Field::to_string() const { return modulus_ == 0 ? "Q" : "Fp " + std::to_string(modulus_); }

Scalar Scalar::modular(std::uint64_t value, std::uint32_t modulus) {
  Scalar s;
  s.modulus_ = modulus;
  s.residue_ = static_cast<std::uint32_t>(value % modulus);
  return s;
}

std::uint32_t Scalar::unify(const Scalar& other) const {
  if (modulus_ == other.modulus_) return modulus_;
  // A rational zero is the shared additive identity.
  if (modulus_ == 0 && sgn(q_) == 0) return other.modulus_;
  if (other.modulus_ == 0 && sgn(other.q_) == 0) return modulus_;
  fail(ErrorCode::ring_mismatch, "scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_ == 0) {
    r.q_ = -q_;
  } else if (residue_ != 0) {
    r.residue_ = modulus_ - residue_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::non_unit, "division by zero");
  if (modulus_ == 0) return Scalar(mpq_class(1) / q_);
  // Fermat: a^(p-2).
  std::uint64_t base = residue_, result = 1, e = modulus_ - 2;
  while (e) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return modular(result, modulus_);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  std::uint32_t m = unify(other);
  if (m == 0) {
    q_ += other.q_;
    return *this;
  }
  std::uint64_t a = modulus_ == m ? residue_ : 0, b = other.modulus_ == m ? other.residue_ : 0;
  *this = modular(a + b, m);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  std::uint32_t m = unify(other);
  if (m == 0) {
    q_ -= other.q_;
    return *this;
  }
  std::uint64_t a = modulus_ == m ? residue_ : 0, b = other.modulus_ == m ? other.residue_ : 0;
  *this = modular(a + m - b, m);
  return *this;
}

Scalar& Scalar::submul(const Scalar& a, const Scalar& b) {
  if (modulus_ == 0 && a.modulus_ == 0 && b.modulus_ == 0) {
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), scratch.get_mpq_t());
    return *this;
  }
  return *this -= a * b;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  std::uint32_t m = unify(other);
  if (m == 0) {
    q_ *= other.q_;
    return *this;
  }
  std::uint64_t a = modulus_ == m ? residue_ : 0, b = other.modulus_ == m ? other.residue_ : 0;
  *this = modular(a * b, m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return a.is_zero() && b.is_zero();
  return a.modulus_ == 0 ? a.q_ == b.q_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(residue_);
  return q_.get_str();
}

Scalar Scalar::abs() const { return is_negative() ? -*this : *this; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nart
