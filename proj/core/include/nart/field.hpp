#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace nart {

class Scalar;

// The exact coefficient field: either Q or F_p for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint32_t characteristic() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;

  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

// An element of a Field. A default-constructed Scalar is the rational zero,
// which acts as zero in every field when combined with other scalars.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }
  static Scalar modular(std::uint64_t value, std::uint32_t modulus);

  bool is_zero() const noexcept { return modulus_ == 0 ? sgn(q_) == 0 : residue_ == 0; }
  bool is_one() const noexcept { return modulus_ == 0 ? q_ == 1 : residue_ == 1; }
  bool is_negative() const noexcept { return modulus_ == 0 && sgn(q_) < 0; }

  std::uint32_t modulus() const noexcept { return modulus_; }
  const mpq_class& rational() const noexcept { return q_; }
  std::uint32_t residue() const noexcept { return residue_; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  // *this -= a * b without temporaries.
  Scalar& submul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // `p/q`, `p`, or the residue in [0, p).
  std::string to_string() const;
  Scalar abs() const;

 private:
  std::uint32_t unify(const Scalar& other) const;

  mpq_class q_;
  std::uint32_t residue_ = 0;
  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nart
