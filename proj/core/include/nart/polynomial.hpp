#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nart/field.hpp"
#include "nart/monomial.hpp"
#include "nart/ring.hpp"

namespace nart {

using TermMap = std::map<Exponent, Scalar, GradedLess>;

// Sparse multivariate polynomial; zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Exponent e, const Scalar& c);

  const RingPtr& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_->field(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const Exponent& e) const;
  Scalar constant_term() const;
  // -1 for the zero polynomial.
  int degree() const;
  // Lowest total degree of a stored term; -1 for zero.
  int valuation() const;
  // Largest exponent of variable `var`; -1 for zero.
  int degree_in(std::size_t var) const;

  void add_term(const Exponent& e, const Scalar& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial shifted(const Exponent& e) const;

  Polynomial derivative(std::size_t var) const;
  // Terms of total degree < c.
  Polynomial truncated(unsigned c) const;
  bool supported_in_prefix(std::size_t bound) const;
  bool involves(std::size_t var) const;

  // Re-expresses the polynomial in `target`: variable i goes to index
  // var_map[i]. Used to move between x-only rings and (x, y) rings.
  Polynomial mapped(RingPtr target, std::span<const std::size_t> var_map) const;
  // Same variables as a prefix of `target` (or `target` as a prefix of ours,
  // when no dropped variable is used).
  Polynomial embedded(RingPtr target) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  TermMap terms_;
};

// f(images[0], images[1], ...) computed exactly.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> images);

std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace nart
