#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nart/linalg.hpp"
#include "nart/polynomial.hpp"

namespace nart {

// Fixed list of monomials used as coordinates for polynomials.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Exponent> monomials);

  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Exponent>& monomials() const noexcept { return monomials_; }
  const Exponent& at(std::size_t i) const { return monomials_.at(i); }
  std::optional<std::size_t> find(const Exponent& e) const;

 private:
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> position_;
};

// Every term of p must be indexed; coordinates are shifted by `offset`.
SparseEntries coordinates(const Polynomial& p, const MonomialIndex& index, std::size_t offset = 0);
// Entries outside [offset, offset + index.size()) are ignored.
Polynomial from_coordinates(const RingPtr& ring, const SparseEntries& v, const MonomialIndex& index,
                            std::size_t offset = 0);

// Canonical basis of the k-span of `polys`: reduced echelon form with
// pivots on leading (largest) monomials, sorted by leading monomial.
std::vector<Polynomial> span_basis(const RingPtr& ring, std::span<const Polynomial> polys);
std::size_t span_dimension(const RingPtr& ring, std::span<const Polynomial> polys);
bool span_contains(const RingPtr& ring, std::span<const Polynomial> big, std::span<const Polynomial> small);
bool span_equal(const RingPtr& ring, std::span<const Polynomial> a, std::span<const Polynomial> b);

// Canonical basis of the normal forms of span(a) modulo span(b); its
// dimension is dim(span(a) + span(b)) - dim span(b).
std::vector<Polynomial> span_quotient(const RingPtr& ring, std::span<const Polynomial> a,
                                      std::span<const Polynomial> b);

}  // namespace nart
