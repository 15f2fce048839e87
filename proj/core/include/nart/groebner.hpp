#pragma once

#include <vector>

#include "nart/field.hpp"
#include "nart/monomial.hpp"
#include "nart/polynomial.hpp"

namespace nart {

struct GTerm {
  std::size_t pos;
  Exponent exp;
  Scalar coeff;
};

// Element of a free module: nonzero terms sorted by decreasing module order.
using GVector = std::vector<GTerm>;

// Positions below `front_positions` dominate all others and compare by
// position first (lower index is larger). The remaining positions compare
// by term first, then position. With one position this is the term order.
class ModuleOrder {
 public:
  explicit ModuleOrder(MonomialOrder term, std::size_t front_positions = 0)
      : term_(std::move(term)), front_(front_positions) {}

  const MonomialOrder& term_order() const noexcept { return term_; }
  std::size_t front_positions() const noexcept { return front_; }
  int compare(std::size_t pa, const Exponent& a, std::size_t pb, const Exponent& b) const;
  int compare(const GTerm& a, const GTerm& b) const { return compare(a.pos, a.exp, b.pos, b.exp); }

 private:
  MonomialOrder term_;
  std::size_t front_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(Field field, std::size_t nvars, std::size_t rank, ModuleOrder order)
      : field_(std::move(field)), nvars_(nvars), rank_(rank), order_(std::move(order)) {}

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t rank() const noexcept { return rank_; }
  const ModuleOrder& order() const noexcept { return order_; }
  // Reduced, monic, sorted by increasing leading term.
  const std::vector<GVector>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  // Full reduction; the result is canonical for the module.
  GVector normal_form(GVector v) const;
  bool contains(const GVector& v) const { return normal_form(v).empty(); }

 private:
  friend GroebnerBasis buchberger(const Field&, std::size_t, std::size_t, std::vector<GVector>, const ModuleOrder&);
  Field field_;
  std::size_t nvars_;
  std::size_t rank_;
  ModuleOrder order_;
  std::vector<GVector> elements_;
};

// Normal selection strategy (least lcm first) with the chain criterion and,
// for rank one, the coprime leading monomial criterion.
GroebnerBasis buchberger(const Field& field, std::size_t nvars, std::size_t rank, std::vector<GVector> gens,
                         const ModuleOrder& order);

// True iff every S-vector of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

// Conversions between polynomial vectors and sorted term lists.
GVector to_gvector(const std::vector<Polynomial>& components, const ModuleOrder& order);
GVector to_gvector(const Polynomial& p, const ModuleOrder& order);
std::vector<Polynomial> from_gvector(const GVector& v, const RingPtr& ring, std::size_t rank);

// a - c * x^shift * b
GVector sub_scaled(const GVector& a, const Scalar& c, const Exponent& shift, const GVector& b,
                   const ModuleOrder& order);

}  // namespace nart
