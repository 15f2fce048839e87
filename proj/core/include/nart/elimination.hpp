#pragma once

#include <optional>
#include <vector>

#include "nart/groebner.hpp"
#include "nart/polynomial.hpp"

namespace nart {

struct PolyIdeal {
  RingPtr ring;
  // Nonzero, deduplicated, in canonical order.
  std::vector<Polynomial> generators;

  PolyIdeal(RingPtr ring, std::vector<Polynomial> gens);
  bool is_zero() const noexcept { return generators.empty(); }
};

struct PolyModule {
  RingPtr ring;
  std::size_t rank;
  std::vector<std::vector<Polynomial>> generators;

  PolyModule(RingPtr ring, std::size_t rank, std::vector<std::vector<Polynomial>> gens);
  bool is_zero() const noexcept { return generators.empty(); }
};

// Deterministic total order on polynomials used for canonical listings.
bool canonical_less(const Polynomial& a, const Polynomial& b);

GroebnerBasis groebner(const PolyIdeal& I, const MonomialOrder& order);
GroebnerBasis groebner(const PolyModule& M, const ModuleOrder& order);
// Reduced basis elements as polynomials.
std::vector<Polynomial> basis_polynomials(const GroebnerBasis& gb, const RingPtr& ring);

// Generators of I ∩ k[vars not in `eliminated`], in I's ring.
std::vector<Polynomial> eliminate_variables(const PolyIdeal& I, const std::vector<bool>& eliminated);
// I ∩ k[x] for I over (x, y), as an ideal of the x-subring.
PolyIdeal eliminate_ideal(const PolyIdeal& I);

// { v in M : v_0 = ... = v_{p-1} = 0 }, projected to the last rank - p
// coordinates. With eliminate_y the y-block is eliminated as well and the
// result lives over the x-subring.
PolyModule module_intersect_zero_block(const PolyModule& M, std::size_t p, bool eliminate_y = true);

struct Idealization {
  PolyIdeal ideal;
  std::size_t p;
  std::size_t t;
  // Ring (x, y, z_1..z_p, w_1..w_t): index of z_1 and w_1.
  std::size_t z_begin;
  std::size_t w_begin;
};

// Ideal of sum b_i z_i + sum c_j w_j over generators (b, c) of M, plus all
// quadratic monomials in (z, w).
Idealization nagata_idealize(const PolyModule& M, std::size_t p);
// Eliminate y and z from the idealization and read off the w-linear parts.
PolyModule idealization_route(const Idealization& idl, const RingPtr& x_ring);

// Mutual normal-form reduction.
bool same_module(const PolyModule& a, const PolyModule& b);
bool same_ideal(const PolyIdeal& a, const PolyIdeal& b);

// k-basis of { trunc_c(f) : f in k[x], deg f < cprime, f in I + (x, y)^cprime }
// for c = 1..c_max; entry c of the result (entry 0 is unused).
std::vector<std::vector<Polynomial>> truncated_completion_elimination_range(const PolyIdeal& I, unsigned c_max,
                                                                             unsigned cprime);
std::vector<Polynomial> truncated_completion_elimination(const PolyIdeal& I, unsigned c, unsigned cprime);

// k-basis of { trunc_c(g) : g in the ideal generated by `gens` } (local
// truncations, so multipliers of degree < c suffice).
std::vector<Polynomial> truncation_span(const RingPtr& ring, const std::vector<Polynomial>& gens, unsigned c);

struct EliminationComparison {
  unsigned c;
  std::vector<Polynomial> exact;
  // First cprime at which the truncated space equals the exact one.
  std::optional<unsigned> stabilized_at;
  std::vector<Polynomial> candidates_at_max;
};

// Compares truncations of I ∩ k[x] with the truncated comparator for every
// c <= c_max, scanning cprime = c .. cprime_max.
std::vector<EliminationComparison> compare_elimination(const PolyIdeal& I, unsigned c_max, unsigned cprime_max);

enum class ChevalleyMode { exact, truncated };

struct ChevalleyResult {
  unsigned c;
  unsigned beta;
  ChevalleyMode mode;
  unsigned working_order;  // 0 in exact mode
};

// Least beta >= 1 with M ∩ ((x)^beta F_p ⊕ F_t) ⊂ M ∩ (0 ⊕ F_t) + (x)^c F;
// 0 for the zero module. Exact mode needs x-only generators.
ChevalleyResult chevalley_beta(const PolyModule& M, std::size_t p, unsigned c, ChevalleyMode mode,
                               unsigned working_order = 0, unsigned beta_max = 64);

// { s : T s = 0 } for a p x m polynomial matrix.
PolyModule syzygies(const std::vector<std::vector<Polynomial>>& T);

}  // namespace nart
