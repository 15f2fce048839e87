#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nart/linalg.hpp"
#include "nart/series.hpp"
#include "nart/span.hpp"

namespace nart {

// sigma[i] is the number of leading ring variables unknown i may use.
class NestedProfile {
 public:
  NestedProfile() = default;
  explicit NestedProfile(std::vector<std::size_t> sigma);

  const std::vector<std::size_t>& sigma() const noexcept { return sigma_; }
  std::size_t size() const noexcept { return sigma_.size(); }
  std::size_t operator[](std::size_t i) const { return sigma_.at(i); }
  // Stable permutation making sigma weakly increasing: slot k of the sorted
  // order holds unknown permutation()[k].
  const std::vector<std::size_t>& permutation() const noexcept { return permutation_; }
  std::size_t min_sigma() const;

  template <class T>
  std::vector<T> to_sorted(const std::vector<T>& v) const {
    std::vector<T> out;
    out.reserve(v.size());
    for (std::size_t k : permutation_) out.push_back(v.at(k));
    return out;
  }
  template <class T>
  std::vector<T> from_sorted(const std::vector<T>& v) const {
    std::vector<T> out(v);
    for (std::size_t k = 0; k < permutation_.size(); ++k) out.at(permutation_[k]) = v.at(k);
    return out;
  }

 private:
  std::vector<std::size_t> sigma_;
  std::vector<std::size_t> permutation_;
};

// T y = b modulo (x)^c with y_i restricted to the first sigma(i) variables.
struct NestedLinearSystem {
  std::vector<std::vector<TruncatedSeries>> T;
  std::vector<TruncatedSeries> b;
  NestedProfile profile;
  unsigned c = 1;

  static NestedLinearSystem from_polynomials(const std::vector<std::vector<Polynomial>>& T,
                                             const std::vector<Polynomial>& b, std::vector<std::size_t> sigma,
                                             unsigned c);

  const RingPtr& ring() const { return b.at(0).ring(); }
  std::size_t rows() const noexcept { return b.size(); }
  std::size_t unknowns() const noexcept { return profile.size(); }
  // Shape, ring, sigma range and precision checks.
  void validate() const;
};

using SeriesVector = std::vector<TruncatedSeries>;

struct SolutionSet {
  bool solvable = false;
  // Least d such that the equations of total degree <= d are inconsistent.
  std::optional<unsigned> obstruction_degree;
  SeriesVector particular;
  std::vector<SeriesVector> nullspace;
  unsigned validity_order = 0;
};

// Coefficient pin: unknown `component` has coefficient `value` on x^exponent.
struct Pin {
  std::size_t component;
  Exponent exponent;
  Scalar value;
};

struct SolveOptions {
  PivotRule rule = PivotRule::markowitz;
  PivotRule late_rule = PivotRule::ordered;
  // Elimination class of each coefficient unknown; empty means all class 0.
  std::function<std::uint8_t(std::size_t component, const Exponent&)> column_class;
  std::vector<Pin> pins;
  bool nullspace = true;
  bool obstruction = true;
  // Residual and nesting checks on every returned vector.
  bool verify = true;
};

// The assembled coefficient system together with its elimination.
class CoefficientSolve {
 public:
  CoefficientSolve(const NestedLinearSystem& sys, const SolveOptions& options);

  const Echelon& echelon() const noexcept { return echelon_; }
  std::size_t columns() const noexcept { return columns_; }
  std::size_t component_of(std::size_t column) const;
  const Exponent& exponent_of(std::size_t column) const;
  std::optional<std::size_t> column_of(std::size_t component, const Exponent& e) const;
  std::size_t offset(std::size_t component) const { return offsets_.at(component); }
  const MonomialIndex& unknowns(std::size_t component) const { return unknowns_.at(component); }

  SeriesVector to_vector(const SparseEntries& v) const;
  SeriesVector to_vector(const std::vector<Scalar>& dense) const;

 private:
  RingPtr ring_;
  unsigned c_;
  std::vector<MonomialIndex> unknowns_;
  std::vector<std::size_t> offsets_;
  std::size_t columns_ = 0;
  Echelon echelon_;
};

SolutionSet solve_nested(const NestedLinearSystem& sys, const SolveOptions& options = {});

// T y - b truncated below `order`, one polynomial per row.
std::vector<Polynomial> residual(const NestedLinearSystem& sys, const SeriesVector& y, unsigned order);
bool is_solution(const NestedLinearSystem& sys, const SeriesVector& y, unsigned order);
bool is_nested(const NestedProfile& profile, const SeriesVector& y);

// Solution at the system's order agreeing with `target` below degree c.
SolutionSet approximate(const NestedLinearSystem& sys, const SeriesVector& target, unsigned c,
                        const SolveOptions& options = {});

// Unknowns (y0, y) for [-b | T] (y0, y) = 0 with sigma(0) = min sigma.
NestedLinearSystem homogenize(const NestedLinearSystem& sys);
// (y0^{-1} y_1, ..., y0^{-1} y_m) below order c; NonUnit when y0(0) = 0.
SeriesVector recover_from_homogeneous(const SeriesVector& y, unsigned c);

enum class HomogeneousPin { constant_term, whole_series };
// Solve the homogenized system with y0(0) = 1 (or y0 = 1) pinned and recover.
std::optional<SeriesVector> solve_via_homogenization(const NestedLinearSystem& sys, HomogeneousPin pin,
                                                     const SolveOptions& options = {});

// Lowest d with f(0, ..., 0, x_n) = x_n^d * unit, searched below f's known order.
std::optional<unsigned> regularity_order(const TruncatedSeries& f);

struct WeierstrassResult {
  unsigned d = 0;
  unsigned working_order = 0;
  TruncatedSeries q;
  SeriesVector a;
};

// g = f q + sum_{k<d} a_k(x') x_n^k modulo (x)^c. The coefficient system is
// solved at working order d (c + 1), where truncations below c of q and a
// are unique; every such coefficient must be determined by the elimination.
WeierstrassResult weierstrass_divide(const TruncatedSeries& f, const TruncatedSeries& g, unsigned c,
                                     const SolveOptions& options = {});
unsigned weierstrass_working_order(unsigned d, unsigned c);

struct ImplicitLinearResult {
  TruncatedSeries h;
  TruncatedSeries u;
};

// The nested solution of f u + x_n - h = 0 with h free of x_n.
ImplicitLinearResult implicit_linear(const TruncatedSeries& f, unsigned c, const SolveOptions& options = {});

}  // namespace nart
