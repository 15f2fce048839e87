#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace nart {

// One exponent per variable of the ambient ring.
using Exponent = std::vector<std::uint32_t>;

unsigned total_degree(std::span<const std::uint32_t> e);
bool divides(const Exponent& a, const Exponent& b);
Exponent operator+(const Exponent& a, const Exponent& b);
// b - a; requires divides(a, b).
Exponent quotient(const Exponent& b, const Exponent& a);
Exponent lcm(const Exponent& a, const Exponent& b);
bool coprime(const Exponent& a, const Exponent& b);
// True iff every variable at index >= bound has exponent zero.
bool supported_in_prefix(const Exponent& e, std::size_t bound);

// Canonical storage and printing order: total degree ascending, then the
// exponent of the first variable descending, then the second, ... so that
// degree-2 terms in (x1, x2) print as x1^2, x1*x2, x2^2.
struct GradedLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// All exponents over `nvars` variables that use only the first `prefix`
// variables and have total degree < `bound`, in GradedLess order.
std::vector<Exponent> monomials_below(std::size_t nvars, std::size_t prefix, unsigned bound);
// Same, restricted to exactly degree `degree`.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, std::size_t prefix, unsigned degree);

// Term orders used by the Groebner engine.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
  // Elimination order: the variables flagged in `eliminated` form the front
  // block (graded reverse lex), compared before the remaining variables.
  static MonomialOrder block(std::vector<bool> eliminated) { return MonomialOrder(Kind::block, std::move(eliminated)); }

  Kind kind() const noexcept { return kind_; }
  const std::vector<bool>& eliminated() const noexcept { return eliminated_; }
  bool eliminates(std::size_t var) const { return kind_ == Kind::block && var < eliminated_.size() && eliminated_[var]; }

  // Negative, zero, positive like strcmp; larger means "leading".
  int compare(const Exponent& a, const Exponent& b) const;

 private:
  MonomialOrder(Kind kind, std::vector<bool> eliminated) : kind_(kind), eliminated_(std::move(eliminated)) {}
  Kind kind_;
  std::vector<bool> eliminated_;
};

}  // namespace nart
