#pragma once

#include <memory>
#include <mutex>
#include <string>

#include "nart/series.hpp"

namespace nart {

// An algebraic power series given as the simple root of F(x, u) = 0 with
// u(0) = seed. F lives in a ring whose variable `unknown` is u; the series
// lives in the same ring with u removed.
class HenselCode {
 public:
  HenselCode(Polynomial defining, std::size_t unknown, Scalar seed);

  const Polynomial& defining() const noexcept { return defining_; }
  std::size_t unknown() const noexcept { return unknown_; }
  const Scalar& seed() const noexcept { return seed_; }
  const RingPtr& base_ring() const noexcept { return base_; }

  struct Validation {
    bool ok = false;
    std::string reason;
  };
  Validation validate() const;

  struct Stats {
    unsigned newton_steps = 0;
    bool explicit_solve = false;
  };
  // The unique root known to order c; InvalidCode when validate() fails.
  TruncatedSeries lift(unsigned c, Stats* stats = nullptr) const;
  // Largest order currently cached (0 when nothing is).
  unsigned cached_order() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::unique_ptr<TruncatedSeries> value;
  };

  Polynomial defining_;
  std::size_t unknown_;
  Scalar seed_;
  RingPtr base_;
  // coefficients_[k] is the coefficient of u^k, over the base ring.
  std::vector<Polynomial> coefficients_;
  std::shared_ptr<Cache> cache_;
};

// The unique g with g(0) = 0 and G(..., g, ...) = 0 modulo degree c, where
// `unknown` indexes g's slot in G's ring. NotSimpleRoot unless G(0) = 0 and
// dG/du(0) != 0.
TruncatedSeries implicit_solve(const Polynomial& G, std::size_t unknown, unsigned c,
                               HenselCode::Stats* stats = nullptr);

// F(x, f) for F given by its u-coefficients, computed below degree c.
Polynomial evaluate_in_unknown(const std::vector<Polynomial>& coefficients, const Polynomial& f, unsigned c);

}  // namespace nart
