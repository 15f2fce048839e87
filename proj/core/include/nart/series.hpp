#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nart/polynomial.hpp"

namespace nart {

// A multivariate power series known exactly below total degree
// `known_order`; nothing is claimed about higher degrees, and no term of
// degree >= known_order is ever stored.
class TruncatedSeries {
 public:
  TruncatedSeries(RingPtr ring, unsigned known_order);

  // Truncates p below `order` and certifies that much.
  static TruncatedSeries from_polynomial(const Polynomial& p, unsigned order);
  static TruncatedSeries constant(RingPtr ring, const Scalar& c, unsigned order);
  static TruncatedSeries variable(RingPtr ring, std::size_t index, unsigned order);

  const RingPtr& ring() const noexcept { return poly_.ring(); }
  const Field& field() const noexcept { return poly_.field(); }
  unsigned known_order() const noexcept { return order_; }
  const TermMap& terms() const noexcept { return poly_.terms(); }
  // The stored (certified) part as an exact polynomial.
  const Polynomial& polynomial() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  Scalar coefficient(const Exponent& e) const { return poly_.coefficient(e); }
  Scalar constant_term() const { return poly_.constant_term(); }
  // Lower bound for the valuation: lowest stored degree, or known_order.
  unsigned valuation() const;

  // Graded slice: the stored terms of total degree d.
  std::vector<std::pair<Exponent, Scalar>> degree_slice(unsigned d) const;

  TruncatedSeries operator-() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.poly_ == b.poly_;
  }

 private:
  Polynomial poly_;
  unsigned order_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
// known_order = min(ord f + v(g), ord g + v(f)).
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, const Scalar& c);
// f^{-1} at the same known order; NonUnit when f(0) = 0.
TruncatedSeries invert(const TruncatedSeries& f);
// Drops terms of degree >= c and caps the known order at c.
TruncatedSeries truncate(const TruncatedSeries& f, unsigned c);
// f(images); one image per variable of f's ring. Images may have a nonzero
// constant term only when f is an exact polynomial.
TruncatedSeries substitute(const Polynomial& f, std::span<const TruncatedSeries> images);
TruncatedSeries substitute(const TruncatedSeries& f, std::span<const TruncatedSeries> images);
// True iff every stored exponent involves only the first `bound` variables.
bool nested_support_ok(const TruncatedSeries& f, std::size_t bound);

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return sub(f, g); }
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return mul(f, g); }

// The known-order bookkeeping of `mul` on (order, valuation) pairs.
struct PrecisionBound {
  unsigned order;
  unsigned valuation;
};
PrecisionBound product_bound(PrecisionBound a, PrecisionBound b);

std::string to_string(const TruncatedSeries& f);
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f);

}  // namespace nart
