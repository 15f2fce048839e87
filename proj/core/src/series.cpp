#include "nart/series.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "nart/error.hpp"
#include "nart/text.hpp"

namespace nart {

TruncatedSeries::TruncatedSeries(RingPtr ring, unsigned known_order) : poly_(std::move(ring)), order_(known_order) {}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, unsigned order) {
  TruncatedSeries s(p.ring(), order);
  s.poly_ = p.truncated(order);
  return s;
}

TruncatedSeries TruncatedSeries::constant(RingPtr ring, const Scalar& c, unsigned order) {
  return from_polynomial(Polynomial::constant(std::move(ring), c), order);
}

TruncatedSeries TruncatedSeries::variable(RingPtr ring, std::size_t index, unsigned order) {
  return from_polynomial(Polynomial::variable(std::move(ring), index), order);
}

unsigned TruncatedSeries::valuation() const {
  return poly_.is_zero() ? order_ : static_cast<unsigned>(poly_.valuation());
}

std::vector<std::pair<Exponent, Scalar>> TruncatedSeries::degree_slice(unsigned d) const {
  std::vector<std::pair<Exponent, Scalar>> out;
  for (const auto& [e, c] : poly_.terms()) {
    unsigned deg = total_degree(e);
    if (deg == d) out.emplace_back(e, c);
    if (deg > d) break;
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(ring(), order_);
  r.poly_ = -poly_;
  return r;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_ring(f.ring(), g.ring(), "series addition");
  unsigned order = std::min(f.known_order(), g.known_order());
  return TruncatedSeries::from_polynomial(f.polynomial() + g.polynomial(), order);
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_ring(f.ring(), g.ring(), "series subtraction");
  unsigned order = std::min(f.known_order(), g.known_order());
  return TruncatedSeries::from_polynomial(f.polynomial() - g.polynomial(), order);
}

PrecisionBound product_bound(PrecisionBound a, PrecisionBound b) {
  unsigned order = std::min(a.order + b.valuation, b.order + a.valuation);
  return {order, std::min(a.valuation + b.valuation, order)};
}

namespace {

Polynomial truncated_product(const Polynomial& a, const Polynomial& b, unsigned order) {
  Polynomial r(a.ring());
  for (const auto& [ea, ca] : a.terms()) {
    unsigned da = total_degree(ea);
    if (da >= order) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) >= order) break;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

}  // namespace

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_ring(f.ring(), g.ring(), "series multiplication");
  PrecisionBound b = product_bound({f.known_order(), f.valuation()}, {g.known_order(), g.valuation()});
  return TruncatedSeries::from_polynomial(truncated_product(f.polynomial(), g.polynomial(), b.order), b.order);
}

TruncatedSeries scale(const TruncatedSeries& f, const Scalar& c) {
  return TruncatedSeries::from_polynomial(f.polynomial().scaled(c), f.known_order());
}

TruncatedSeries invert(const TruncatedSeries& f) {
  Scalar c0 = f.constant_term();
  if (c0.is_zero()) fail(ErrorCode::non_unit, "series with zero constant term is not invertible");
  const unsigned target = f.known_order();
  Polynomial g = Polynomial::constant(f.ring(), c0.inverse());
  Polynomial two = Polynomial::constant(f.ring(), 2);
  // Newton: g <- g (2 - f g), doubling the correct order each round.
  for (unsigned known = 1; known < target;) {
    unsigned next = std::min(2 * known, target);
    Polynomial fg = truncated_product(f.polynomial().truncated(next), g, next);
    g = truncated_product(g, two - fg, next);
    known = next;
  }
  return TruncatedSeries::from_polynomial(g, target);
}

TruncatedSeries truncate(const TruncatedSeries& f, unsigned c) {
  return TruncatedSeries::from_polynomial(f.polynomial(), std::min(c, f.known_order()));
}

namespace {

TruncatedSeries substitute_terms(const Polynomial& f, std::span<const TruncatedSeries> images, unsigned tail_order) {
  if (images.size() != f.ring()->size()) {
    fail(ErrorCode::invalid_argument, "substitute needs one image per variable (" + std::to_string(f.ring()->size()) +
                                          "), got " + std::to_string(images.size()));
  }
  if (images.empty()) fail(ErrorCode::invalid_argument, "substitute into a ring without variables");
  const RingPtr& target = images.front().ring();
  for (const auto& img : images) require_same_ring(img.ring(), target, "images of a substitution");

  // First pass: derive the certified order from (order, valuation) pairs.
  unsigned order = tail_order;
  bool any_nonconstant = false;
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) == 0) continue;
    any_nonconstant = true;
    std::optional<PrecisionBound> acc;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) {
        PrecisionBound b{images[i].known_order(), images[i].valuation()};
        acc = acc ? product_bound(*acc, b) : b;
      }
    }
    order = std::min(order, acc->order);
  }
  if (!any_nonconstant && tail_order == std::numeric_limits<unsigned>::max()) {
    for (const auto& img : images) order = std::min(order, img.known_order());
  }

  // Second pass: evaluate with every intermediate truncated at that order.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t var, unsigned k) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(truncated_product(cache.back(), images[var].polynomial(), order));
    return cache[k];
  };
  Polynomial result(target);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] != 0) term = truncated_product(term, power(i, e[i]), order);
    }
    result += term;
  }
  return TruncatedSeries::from_polynomial(result, order);
}

}  // namespace

TruncatedSeries substitute(const Polynomial& f, std::span<const TruncatedSeries> images) {
  return substitute_terms(f, images, std::numeric_limits<unsigned>::max());
}

TruncatedSeries substitute(const TruncatedSeries& f, std::span<const TruncatedSeries> images) {
  unsigned vmin = std::numeric_limits<unsigned>::max();
  for (const auto& img : images) {
    if (!img.constant_term().is_zero()) {
      fail(ErrorCode::composition_ill_defined, "image with nonzero constant term substituted into a truncated series");
    }
    vmin = std::min(vmin, img.valuation());
  }
  if (images.empty()) fail(ErrorCode::invalid_argument, "substitute into a ring without variables");
  // Unknown terms of f have degree >= known_order and each image has valuation >= vmin >= 1.
  unsigned long tail = static_cast<unsigned long>(f.known_order()) * vmin;
  unsigned tail_order = static_cast<unsigned>(std::min<unsigned long>(tail, std::numeric_limits<unsigned>::max() - 1));
  return substitute_terms(f.polynomial(), images, tail_order);
}

bool nested_support_ok(const TruncatedSeries& f, std::size_t bound) { return f.polynomial().supported_in_prefix(bound); }

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) { return os << to_string(f); }

}  // namespace nart
