#include "nart/hensel.hpp"

#include "nart/error.hpp"

namespace nart {

namespace {

RingPtr without_variable(const RingPtr& ring, std::size_t var) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (i != var) names.push_back(ring->name(i));
  }
  std::size_t x_count = ring->x_count() - (var < ring->x_count() ? 1 : 0);
  return make_ring(ring->field(), std::move(names), x_count);
}

Polynomial truncated_mul(const Polynomial& a, const Polynomial& b, unsigned c) {
  Polynomial out(a.ring());
  for (const auto& [ea, ca] : a.terms()) {
    unsigned da = total_degree(ea);
    if (da >= c) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) >= c) break;
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

std::vector<Polynomial> derivative_coefficients(const std::vector<Polynomial>& coeffs) {
  std::vector<Polynomial> out;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    out.push_back(coeffs[k].scaled(coeffs[k].field().from_int(static_cast<long>(k))));
  }
  return out;
}

}  // namespace

Polynomial evaluate_in_unknown(const std::vector<Polynomial>& coefficients, const Polynomial& f, unsigned c) {
  if (coefficients.empty()) return Polynomial(f.ring());
  Polynomial acc = coefficients.back().truncated(c);
  for (std::size_t k = coefficients.size() - 1; k-- > 0;) {
    acc = truncated_mul(acc, f, c) + coefficients[k].truncated(c);
  }
  return acc;
}

HenselCode::HenselCode(Polynomial defining, std::size_t unknown, Scalar seed)
    : defining_(std::move(defining)),
      unknown_(unknown),
      seed_(std::move(seed)),
      cache_(std::make_shared<Cache>()) {
  const RingPtr& ring = defining_.ring();
  if (unknown_ >= ring->size()) fail(ErrorCode::invalid_argument, "unknown index out of range");
  base_ = without_variable(ring, unknown_);
  int deg = std::max(defining_.degree_in(unknown_), 0);
  coefficients_.assign(static_cast<std::size_t>(deg) + 1, Polynomial(base_));
  for (const auto& [e, c] : defining_.terms()) {
    Exponent rest;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != unknown_) rest.push_back(e[i]);
    }
    coefficients_[e[unknown_]].add_term(rest, c);
  }
}

HenselCode::Validation HenselCode::validate() const {
  if (defining_.degree_in(unknown_) < 1) return {false, "defining polynomial does not involve the unknown"};
  auto at_origin = [&](const std::vector<Polynomial>& coeffs) {
    Scalar acc = base_->field().zero();
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * seed_ + coeffs[k].constant_term();
    return acc;
  };
  Scalar value = at_origin(coefficients_);
  if (!value.is_zero()) return {false, "F(0, seed) = " + value.to_string() + " is not zero"};
  Scalar slope = at_origin(derivative_coefficients(coefficients_));
  if (slope.is_zero()) return {false, "dF/du(0, seed) = 0: the seed is not a simple root"};
  return {true, {}};
}

unsigned HenselCode::cached_order() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->value ? cache_->value->known_order() : 0;
}

TruncatedSeries HenselCode::lift(unsigned c, Stats* stats) const {
  if (c == 0) fail(ErrorCode::invalid_argument, "lift order must be positive");
  Validation v = validate();
  if (!v.ok) fail(ErrorCode::invalid_code, v.reason);
  Stats local;
  Stats& st = stats ? *stats : local;
  st = {};

  Polynomial f(base_);
  unsigned known = 1;
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->value && cache_->value->known_order() >= c) return truncate(*cache_->value, c);
    if (cache_->value) {
      f = cache_->value->polynomial();
      known = cache_->value->known_order();
    } else {
      f = Polynomial::constant(base_, seed_);
    }
  }

  if (coefficients_.size() == 2 && !coefficients_[1].constant_term().is_zero()) {
    // F = a(x) u + b(x) with a unit: u = -b / a.
    st.explicit_solve = true;
    auto a = TruncatedSeries::from_polynomial(coefficients_[1], c);
    auto b = TruncatedSeries::from_polynomial(coefficients_[0], c);
    f = truncate(mul(-b, invert(a)), c).polynomial();
  } else {
    auto dcoeffs = derivative_coefficients(coefficients_);
    while (known < c) {
      unsigned next = std::min(2 * known, c);
      // f is right below `known`, so F(f) vanishes there and dF/du(f) only
      // matters below next - known <= known.
      Polynomial residual = evaluate_in_unknown(coefficients_, f, next);
      Polynomial slope = evaluate_in_unknown(dcoeffs, f, known);
      auto inv = invert(TruncatedSeries::from_polynomial(slope, known));
      f -= truncated_mul(residual, inv.polynomial(), next);
      known = next;
      ++st.newton_steps;
    }
  }

  Polynomial check = evaluate_in_unknown(coefficients_, f, c);
  check_invariant(check.is_zero(), "Newton lift leaves a residual below the requested order");
  TruncatedSeries result = TruncatedSeries::from_polynomial(f, c);
  {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->value || cache_->value->known_order() < c) cache_->value = std::make_unique<TruncatedSeries>(result);
  }
  return result;
}

TruncatedSeries implicit_solve(const Polynomial& G, std::size_t unknown, unsigned c, HenselCode::Stats* stats) {
  HenselCode code(G, unknown, G.field().zero());
  auto v = code.validate();
  if (!v.ok) fail(ErrorCode::not_simple_root, v.reason);
  return code.lift(c, stats);
}

}  // namespace nart
