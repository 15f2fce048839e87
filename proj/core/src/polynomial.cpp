#include "nart/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "nart/error.hpp"
#include "nart/text.hpp"

namespace nart {

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(std::move(ring));
  p.add_term(Exponent(p.ring_->size(), 0), c);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Exponent e(ring->size(), 0);
  e.at(index) = 1;
  Scalar one = ring->field().one();
  return monomial(std::move(ring), std::move(e), one);
}

Polynomial Polynomial::monomial(RingPtr ring, Exponent e, const Scalar& c) {
  Polynomial p(std::move(ring));
  p.add_term(e, c);
  return p;
}

Scalar Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field().zero() : it->second;
}

Scalar Polynomial::constant_term() const { return coefficient(Exponent(ring_->size(), 0)); }

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first));
}

int Polynomial::valuation() const {
  return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first));
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != ring_->size()) fail(ErrorCode::ring_mismatch, "exponent length differs from variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "polynomial addition");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "polynomial subtraction");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
  Polynomial r(a.ring_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const Exponent& s) const {
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + s, c);
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * field().from_int(static_cast<long>(e[var])));
  }
  return r;
}

Polynomial Polynomial::truncated(unsigned c) const {
  Polynomial r(ring_);
  for (const auto& [e, v] : terms_) {
    if (total_degree(e) >= c) break;
    r.terms_.emplace_hint(r.terms_.end(), e, v);
  }
  return r;
}

bool Polynomial::supported_in_prefix(std::size_t bound) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [bound](const auto& t) { return nart::supported_in_prefix(t.first, bound); });
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

Polynomial Polynomial::mapped(RingPtr target, std::span<const std::size_t> var_map) const {
  if (target->field() != ring_->field()) fail(ErrorCode::ring_mismatch, "mapping between different fields");
  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Exponent m(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= var_map.size() || var_map[i] >= target->size()) {
        fail(ErrorCode::ring_mismatch, "variable " + ring_->name(i) + " has no image in the target ring");
      }
      m[var_map[i]] += e[i];
    }
    r.add_term(m, c);
  }
  return r;
}

Polynomial Polynomial::embedded(RingPtr target) const {
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return mapped(std::move(target), map);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.ring()->size()) fail(ErrorCode::invalid_argument, "compose needs one image per variable");
  if (images.empty()) fail(ErrorCode::invalid_argument, "compose needs a target ring");
  const RingPtr& target = images.front().ring();
  for (const auto& img : images) require_same_ring(img.ring(), target, "images of a composition");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t var, unsigned k) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[var]);
    return cache[k];
  };
  Polynomial result(target);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * power(i, e[i]);
    }
    result += term;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace nart
