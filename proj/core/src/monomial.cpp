#include "nart/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace nart {

unsigned total_degree(std::span<const std::uint32_t> e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent quotient(const Exponent& b, const Exponent& a) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

bool supported_in_prefix(const Exponent& e, std::size_t bound) {
  for (std::size_t i = bound; i < e.size(); ++i) {
    if (e[i] != 0) return false;
  }
  return true;
}

bool GradedLess::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void fill_degree(Exponent& current, std::size_t var, std::size_t prefix, unsigned remaining,
                 std::vector<Exponent>& out) {
  if (var + 1 >= prefix) {
    if (prefix == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    current[var] = remaining;
    out.push_back(current);
    current[var] = 0;
    return;
  }
  // Larger leading exponents first, matching GradedLess within a degree.
  for (unsigned k = remaining + 1; k-- > 0;) {
    current[var] = k;
    fill_degree(current, var + 1, prefix, remaining - k, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, std::size_t prefix, unsigned degree) {
  std::vector<Exponent> out;
  Exponent current(nvars, 0);
  fill_degree(current, 0, std::min(prefix, nvars), degree, out);
  return out;
}

std::vector<Exponent> monomials_below(std::size_t nvars, std::size_t prefix, unsigned bound) {
  std::vector<Exponent> out;
  for (unsigned d = 0; d < bound; ++d) {
    auto slice = monomials_of_degree(nvars, prefix, d);
    if (slice.empty()) break;
    out.insert(out.end(), std::make_move_iterator(slice.begin()), std::make_move_iterator(slice.end()));
  }
  return out;
}

namespace {

int grevlex_on(const Exponent& a, const Exponent& b, const std::vector<bool>* mask, bool want) {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool in = mask == nullptr || (i < mask->size() ? (*mask)[i] : false) == want;
    if (!in) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    bool in = mask == nullptr || (i < mask->size() ? (*mask)[i] : false) == want;
    if (!in || a[i] == b[i]) continue;
    return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_on(a, b, nullptr, true);
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::block: {
      int front = grevlex_on(a, b, &eliminated_, true);
      if (front != 0) return front;
      return grevlex_on(a, b, &eliminated_, false);
    }
  }
  return 0;
}

}  // namespace nart
