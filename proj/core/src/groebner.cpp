#include "nart/groebner.hpp"

#include <algorithm>
#include <set>

#include "nart/error.hpp"

namespace nart {

int ModuleOrder::compare(std::size_t pa, const Exponent& a, std::size_t pb, const Exponent& b) const {
  bool fa = pa < front_;
  bool fb = pb < front_;
  if (fa != fb) return fa ? 1 : -1;
  if (fa) {
    if (pa != pb) return pa < pb ? 1 : -1;
    return term_.compare(a, b);
  }
  int t = term_.compare(a, b);
  if (t != 0) return t;
  if (pa != pb) return pa < pb ? 1 : -1;
  return 0;
}

GVector sub_scaled(const GVector& a, const Scalar& c, const Exponent& shift, const GVector& b,
                   const ModuleOrder& order) {
  GVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Exponent shifted;
  while (i < a.size() || j < b.size()) {
    if (j < b.size()) shifted = b[j].exp + shift;
    int cmp;
    if (j == b.size()) {
      cmp = 1;
    } else if (i == a.size()) {
      cmp = -1;
    } else {
      cmp = order.compare(a[i].pos, a[i].exp, b[j].pos, shifted);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].pos, shifted, -(c * b[j].coeff)});
      ++j;
    } else {
      Scalar v = a[i].coeff - c * b[j].coeff;
      if (!v.is_zero()) out.push_back({a[i].pos, a[i].exp, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

void make_monic(GVector& v) {
  if (v.empty() || v.front().coeff.is_one()) return;
  Scalar inv = v.front().coeff.inverse();
  for (auto& t : v) t.coeff *= inv;
}

// Index of a basis element whose leading term divides (pos, exp), or -1.
long find_divisor(const std::vector<GVector>& basis, std::size_t pos, const Exponent& exp) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const GTerm& lt = basis[k].front();
    if (lt.pos == pos && divides(lt.exp, exp)) return static_cast<long>(k);
  }
  return -1;
}

GVector reduce_full(GVector v, const std::vector<GVector>& basis, const ModuleOrder& order) {
  GVector done;
  while (!v.empty()) {
    const GTerm& head = v.front();
    long k = find_divisor(basis, head.pos, head.exp);
    if (k < 0) {
      done.push_back(head);
      v.erase(v.begin());
      continue;
    }
    const GVector& g = basis[k];
    Scalar factor = head.coeff / g.front().coeff;
    Exponent shift = quotient(head.exp, g.front().exp);
    v = sub_scaled(v, factor, shift, g, order);
  }
  return done;
}

GVector s_vector(const GVector& f, const GVector& g, const ModuleOrder& order) {
  const GTerm& a = f.front();
  const GTerm& b = g.front();
  Exponent l = lcm(a.exp, b.exp);
  GVector lhs;
  Exponent sa = quotient(l, a.exp);
  Scalar ia = a.coeff.inverse();
  for (const auto& t : f) lhs.push_back({t.pos, t.exp + sa, t.coeff * ia});
  return sub_scaled(lhs, b.coeff.inverse(), quotient(l, b.exp), g, order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  std::size_t pos;
  Exponent lcm;
};

}  // namespace

GVector GroebnerBasis::normal_form(GVector v) const { return reduce_full(std::move(v), elements_, order_); }

GroebnerBasis buchberger(const Field& field, std::size_t nvars, std::size_t rank, std::vector<GVector> gens,
                         const ModuleOrder& order) {
  GroebnerBasis out(field, nvars, rank, order);
  std::vector<GVector> G;
  for (auto& g : gens) {
    for (const auto& t : g) {
      if (t.pos >= rank || t.exp.size() != nvars) fail(ErrorCode::invalid_argument, "generator outside the module");
    }
    if (g.empty()) continue;
    make_monic(g);
    G.push_back(std::move(g));
  }

  auto pair_less = [&](const Pair& a, const Pair& b) {
    int c = order.compare(a.pos, a.lcm, b.pos, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> in_pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (G[i].front().pos != G[j].front().pos) continue;
      pending.push_back({i, j, G[j].front().pos, lcm(G[i].front().exp, G[j].front().exp)});
      in_pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < G.size(); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair p = *best;
    pending.erase(best);
    in_pending.erase({p.i, p.j});

    const GTerm& li = G[p.i].front();
    const GTerm& lj = G[p.j].front();
    if (rank == 1 && coprime(li.exp, lj.exp)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      const GTerm& lk = G[k].front();
      if (lk.pos != p.pos || !divides(lk.exp, p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !in_pending.count(key(p.i, k)) && !in_pending.count(key(p.j, k));
    }
    if (chain) continue;

    GVector h = reduce_full(s_vector(G[p.i], G[p.j], order), G, order);
    if (h.empty()) continue;
    make_monic(h);
    G.push_back(std::move(h));
    add_pairs_for(G.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<GVector> minimal;
  for (std::size_t k = 0; k < G.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < G.size() && !redundant; ++l) {
      if (l == k) continue;
      const GTerm& a = G[l].front();
      const GTerm& b = G[k].front();
      if (a.pos != b.pos || !divides(a.exp, b.exp)) continue;
      // Equal leading terms: keep the first one.
      redundant = a.exp != b.exp || l < k;
    }
    if (!redundant) minimal.push_back(G[k]);
  }
  std::vector<GVector> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<GVector> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    GVector tail(minimal[k].begin() + 1, minimal[k].end());
    GVector r{minimal[k].front()};
    GVector t = reduce_full(std::move(tail), others, order);
    r.insert(r.end(), t.begin(), t.end());
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const GVector& a, const GVector& b) {
    return order.compare(a.front(), b.front()) < 0;
  });
  out.elements_ = std::move(reduced);
  return out;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& G = gb.elements();
  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (G[i].front().pos != G[j].front().pos) continue;
      if (!gb.normal_form(s_vector(G[i], G[j], gb.order())).empty()) return false;
    }
  }
  return true;
}

GVector to_gvector(const std::vector<Polynomial>& components, const ModuleOrder& order) {
  GVector v;
  for (std::size_t pos = 0; pos < components.size(); ++pos) {
    for (const auto& [e, c] : components[pos].terms()) v.push_back({pos, e, c});
  }
  std::sort(v.begin(), v.end(), [&](const GTerm& a, const GTerm& b) { return order.compare(a, b) > 0; });
  return v;
}

GVector to_gvector(const Polynomial& p, const ModuleOrder& order) {
  return to_gvector(std::vector<Polynomial>{p}, order);
}

std::vector<Polynomial> from_gvector(const GVector& v, const RingPtr& ring, std::size_t rank) {
  std::vector<Polynomial> out(rank, Polynomial(ring));
  for (const auto& t : v) {
    if (t.pos >= rank) fail(ErrorCode::invalid_argument, "term position outside the module rank");
    out[t.pos].add_term(t.exp, t.coeff);
  }
  return out;
}

}  // namespace nart
