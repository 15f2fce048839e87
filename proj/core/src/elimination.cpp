#include "nart/elimination.hpp"

#include <algorithm>

#include "nart/error.hpp"
#include "nart/linalg.hpp"
#include "nart/span.hpp"

namespace nart {

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  GradedLess less;
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return less(ia->first, ib->first);
    if (!(ia->second == ib->second)) return ia->second.to_string() < ib->second.to_string();
  }
  return ia == a.terms().rend() && ib != b.terms().rend();
}

PolyIdeal::PolyIdeal(RingPtr r, std::vector<Polynomial> gens) : ring(std::move(r)) {
  for (auto& g : gens) {
    require_same_ring(ring, g.ring(), "ideal generators");
    if (g.is_zero()) continue;
    if (std::find(generators.begin(), generators.end(), g) == generators.end()) generators.push_back(std::move(g));
  }
  std::sort(generators.begin(), generators.end(), canonical_less);
}

PolyModule::PolyModule(RingPtr r, std::size_t rk, std::vector<std::vector<Polynomial>> gens)
    : ring(std::move(r)), rank(rk) {
  for (auto& g : gens) {
    if (g.size() != rank) fail(ErrorCode::invalid_argument, "module generator has the wrong length");
    bool zero = true;
    for (const auto& p : g) {
      require_same_ring(ring, p.ring(), "module generators");
      zero = zero && p.is_zero();
    }
    if (!zero) generators.push_back(std::move(g));
  }
}

GroebnerBasis groebner(const PolyIdeal& I, const MonomialOrder& order) {
  ModuleOrder mo(order, 0);
  std::vector<GVector> gens;
  for (const auto& g : I.generators) gens.push_back(to_gvector(g, mo));
  return buchberger(I.ring->field(), I.ring->size(), 1, std::move(gens), mo);
}

GroebnerBasis groebner(const PolyModule& M, const ModuleOrder& order) {
  std::vector<GVector> gens;
  for (const auto& g : M.generators) gens.push_back(to_gvector(g, order));
  return buchberger(M.ring->field(), M.ring->size(), M.rank, std::move(gens), order);
}

std::vector<Polynomial> basis_polynomials(const GroebnerBasis& gb, const RingPtr& ring) {
  if (gb.rank() != 1) fail(ErrorCode::invalid_argument, "basis_polynomials needs a rank-one basis");
  std::vector<Polynomial> out;
  for (const auto& v : gb.elements()) out.push_back(from_gvector(v, ring, 1)[0]);
  return out;
}

namespace {

std::vector<bool> y_mask(const RingPtr& ring) {
  std::vector<bool> mask(ring->size(), false);
  for (std::size_t i = ring->x_count(); i < ring->size(); ++i) mask[i] = true;
  return mask;
}

bool free_of(const GVector& v, const std::vector<bool>& mask) {
  for (const auto& t : v) {
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i] && t.exp[i] != 0) return false;
    }
  }
  return true;
}

bool x_only(const RingPtr& ring, const Polynomial& p) { return p.supported_in_prefix(ring->x_count()); }

std::string fresh_prefix(const RingPtr& ring, std::string base, std::size_t count) {
  for (;;) {
    bool clash = false;
    for (std::size_t i = 1; i <= count && !clash; ++i) clash = ring->index_of(base + std::to_string(i)).has_value();
    if (!clash) return base;
    base += base.back();
  }
}

}  // namespace

std::vector<Polynomial> eliminate_variables(const PolyIdeal& I, const std::vector<bool>& eliminated) {
  GroebnerBasis gb = groebner(I, MonomialOrder::block(eliminated));
  std::vector<Polynomial> out;
  for (const auto& v : gb.elements()) {
    if (free_of(v, eliminated)) out.push_back(from_gvector(v, I.ring, 1)[0]);
  }
  return out;
}

PolyIdeal eliminate_ideal(const PolyIdeal& I) {
  RingPtr xr = x_subring(I.ring);
  std::vector<Polynomial> gens;
  for (const auto& g : eliminate_variables(I, y_mask(I.ring))) gens.push_back(g.embedded(xr));
  return PolyIdeal(xr, std::move(gens));
}

PolyModule module_intersect_zero_block(const PolyModule& M, std::size_t p, bool eliminate_y) {
  if (p > M.rank) fail(ErrorCode::invalid_argument, "zero block larger than the module rank");
  std::vector<bool> mask = eliminate_y ? y_mask(M.ring) : std::vector<bool>(M.ring->size(), false);
  ModuleOrder order(MonomialOrder::block(mask), p);
  GroebnerBasis gb = groebner(M, order);
  RingPtr target = eliminate_y ? x_subring(M.ring) : M.ring;
  std::vector<std::vector<Polynomial>> gens;
  for (const auto& v : gb.elements()) {
    if (v.front().pos < p || !free_of(v, mask)) continue;
    auto full = from_gvector(v, M.ring, M.rank);
    std::vector<Polynomial> back;
    for (std::size_t j = p; j < M.rank; ++j) back.push_back(full[j].embedded(target));
    gens.push_back(std::move(back));
  }
  return PolyModule(target, M.rank - p, std::move(gens));
}

Idealization nagata_idealize(const PolyModule& M, std::size_t p) {
  if (p > M.rank) fail(ErrorCode::invalid_argument, "zero block larger than the module rank");
  const std::size_t t = M.rank - p;
  std::string zp = fresh_prefix(M.ring, "z", p);
  std::string wp = fresh_prefix(M.ring, "w", t);
  std::vector<std::string> extra;
  for (std::size_t i = 1; i <= p; ++i) extra.push_back(zp + std::to_string(i));
  for (std::size_t j = 1; j <= t; ++j) extra.push_back(wp + std::to_string(j));
  RingPtr ring = extend_ring(M.ring, extra);
  const std::size_t z0 = M.ring->size();
  const std::size_t w0 = z0 + p;

  std::vector<Polynomial> gens;
  for (const auto& g : M.generators) {
    Polynomial s(ring);
    for (std::size_t i = 0; i < M.rank; ++i) s += g[i].embedded(ring) * Polynomial::variable(ring, z0 + i);
    gens.push_back(std::move(s));
  }
  for (std::size_t a = z0; a < ring->size(); ++a) {
    for (std::size_t b = a; b < ring->size(); ++b) {
      gens.push_back(Polynomial::variable(ring, a) * Polynomial::variable(ring, b));
    }
  }
  return {PolyIdeal(ring, std::move(gens)), p, t, z0, w0};
}

PolyModule idealization_route(const Idealization& idl, const RingPtr& x_ring) {
  const RingPtr& ring = idl.ideal.ring;
  std::vector<bool> mask(ring->size(), false);
  for (std::size_t i = ring->x_count(); i < idl.w_begin; ++i) mask[i] = true;
  std::vector<std::vector<Polynomial>> gens;
  for (const auto& g : eliminate_variables(idl.ideal, mask)) {
    std::vector<Polynomial> c(idl.t, Polynomial(x_ring));
    bool linear = true;
    for (const auto& [e, v] : g.terms()) {
      unsigned wdeg = 0;
      std::size_t which = 0;
      for (std::size_t j = 0; j < idl.t; ++j) {
        if (e[idl.w_begin + j] != 0) {
          wdeg += e[idl.w_begin + j];
          which = j;
        }
      }
      if (wdeg != 1) {
        linear = false;
        break;
      }
      Exponent ex(e.begin(), e.begin() + static_cast<long>(x_ring->size()));
      c[which].add_term(ex, v);
    }
    if (linear) gens.push_back(std::move(c));
  }
  return PolyModule(x_ring, idl.t, std::move(gens));
}

bool same_module(const PolyModule& a, const PolyModule& b) {
  if (!same_ring(a.ring, b.ring) || a.rank != b.rank) return false;
  ModuleOrder order(MonomialOrder::grevlex(), 0);
  GroebnerBasis ga = groebner(a, order);
  GroebnerBasis gb = groebner(b, order);
  for (const auto& g : b.generators) {
    if (!ga.contains(to_gvector(g, order))) return false;
  }
  for (const auto& g : a.generators) {
    if (!gb.contains(to_gvector(g, order))) return false;
  }
  return true;
}

bool same_ideal(const PolyIdeal& a, const PolyIdeal& b) {
  auto wrap = [](const PolyIdeal& I) {
    std::vector<std::vector<Polynomial>> gens;
    for (const auto& g : I.generators) gens.push_back({g});
    return PolyModule(I.ring, 1, std::move(gens));
  };
  return same_module(wrap(a), wrap(b));
}

std::vector<Polynomial> truncation_span(const RingPtr& ring, const std::vector<Polynomial>& gens, unsigned c) {
  std::vector<Polynomial> rows;
  const std::size_t n = ring->size();
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring(), "truncation span");
    if (g.is_zero()) continue;
    unsigned v = static_cast<unsigned>(g.valuation());
    if (v >= c) continue;
    for (const auto& m : monomials_below(n, n, c - v)) {
      Polynomial r = g.shifted(m).truncated(c);
      if (!r.is_zero()) rows.push_back(std::move(r));
    }
  }
  return span_basis(ring, rows);
}

std::vector<std::vector<Polynomial>> truncated_completion_elimination_range(const PolyIdeal& I, unsigned c_max,
                                                                             unsigned cprime) {
  if (c_max == 0 || cprime < c_max) fail(ErrorCode::invalid_argument, "need 1 <= c <= cprime");
  const RingPtr& ring = I.ring;
  const std::size_t n = ring->size();
  const std::size_t nx = ring->x_count();
  RingPtr xr = x_subring(ring);
  MonomialIndex columns(monomials_below(n, n, cprime));
  std::vector<std::uint8_t> classes(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) classes[k] = supported_in_prefix(columns.at(k), nx) ? 1 : 0;

  std::vector<SparseEntries> rows;
  for (const auto& g : I.generators) {
    unsigned v = static_cast<unsigned>(g.valuation());
    if (v >= cprime) continue;
    for (const auto& m : monomials_below(n, n, cprime - v)) {
      Polynomial r = g.shifted(m).truncated(cprime);
      if (!r.is_zero()) rows.push_back(coordinates(r, columns));
    }
  }
  auto kernel = class_zero_kernel(ring->field(), columns.size(), std::move(rows), std::move(classes));
  std::vector<Polynomial> xs;
  for (const auto& v : kernel) xs.push_back(from_coordinates(ring, v, columns).embedded(xr));

  std::vector<std::vector<Polynomial>> out(c_max + 1);
  for (unsigned c = 1; c <= c_max; ++c) {
    std::vector<Polynomial> cut;
    for (const auto& p : xs) {
      Polynomial t = p.truncated(c);
      if (!t.is_zero()) cut.push_back(std::move(t));
    }
    out[c] = span_basis(xr, cut);
  }
  return out;
}

std::vector<Polynomial> truncated_completion_elimination(const PolyIdeal& I, unsigned c, unsigned cprime) {
  if (c == 0 || cprime < c) fail(ErrorCode::invalid_argument, "need 1 <= c <= cprime");
  return truncated_completion_elimination_range(I, c, cprime)[c];
}

std::vector<EliminationComparison> compare_elimination(const PolyIdeal& I, unsigned c_max, unsigned cprime_max) {
  PolyIdeal K = eliminate_ideal(I);
  std::vector<EliminationComparison> out;
  for (unsigned c = 1; c <= c_max; ++c) out.push_back({c, truncation_span(K.ring, K.generators, c), std::nullopt, {}});
  for (unsigned cp = 1; cp <= cprime_max; ++cp) {
    unsigned top = std::min(c_max, cp);
    bool pending = false;
    for (unsigned c = 1; c <= top; ++c) pending = pending || !out[c - 1].stabilized_at;
    if (!pending && cp != cprime_max) continue;
    auto cand = truncated_completion_elimination_range(I, top, cp);
    for (unsigned c = 1; c <= top; ++c) {
      auto& cmp = out[c - 1];
      if (!cmp.stabilized_at && span_equal(K.ring, cand[c], cmp.exact)) cmp.stabilized_at = cp;
      if (cp == cprime_max) cmp.candidates_at_max = cand[c];
    }
  }
  return out;
}

namespace {

std::vector<std::vector<Polynomial>> x_generators(const PolyModule& M, const RingPtr& xr) {
  std::vector<std::vector<Polynomial>> gens;
  for (const auto& g : M.generators) {
    std::vector<Polynomial> v;
    for (const auto& p : g) {
      if (!x_only(M.ring, p)) fail(ErrorCode::invalid_argument, "Chevalley function needs generators over x only");
      v.push_back(p.embedded(xr));
    }
    gens.push_back(std::move(v));
  }
  return gens;
}

// A ∩ B = (t A + (1 - t) B) ∩ R^r.
PolyModule intersect_modules(const PolyModule& A, const PolyModule& B) {
  const RingPtr& ring = A.ring;
  std::string tag = fresh_prefix(ring, "t", 1) + "1";
  RingPtr tr = extend_ring(ring, {tag});
  const std::size_t ti = ring->size();
  Polynomial t = Polynomial::variable(tr, ti);
  Polynomial one_minus_t = Polynomial::constant(tr, 1) - t;
  std::vector<std::vector<Polynomial>> gens;
  for (const auto& g : A.generators) {
    std::vector<Polynomial> v;
    for (const auto& p : g) v.push_back(p.embedded(tr) * t);
    gens.push_back(std::move(v));
  }
  for (const auto& g : B.generators) {
    std::vector<Polynomial> v;
    for (const auto& p : g) v.push_back(p.embedded(tr) * one_minus_t);
    gens.push_back(std::move(v));
  }
  std::vector<bool> mask(tr->size(), false);
  mask[ti] = true;
  ModuleOrder order(MonomialOrder::block(mask), 0);
  GroebnerBasis gb = groebner(PolyModule(tr, A.rank, std::move(gens)), order);
  std::vector<std::vector<Polynomial>> out;
  for (const auto& v : gb.elements()) {
    if (!free_of(v, mask)) continue;
    std::vector<Polynomial> w;
    for (const auto& p : from_gvector(v, tr, A.rank)) w.push_back(p.embedded(ring));
    out.push_back(std::move(w));
  }
  return PolyModule(ring, A.rank, std::move(out));
}

std::vector<Polynomial> unit_vector(const RingPtr& ring, std::size_t rank, std::size_t pos, const Polynomial& p) {
  std::vector<Polynomial> v(rank, Polynomial(ring));
  v[pos] = p;
  return v;
}

unsigned chevalley_exact(const PolyModule& Mx, std::size_t p, unsigned c, unsigned beta_max) {
  const RingPtr& xr = Mx.ring;
  const std::size_t r = Mx.rank;
  const std::size_t n = xr->size();
  PolyModule N = module_intersect_zero_block(Mx, p, false);
  std::vector<std::vector<Polynomial>> qgens;
  for (const auto& g : N.generators) {
    std::vector<Polynomial> v(p, Polynomial(xr));
    v.insert(v.end(), g.begin(), g.end());
    qgens.push_back(std::move(v));
  }
  for (const auto& e : monomials_of_degree(n, n, c)) {
    for (std::size_t i = 0; i < r; ++i) {
      qgens.push_back(unit_vector(xr, r, i, Polynomial::monomial(xr, e, xr->field().one())));
    }
  }
  ModuleOrder order(MonomialOrder::grevlex(), 0);
  GroebnerBasis Q = groebner(PolyModule(xr, r, std::move(qgens)), order);

  for (unsigned beta = 1; beta <= beta_max; ++beta) {
    std::vector<std::vector<Polynomial>> ugens;
    for (const auto& e : monomials_of_degree(n, n, beta)) {
      for (std::size_t i = 0; i < p; ++i) {
        ugens.push_back(unit_vector(xr, r, i, Polynomial::monomial(xr, e, xr->field().one())));
      }
    }
    for (std::size_t j = p; j < r; ++j) ugens.push_back(unit_vector(xr, r, j, Polynomial::constant(xr, 1)));
    PolyModule meet = intersect_modules(Mx, PolyModule(xr, r, std::move(ugens)));
    bool inside = std::all_of(meet.generators.begin(), meet.generators.end(),
                              [&](const auto& g) { return Q.contains(to_gvector(g, order)); });
    if (inside) return beta;
  }
  fail(ErrorCode::invalid_argument, "no beta <= " + std::to_string(beta_max) + " satisfies the inclusion");
}

unsigned chevalley_truncated(const PolyModule& Mx, std::size_t p, unsigned c, unsigned D) {
  const RingPtr& xr = Mx.ring;
  const std::size_t r = Mx.rank;
  const std::size_t n = xr->size();
  MonomialIndex monos(monomials_below(n, n, D));
  const std::size_t K = monos.size();
  std::vector<SparseEntries> rows;
  for (const auto& g : Mx.generators) {
    for (const auto& m : monomials_below(n, n, D)) {
      SparseEntries v;
      for (std::size_t i = 0; i < r; ++i) {
        Polynomial t = g[i].shifted(m).truncated(D);
        auto part = coordinates(t, monos, i * K);
        v.insert(v.end(), part.begin(), part.end());
      }
      if (!v.empty()) rows.push_back(std::move(v));
    }
  }
  auto front_below = [&](unsigned beta) {
    std::vector<std::uint8_t> cls(r * K, 1);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t k = 0; k < K; ++k) {
        if (total_degree(monos.at(k)) < beta) cls[i * K + k] = 0;
      }
    }
    return cls;
  };
  auto cut = [&](std::vector<SparseEntries> vs) {
    for (auto& v : vs) {
      std::erase_if(v, [&](const auto& e) { return total_degree(monos.at(e.first % K)) >= c; });
    }
    return vs;
  };
  const Field& field = xr->field();
  auto B = cut(class_zero_kernel(field, r * K, rows, front_below(D)));
  const std::size_t rb = rank_of(field, r * K, B);
  for (unsigned beta = 1; beta < D; ++beta) {
    auto A = cut(class_zero_kernel(field, r * K, rows, front_below(beta)));
    auto both = B;
    both.insert(both.end(), A.begin(), A.end());
    if (rank_of(field, r * K, std::move(both)) == rb) return beta;
  }
  return D;
}

}  // namespace

ChevalleyResult chevalley_beta(const PolyModule& M, std::size_t p, unsigned c, ChevalleyMode mode,
                               unsigned working_order, unsigned beta_max) {
  if (c == 0) fail(ErrorCode::invalid_argument, "c must be positive");
  if (p > M.rank) fail(ErrorCode::invalid_argument, "zero block larger than the module rank");
  RingPtr xr = x_subring(M.ring);
  PolyModule Mx(xr, M.rank, x_generators(M, xr));
  ChevalleyResult out{c, 0, mode, mode == ChevalleyMode::truncated ? working_order : 0};
  if (mode == ChevalleyMode::truncated && working_order == 0) {
    fail(ErrorCode::invalid_argument, "truncated mode needs a working order");
  }
  if (Mx.is_zero()) return out;
  out.beta = mode == ChevalleyMode::exact ? chevalley_exact(Mx, p, c, beta_max)
                                          : chevalley_truncated(Mx, p, c, working_order);
  return out;
}

PolyModule syzygies(const std::vector<std::vector<Polynomial>>& T) {
  if (T.empty() || T[0].empty()) fail(ErrorCode::invalid_argument, "syzygies need a nonempty matrix");
  const std::size_t p = T.size();
  const std::size_t m = T[0].size();
  RingPtr ring = T[0][0].ring();
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Polynomial> v;
    for (std::size_t i = 0; i < p; ++i) {
      if (T[i].size() != m) fail(ErrorCode::invalid_argument, "ragged matrix");
      v.push_back(T[i][j]);
    }
    for (std::size_t k = 0; k < m; ++k) v.push_back(k == j ? Polynomial::constant(ring, 1) : Polynomial(ring));
    cols.push_back(std::move(v));
  }
  PolyModule S = module_intersect_zero_block(PolyModule(ring, p + m, std::move(cols)), p, false);
  for (const auto& s : S.generators) {
    for (std::size_t i = 0; i < p; ++i) {
      Polynomial acc(ring);
      for (std::size_t j = 0; j < m; ++j) acc += T[i][j] * s[j];
      check_invariant(acc.is_zero(), "syzygy does not annihilate the matrix");
    }
  }
  return S;
}

}  // namespace nart
