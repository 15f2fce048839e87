#include "nart/nested.hpp"

#include <algorithm>
#include <numeric>

#include "nart/error.hpp"
#include "nart/hensel.hpp"

namespace nart {

NestedProfile::NestedProfile(std::vector<std::size_t> sigma) : sigma_(std::move(sigma)) {
  permutation_.resize(sigma_.size());
  std::iota(permutation_.begin(), permutation_.end(), std::size_t{0});
  std::stable_sort(permutation_.begin(), permutation_.end(),
                   [&](std::size_t a, std::size_t b) { return sigma_[a] < sigma_[b]; });
}

std::size_t NestedProfile::min_sigma() const {
  if (sigma_.empty()) fail(ErrorCode::invalid_argument, "empty nesting profile");
  return *std::min_element(sigma_.begin(), sigma_.end());
}

NestedLinearSystem NestedLinearSystem::from_polynomials(const std::vector<std::vector<Polynomial>>& T,
                                                        const std::vector<Polynomial>& b,
                                                        std::vector<std::size_t> sigma, unsigned c) {
  NestedLinearSystem sys;
  for (const auto& row : T) {
    std::vector<TruncatedSeries> r;
    for (const auto& p : row) r.push_back(TruncatedSeries::from_polynomial(p, c));
    sys.T.push_back(std::move(r));
  }
  for (const auto& p : b) sys.b.push_back(TruncatedSeries::from_polynomial(p, c));
  sys.profile = NestedProfile(std::move(sigma));
  sys.c = c;
  return sys;
}

void NestedLinearSystem::validate() const {
  if (b.empty()) fail(ErrorCode::invalid_argument, "system has no equations");
  if (c == 0) fail(ErrorCode::invalid_argument, "precision must be positive");
  if (T.size() != b.size()) fail(ErrorCode::invalid_argument, "matrix and right side have different row counts");
  const RingPtr& r = ring();
  for (const auto& row : T) {
    if (row.size() != profile.size()) fail(ErrorCode::invalid_argument, "matrix width differs from the nesting profile");
    for (const auto& t : row) {
      require_same_ring(r, t.ring(), "nested system");
      if (t.known_order() < c) fail(ErrorCode::precision_too_low, "matrix entry known only below degree " +
                                                                      std::to_string(t.known_order()));
    }
  }
  for (const auto& t : b) {
    require_same_ring(r, t.ring(), "nested system");
    if (t.known_order() < c) fail(ErrorCode::precision_too_low, "right side known only below degree " +
                                                                    std::to_string(t.known_order()));
  }
  for (std::size_t s : profile.sigma()) {
    if (s > r->size()) fail(ErrorCode::invalid_argument, "nesting bound exceeds the variable count");
  }
}

CoefficientSolve::CoefficientSolve(const NestedLinearSystem& sys, const SolveOptions& options)
    : ring_(sys.ring()), c_(sys.c) {
  sys.validate();
  const std::size_t n = ring_->size();
  const std::size_t m = sys.unknowns();
  for (std::size_t i = 0; i < m; ++i) {
    offsets_.push_back(columns_);
    unknowns_.emplace_back(monomials_below(n, sys.profile[i], c_));
    columns_ += unknowns_.back().size();
  }
  MonomialIndex equations(monomials_below(n, n, c_));
  const std::size_t per_row = equations.size();

  std::vector<SparseEntries> rows(sys.rows() * per_row);
  std::vector<Scalar> rhs(rows.size(), ring_->field().zero());
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto& entry = sys.T[r][i].terms();
      if (entry.empty()) continue;
      const auto& monos = unknowns_[i].monomials();
      for (std::size_t a = 0; a < monos.size(); ++a) {
        unsigned da = total_degree(monos[a]);
        for (const auto& [g, t] : entry) {
          if (da + total_degree(g) >= c_) break;
          rows[r * per_row + *equations.find(monos[a] + g)].emplace_back(offsets_[i] + a, t);
        }
      }
    }
    for (const auto& [e, v] : sys.b[r].terms()) {
      if (total_degree(e) < c_) rhs[r * per_row + *equations.find(e)] = v;
    }
  }
  for (const auto& pin : options.pins) {
    auto col = column_of(pin.component, pin.exponent);
    if (!col) fail(ErrorCode::invalid_argument, "pinned coefficient is not an unknown of the system");
    rows.push_back({{*col, ring_->field().one()}});
    rhs.push_back(pin.value);
  }

  EliminationOptions eo;
  eo.rule = options.rule;
  eo.late_rule = options.late_rule;
  if (options.column_class) {
    eo.column_class.resize(columns_);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t a = 0; a < unknowns_[i].size(); ++a) {
        eo.column_class[offsets_[i] + a] = options.column_class(i, unknowns_[i].at(a));
      }
    }
  }
  echelon_ = eliminate(ring_->field(), columns_, std::move(rows), std::move(rhs), eo);
}

std::size_t CoefficientSolve::component_of(std::size_t column) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), column);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

const Exponent& CoefficientSolve::exponent_of(std::size_t column) const {
  std::size_t i = component_of(column);
  return unknowns_[i].at(column - offsets_[i]);
}

std::optional<std::size_t> CoefficientSolve::column_of(std::size_t component, const Exponent& e) const {
  if (component >= unknowns_.size()) return std::nullopt;
  auto a = unknowns_[component].find(e);
  if (!a) return std::nullopt;
  return offsets_[component] + *a;
}

SeriesVector CoefficientSolve::to_vector(const SparseEntries& v) const {
  std::vector<Polynomial> polys(unknowns_.size(), Polynomial(ring_));
  for (const auto& [col, x] : v) {
    std::size_t i = component_of(col);
    polys[i].add_term(unknowns_[i].at(col - offsets_[i]), x);
  }
  SeriesVector out;
  for (auto& p : polys) out.push_back(TruncatedSeries::from_polynomial(p, c_));
  return out;
}

SeriesVector CoefficientSolve::to_vector(const std::vector<Scalar>& dense) const {
  SparseEntries v;
  for (std::size_t col = 0; col < dense.size(); ++col) {
    if (!dense[col].is_zero()) v.emplace_back(col, dense[col]);
  }
  return to_vector(v);
}

std::vector<Polynomial> residual(const NestedLinearSystem& sys, const SeriesVector& y, unsigned order) {
  if (y.size() != sys.unknowns()) fail(ErrorCode::invalid_argument, "solution length differs from unknown count");
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    Polynomial acc = -sys.b[r].polynomial().truncated(order);
    for (std::size_t i = 0; i < y.size(); ++i) {
      const auto& t = sys.T[r][i].polynomial();
      const auto& v = y[i].polynomial();
      if (t.is_zero() || v.is_zero()) continue;
      Polynomial prod(t.ring());
      for (const auto& [et, ct] : t.terms()) {
        unsigned dt = total_degree(et);
        if (dt >= order) break;
        for (const auto& [ev, cv] : v.terms()) {
          if (dt + total_degree(ev) >= order) break;
          prod.add_term(et + ev, ct * cv);
        }
      }
      acc += prod;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

bool is_solution(const NestedLinearSystem& sys, const SeriesVector& y, unsigned order) {
  auto res = residual(sys, y, order);
  return std::all_of(res.begin(), res.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool is_nested(const NestedProfile& profile, const SeriesVector& y) {
  if (y.size() != profile.size()) return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!nested_support_ok(y[i], profile[i])) return false;
  }
  return true;
}

namespace {

NestedLinearSystem at_order(const NestedLinearSystem& sys, unsigned c) {
  NestedLinearSystem out = sys;
  out.c = c;
  return out;
}

std::vector<Pin> pins_below(const std::vector<Pin>& pins, unsigned c) {
  std::vector<Pin> out;
  for (const auto& p : pins) {
    if (total_degree(p.exponent) < c) out.push_back(p);
  }
  return out;
}

}  // namespace

SolutionSet solve_nested(const NestedLinearSystem& sys, const SolveOptions& options) {
  CoefficientSolve solve(sys, options);
  SolutionSet out;
  out.validity_order = sys.c;
  if (!solve.echelon().consistent()) {
    if (options.obstruction) {
      SolveOptions sub = options;
      sub.nullspace = false;
      sub.obstruction = false;
      for (unsigned d = 0; d < sys.c; ++d) {
        sub.pins = pins_below(options.pins, d + 1);
        CoefficientSolve partial(at_order(sys, d + 1), sub);
        if (!partial.echelon().consistent()) {
          out.obstruction_degree = d;
          break;
        }
      }
      check_invariant(out.obstruction_degree.has_value(), "inconsistent system without an obstruction degree");
    }
    return out;
  }
  out.solvable = true;
  out.particular = solve.to_vector(solve.echelon().particular());
  if (options.nullspace) {
    for (const auto& v : solve.echelon().nullspace()) out.nullspace.push_back(solve.to_vector(v));
  }
  if (options.verify) {
    check_invariant(is_solution(sys, out.particular, sys.c), "particular solution leaves a residual");
    check_invariant(is_nested(sys.profile, out.particular), "particular solution violates the nesting");
    NestedLinearSystem homogeneous = sys;
    for (auto& t : homogeneous.b) t = TruncatedSeries(t.ring(), t.known_order());
    for (const auto& v : out.nullspace) {
      check_invariant(is_solution(homogeneous, v, sys.c), "nullspace vector leaves a residual");
      check_invariant(is_nested(sys.profile, v), "nullspace vector violates the nesting");
    }
  }
  return out;
}

SolutionSet approximate(const NestedLinearSystem& sys, const SeriesVector& target, unsigned c,
                        const SolveOptions& options) {
  sys.validate();
  if (c > sys.c) fail(ErrorCode::invalid_argument, "agreement order exceeds the working order");
  if (target.size() != sys.unknowns()) fail(ErrorCode::target_not_solution, "target has the wrong length");
  for (const auto& t : target) {
    if (t.known_order() < sys.c) fail(ErrorCode::precision_too_low, "target known below the working order only");
  }
  if (!is_nested(sys.profile, target)) fail(ErrorCode::target_not_solution, "target violates the nesting profile");
  if (!is_solution(sys, target, sys.c)) {
    fail(ErrorCode::target_not_solution, "target does not solve the system below degree " + std::to_string(sys.c));
  }
  SolveOptions opts = options;
  const std::size_t n = sys.ring()->size();
  for (std::size_t i = 0; i < target.size(); ++i) {
    for (const auto& e : monomials_below(n, sys.profile[i], c)) {
      opts.pins.push_back({i, e, target[i].coefficient(e)});
    }
  }
  SolutionSet out = solve_nested(sys, opts);
  check_invariant(out.solvable, "pinned system lost the target solution");
  for (std::size_t i = 0; i < target.size(); ++i) {
    check_invariant(truncate(out.particular[i], c) == truncate(target[i], c), "approximation disagrees below c");
  }
  return out;
}

NestedLinearSystem homogenize(const NestedLinearSystem& sys) {
  sys.validate();
  NestedLinearSystem out;
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    std::vector<TruncatedSeries> row{-sys.b[r]};
    row.insert(row.end(), sys.T[r].begin(), sys.T[r].end());
    out.T.push_back(std::move(row));
    out.b.push_back(TruncatedSeries(sys.ring(), sys.b[r].known_order()));
  }
  std::vector<std::size_t> sigma{sys.profile.min_sigma()};
  sigma.insert(sigma.end(), sys.profile.sigma().begin(), sys.profile.sigma().end());
  out.profile = NestedProfile(std::move(sigma));
  out.c = sys.c;
  return out;
}

SeriesVector recover_from_homogeneous(const SeriesVector& y, unsigned c) {
  if (y.empty()) fail(ErrorCode::invalid_argument, "homogeneous solution has no y0 component");
  if (y[0].constant_term().is_zero()) fail(ErrorCode::non_unit, "y0(0) = 0");
  TruncatedSeries inv = invert(truncate(y[0], c));
  SeriesVector out;
  for (std::size_t j = 1; j < y.size(); ++j) out.push_back(truncate(mul(inv, truncate(y[j], c)), c));
  return out;
}

std::optional<SeriesVector> solve_via_homogenization(const NestedLinearSystem& sys, HomogeneousPin pin,
                                                     const SolveOptions& options) {
  NestedLinearSystem h = homogenize(sys);
  SolveOptions opts = options;
  opts.nullspace = false;
  const Field& field = sys.ring()->field();
  const std::size_t n = sys.ring()->size();
  for (const auto& e : monomials_below(n, h.profile[0], pin == HomogeneousPin::whole_series ? sys.c : 1)) {
    opts.pins.push_back({0, e, total_degree(e) == 0 ? field.one() : field.zero()});
  }
  SolutionSet s = solve_nested(h, opts);
  if (!s.solvable) return std::nullopt;
  SeriesVector y = recover_from_homogeneous(s.particular, sys.c);
  if (options.verify) {
    check_invariant(is_solution(sys, y, sys.c), "recovered solution leaves a residual");
    check_invariant(is_nested(sys.profile, y), "recovered solution violates the nesting");
  }
  return y;
}

std::optional<unsigned> regularity_order(const TruncatedSeries& f) {
  const std::size_t n = f.ring()->size();
  if (n == 0) return f.constant_term().is_zero() ? std::nullopt : std::optional<unsigned>(0);
  std::optional<unsigned> best;
  for (const auto& [e, v] : f.terms()) {
    bool pure = true;
    for (std::size_t i = 0; i + 1 < n; ++i) pure = pure && e[i] == 0;
    if (pure && (!best || e[n - 1] < *best)) best = e[n - 1];
  }
  return best;
}

unsigned weierstrass_working_order(unsigned d, unsigned c) { return std::max(1u, d) * (c + 1); }

namespace {

// Particular solution of a consistent system whose coefficients of degree
// below c agree across all solutions; both facts are checked.
SeriesVector unique_below(const NestedLinearSystem& sys, unsigned c, const SolveOptions& options,
                          const std::string& what) {
  CoefficientSolve cs(sys, options);
  const Echelon& ech = cs.echelon();
  check_invariant(ech.consistent(), what + " coefficient system is inconsistent");
  for (std::size_t col = 0; col < cs.columns(); ++col) {
    if (total_degree(cs.exponent_of(col)) < c) {
      check_invariant(ech.determined(col), what + " solution is not unique below degree " + std::to_string(c));
    }
  }
  SeriesVector y = cs.to_vector(ech.particular());
  if (options.verify) {
    check_invariant(is_solution(sys, y, sys.c), what + " solution fails the residual check");
    check_invariant(is_nested(sys.profile, y), what + " solution violates the nesting");
  }
  return y;
}

}  // namespace

WeierstrassResult weierstrass_divide(const TruncatedSeries& f, const TruncatedSeries& g, unsigned c,
                                     const SolveOptions& options) {
  require_same_ring(f.ring(), g.ring(), "Weierstrass division");
  if (c == 0) fail(ErrorCode::invalid_argument, "precision must be positive");
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->size();
  if (n == 0) fail(ErrorCode::invalid_argument, "Weierstrass division needs at least one variable");
  auto d = regularity_order(f);
  if (!d) fail(ErrorCode::not_regular, "f(0, ..., 0, x_n) vanishes below degree " + std::to_string(f.known_order()));
  const unsigned W = weierstrass_working_order(*d, c);
  if (f.known_order() < W || g.known_order() < W) {
    fail(ErrorCode::precision_too_low, "division needs divisor and dividend known below degree " + std::to_string(W));
  }

  NestedLinearSystem sys;
  std::vector<TruncatedSeries> row{truncate(f, W)};
  std::vector<std::size_t> sigma{n};
  for (unsigned k = 0; k < *d; ++k) {
    Exponent e(n, 0);
    e[n - 1] = k;
    row.push_back(TruncatedSeries::from_polynomial(Polynomial::monomial(ring, e, ring->field().one()), W));
    sigma.push_back(n - 1);
  }
  sys.T.push_back(std::move(row));
  sys.b.push_back(truncate(g, W));
  sys.profile = NestedProfile(std::move(sigma));
  sys.c = W;

  SeriesVector y = unique_below(sys, c, options, "Weierstrass");
  WeierstrassResult out{*d, W, truncate(y[0], c), {}};
  for (unsigned k = 0; k < *d; ++k) out.a.push_back(truncate(y[k + 1], c));
  return out;
}

ImplicitLinearResult implicit_linear(const TruncatedSeries& f, unsigned c, const SolveOptions& options) {
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->size();
  if (n == 0 || c == 0) fail(ErrorCode::invalid_argument, "implicit_linear needs a variable and a positive order");
  Exponent xn(n, 0);
  xn[n - 1] = 1;
  if (!f.constant_term().is_zero() || f.known_order() < 2 || f.coefficient(xn).is_zero()) {
    fail(ErrorCode::not_transverse, "need f(0) = 0 and df/dx_n(0) != 0");
  }
  const unsigned W = c + 1;
  if (f.known_order() < W) fail(ErrorCode::precision_too_low, "f must be known below degree " + std::to_string(W));

  const Field& field = ring->field();
  NestedLinearSystem sys;
  sys.T.push_back({TruncatedSeries::constant(ring, -field.one(), W), truncate(f, W)});
  sys.b.push_back(-TruncatedSeries::variable(ring, n - 1, W));
  sys.profile = NestedProfile({n - 1, n});
  sys.c = W;

  SeriesVector y = unique_below(sys, c, options, "implicit linear");
  ImplicitLinearResult out{truncate(y[0], c), truncate(y[1], c)};
  // h is the root x_n = h(x') of f, which the Newton lift computes directly.
  TruncatedSeries root = implicit_solve(f.polynomial().truncated(c), n - 1, c);
  std::vector<std::size_t> keep(n - 1);
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  check_invariant(root.polynomial() == out.h.polynomial().mapped(root.ring(), keep),
                  "implicit_linear disagrees with the Newton root of f");
  return out;
}

}  // namespace nart
