#include "nart/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "nart/error.hpp"
#include "nart/span.hpp"

namespace nart {

namespace {

const RingPtr& image_ring(const Image& img) {
  return std::visit([](const auto& v) -> const RingPtr& { return v.ring(); }, img);
}

Scalar image_constant(const Image& img) {
  return std::visit([](const auto& v) { return v.constant_term(); }, img);
}

}  // namespace

AlgebraMorphism::AlgebraMorphism(RingPtr source, RingPtr target, std::vector<Image> images, PolyIdeal I, PolyIdeal J)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      I_(std::move(I)),
      J_(std::move(J)) {
  if (source_->field() != target_->field()) fail(ErrorCode::ring_mismatch, "source and target fields differ");
  if (images_.size() != source_->size()) fail(ErrorCode::invalid_argument, "need one image per source variable");
  require_same_ring(I_.ring, source_, "source ideal");
  require_same_ring(J_.ring, target_, "target ideal");
  auto names = source_->names();
  names.insert(names.end(), target_->names().begin(), target_->names().end());
  graph_ = make_ring(source_->field(), std::move(names), source_->size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    require_same_ring(image_ring(images_[i]), target_, "morphism image");
    if (!image_constant(images_[i]).is_zero()) {
      fail(ErrorCode::not_local, "image of " + source_->name(i) + " does not vanish at the origin");
    }
  }

  // g(phi) must lie in J for every generator g of I.
  if (polynomial_images()) {
    GroebnerBasis gj = groebner(J_, MonomialOrder::grevlex());
    ModuleOrder order(MonomialOrder::grevlex(), 0);
    auto imgs = image_polynomials();
    for (const auto& g : I_.generators) {
      if (!gj.contains(to_gvector(compose(g, imgs), order))) {
        fail(ErrorCode::ill_defined_morphism, "an element of I does not map into J");
      }
    }
  } else {
    unsigned K = *images_known_order();
    auto imgs = image_series(K);
    for (const auto& g : I_.generators) {
      TruncatedSeries s = substitute(g, imgs);
      unsigned k = s.known_order();
      std::vector<Polynomial> one{s.polynomial()};
      if (!span_contains(target_, truncation_span(target_, J_.generators, k), one)) {
        fail(ErrorCode::ill_defined_morphism, "an element of I does not map into J below the known order");
      }
    }
  }
}

bool AlgebraMorphism::polynomial_images() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const Image& img) { return std::holds_alternative<Polynomial>(img); });
}

std::optional<unsigned> AlgebraMorphism::images_known_order() const {
  std::optional<unsigned> k;
  for (const auto& img : images_) {
    if (const auto* s = std::get_if<TruncatedSeries>(&img)) k = std::min(k.value_or(s->known_order()), s->known_order());
  }
  return k;
}

std::vector<TruncatedSeries> AlgebraMorphism::image_series(unsigned order) const {
  std::vector<TruncatedSeries> out;
  for (const auto& img : images_) {
    if (const auto* p = std::get_if<Polynomial>(&img)) {
      out.push_back(TruncatedSeries::from_polynomial(*p, order));
    } else {
      const auto& s = std::get<TruncatedSeries>(img);
      if (s.known_order() < order) {
        fail(ErrorCode::precision_too_low, "image known only below degree " + std::to_string(s.known_order()));
      }
      out.push_back(truncate(s, order));
    }
  }
  return out;
}

std::vector<Polynomial> AlgebraMorphism::image_polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& img : images_) {
    const auto* p = std::get_if<Polynomial>(&img);
    if (!p) fail(ErrorCode::non_polynomial_images, "an image is a truncated series");
    out.push_back(*p);
  }
  return out;
}

Polynomial AlgebraMorphism::from_source(const Polynomial& p) const {
  std::vector<std::size_t> map(source_->size());
  std::iota(map.begin(), map.end(), std::size_t{0});
  return p.mapped(graph_, map);
}

Polynomial AlgebraMorphism::from_target(const Polynomial& p) const {
  std::vector<std::size_t> map(target_->size());
  std::iota(map.begin(), map.end(), source_->size());
  return p.mapped(graph_, map);
}

Polynomial AlgebraMorphism::to_source(const Polynomial& p) const { return p.embedded(source_); }

PolyIdeal kernel_exact(const AlgebraMorphism& phi) {
  auto imgs = phi.image_polynomials();
  const RingPtr& g = phi.graph_ring();
  std::vector<Polynomial> gens;
  for (const auto& q : phi.target_ideal().generators) gens.push_back(phi.from_target(q));
  for (std::size_t i = 0; i < imgs.size(); ++i) gens.push_back(Polynomial::variable(g, i) - phi.from_target(imgs[i]));
  PolyIdeal K = eliminate_ideal(PolyIdeal(g, std::move(gens)));

  GroebnerBasis gi = groebner(phi.source_ideal(), MonomialOrder::grevlex());
  ModuleOrder order(MonomialOrder::grevlex(), 0);
  std::vector<Polynomial> reduced;
  for (const auto& k : K.generators) {
    GVector nf = gi.normal_form(to_gvector(phi.to_source(k), order));
    if (!nf.empty()) reduced.push_back(from_gvector(nf, phi.source(), 1)[0]);
  }
  return PolyIdeal(phi.source(), std::move(reduced));
}

namespace {

NestedLinearSystem kernel_system(const AlgebraMorphism& phi, unsigned cprime, const std::optional<Image>& rhs) {
  if (auto k = phi.images_known_order(); k && *k < cprime) {
    fail(ErrorCode::precision_too_low, "images known only below degree " + std::to_string(*k));
  }
  const RingPtr& g = phi.graph_ring();
  const Field& field = g->field();
  auto imgs = phi.image_series(cprime);
  NestedLinearSystem sys;
  std::vector<TruncatedSeries> row{TruncatedSeries::constant(g, field.one(), cprime)};
  std::vector<std::size_t> sigma{phi.source()->size()};
  for (const auto& q : phi.target_ideal().generators) {
    row.push_back(TruncatedSeries::from_polynomial(-phi.from_target(q), cprime));
    sigma.push_back(g->size());
  }
  for (std::size_t i = 0; i < imgs.size(); ++i) {
    Polynomial d = Polynomial::variable(g, i) - phi.from_target(imgs[i].polynomial());
    row.push_back(TruncatedSeries::from_polynomial(-d, cprime));
    sigma.push_back(g->size());
  }
  sys.T.push_back(std::move(row));
  if (rhs) {
    TruncatedSeries b = std::visit(
        [&](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, Polynomial>) {
            return TruncatedSeries::from_polynomial(phi.from_target(v), cprime);
          } else {
            if (v.known_order() < cprime) fail(ErrorCode::precision_too_low, "right side known below c only");
            return TruncatedSeries::from_polynomial(phi.from_target(v.polynomial()), cprime);
          }
        },
        *rhs);
    require_same_ring(std::visit([](const auto& v) -> const RingPtr& { return v.ring(); }, *rhs), phi.target(),
                      "preimage right side");
    sys.b.push_back(std::move(b));
  } else {
    sys.b.push_back(TruncatedSeries(g, cprime));
  }
  sys.profile = NestedProfile(std::move(sigma));
  sys.c = cprime;
  return sys;
}

std::vector<Polynomial> source_truncations(const AlgebraMorphism& phi, unsigned c) {
  return truncation_span(phi.source(), phi.source_ideal().generators, c);
}

}  // namespace

std::vector<std::vector<Polynomial>> truncated_kernel_candidates(const AlgebraMorphism& phi, unsigned c_max,
                                                                 unsigned cprime) {
  if (c_max == 0 || cprime < c_max) fail(ErrorCode::invalid_argument, "need 1 <= c <= cprime");
  if (cprime > 250) fail(ErrorCode::invalid_argument, "working order too large");
  NestedLinearSystem sys = kernel_system(phi, cprime, std::nullopt);
  SolveOptions opts;
  opts.nullspace = false;
  opts.obstruction = false;
  opts.verify = false;
  // Higher-degree f coefficients are eliminated before lower-degree ones,
  // so every truncation of the f-projection is read off one elimination.
  opts.column_class = [cprime](std::size_t comp, const Exponent& e) -> std::uint8_t {
    return comp == 0 ? static_cast<std::uint8_t>(1 + (cprime - 1 - total_degree(e))) : 0;
  };
  CoefficientSolve cs(sys, opts);
  std::vector<std::vector<Polynomial>> out(c_max + 1);
  for (unsigned c = 1; c <= c_max; ++c) {
    auto proj = cs.echelon().projected_nullspace([&](std::size_t col) {
      return cs.component_of(col) == 0 && total_degree(cs.exponent_of(col)) < c;
    });
    std::vector<Polynomial> cands;
    for (const auto& v : proj) cands.push_back(phi.to_source(cs.to_vector(v)[0].polynomial()));
    out[c] = span_quotient(phi.source(), cands, source_truncations(phi, c));
  }
  return out;
}

std::vector<unsigned> default_kernel_schedule(unsigned c) { return {c, c + 2, c + 4}; }

KernelReport truncated_completion_kernel(const AlgebraMorphism& phi, unsigned c, std::vector<unsigned> schedule) {
  if (schedule.empty()) schedule = default_kernel_schedule(c);
  std::vector<std::vector<Polynomial>> spaces;
  for (unsigned cp : schedule) spaces.push_back(truncated_kernel_candidates(phi, c, cp)[c]);
  KernelReport r{c, schedule.back(), spaces.back(), false, std::nullopt};
  if (spaces.size() >= 2) r.stabilized = span_equal(phi.source(), spaces[spaces.size() - 2], spaces.back());
  if (phi.polynomial_images()) r.exact_kernel = kernel_exact(phi);
  return r;
}

std::optional<SeriesVector> kernel_certificate(const AlgebraMorphism& phi, const Polynomial& candidate, unsigned c,
                                               unsigned cprime) {
  NestedLinearSystem sys = kernel_system(phi, cprime, std::nullopt);
  SolveOptions opts;
  opts.nullspace = false;
  opts.obstruction = false;
  Polynomial f = phi.from_source(candidate);
  for (const auto& e : monomials_below(sys.ring()->size(), phi.source()->size(), c)) {
    opts.pins.push_back({0, e, f.coefficient(e)});
  }
  SolutionSet s = solve_nested(sys, opts);
  if (!s.solvable) return std::nullopt;
  return s.particular;
}

std::vector<KernelScan> scan_truncated_kernel(const AlgebraMorphism& phi, unsigned c_max, unsigned cprime_max) {
  std::vector<KernelScan> out;
  for (unsigned c = 1; c <= c_max; ++c) out.push_back({c, {}, std::nullopt});
  for (unsigned cp = 1; cp <= cprime_max; ++cp) {
    unsigned top = std::min(c_max, cp);
    auto cand = truncated_kernel_candidates(phi, top, cp);
    for (unsigned c = 1; c <= top; ++c) out[c - 1].by_cprime.push_back(std::move(cand[c]));
  }
  for (auto& s : out) {
    for (unsigned cp = s.c; cp < cprime_max; ++cp) {
      if (span_equal(phi.source(), s.at(cp), s.at(cp + 1))) {
        s.stabilized_at = cp;
        break;
      }
    }
  }
  return out;
}

std::vector<Polynomial> exact_kernel_truncation(const AlgebraMorphism& phi, const PolyIdeal& kernel, unsigned c) {
  return span_quotient(phi.source(), truncation_span(phi.source(), kernel.generators, c), source_truncations(phi, c));
}

bool same_kernel_span(const AlgebraMorphism& phi, const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                      unsigned c) {
  auto ti = source_truncations(phi, c);
  std::vector<Polynomial> aa = a, bb = b;
  aa.insert(aa.end(), ti.begin(), ti.end());
  bb.insert(bb.end(), ti.begin(), ti.end());
  return span_equal(phi.source(), aa, bb);
}

InjectivityReport check_strong_injectivity(const AlgebraMorphism& phi, unsigned c, unsigned cprime) {
  if (!phi.polynomial_images()) fail(ErrorCode::non_polynomial_images, "exact kernel needs polynomial images");
  PolyIdeal K = kernel_exact(phi);
  auto exact = exact_kernel_truncation(phi, K, c);
  auto cand = truncated_kernel_candidates(phi, c, cprime)[c];
  bool eq = same_kernel_span(phi, exact, cand, c);
  return {c, cprime, std::move(K), std::move(exact), std::move(cand), eq};
}

std::optional<TruncatedSeries> preimage(const AlgebraMorphism& phi, const Image& b, unsigned c) {
  if (c == 0) fail(ErrorCode::invalid_argument, "c must be positive");
  NestedLinearSystem sys = kernel_system(phi, c, b);
  SolveOptions opts;
  opts.nullspace = false;
  opts.obstruction = false;
  // f pivots last and by lowest column, so free high-degree f coefficients
  // are the ones set to zero.
  opts.late_rule = PivotRule::ordered;
  opts.column_class = [](std::size_t comp, const Exponent&) -> std::uint8_t { return comp == 0 ? 1 : 0; };
  SolutionSet s = solve_nested(sys, opts);
  if (!s.solvable) return std::nullopt;
  TruncatedSeries f = TruncatedSeries::from_polynomial(phi.to_source(s.particular[0].polynomial()), c);

  Polynomial bp = std::visit([](const auto& v) -> Polynomial {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Polynomial>) {
      return v;
    } else {
      return v.polynomial();
    }
  }, b);
  TruncatedSeries image = substitute(f.polynomial(), phi.image_series(c));
  std::vector<Polynomial> diff{(image.polynomial() - bp).truncated(c)};
  check_invariant(span_contains(phi.target(), truncation_span(phi.target(), phi.target_ideal().generators, c), diff),
                  "preimage does not map onto the target modulo J");
  return f;
}

}  // namespace nart
