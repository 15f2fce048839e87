#include <benchmark/benchmark.h>

#include "nart/elimination.hpp"
#include "nart/hensel.hpp"
#include "nart/morphism.hpp"
#include "nart/nested.hpp"
#include "nart/text.hpp"

using namespace nart;

namespace {

RingPtr ring(std::vector<std::string> names) { return make_ring(Field::rationals(), std::move(names)); }

TruncatedSeries series(const RingPtr& r, const char* text, unsigned order) {
  return TruncatedSeries::from_polynomial(parse_polynomial(r, text), order);
}

void BM_SeriesMul(benchmark::State& state) {
  auto r = ring({"x1", "x2", "x3"});
  unsigned c = static_cast<unsigned>(state.range(0));
  auto f = series(r, "1 + x1 - 2*x2 + x3^2 + x1*x2*x3", c);
  auto g = invert(f);
  for (auto _ : state) benchmark::DoNotOptimize(mul(g, g));
}
BENCHMARK(BM_SeriesMul)->Arg(6)->Arg(10)->Arg(14);

void BM_SeriesInvert(benchmark::State& state) {
  auto r = ring({"x1", "x2", "x3"});
  auto f = series(r, "1 + x1 - 2*x2 + x3^2 + x1*x2*x3", static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert(f));
}
BENCHMARK(BM_SeriesInvert)->Arg(6)->Arg(10)->Arg(14);

void BM_HenselLift(benchmark::State& state) {
  auto r = ring({"x1", "x2", "u"});
  unsigned c = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    // A fresh code per iteration so the lift cache does not short-circuit.
    HenselCode code(parse_polynomial(r, "u^2 - 1 - x1 - x2^2"), 2, Scalar(mpq_class(1)));
    benchmark::DoNotOptimize(code.lift(c));
  }
}
BENCHMARK(BM_HenselLift)->Arg(8)->Arg(16)->Arg(32);

void BM_SolveNested(benchmark::State& state) {
  auto r = ring({"x1", "x2", "x3"});
  unsigned c = static_cast<unsigned>(state.range(0));
  std::vector<std::vector<Polynomial>> T = {
      {parse_polynomial(r, "x1"), parse_polynomial(r, "x2 + x3"), parse_polynomial(r, "1 + x1*x3")},
      {parse_polynomial(r, "x2^2"), parse_polynomial(r, "x1 - x3"), parse_polynomial(r, "x2")}};
  std::vector<Polynomial> b = {parse_polynomial(r, "x1*x2 + x3^3"), parse_polynomial(r, "x2*x3")};
  auto sys = NestedLinearSystem::from_polynomials(T, b, {1, 2, 3}, c);
  SolveOptions options;
  options.verify = false;
  for (auto _ : state) benchmark::DoNotOptimize(solve_nested(sys, options));
}
BENCHMARK(BM_SolveNested)->Arg(4)->Arg(6)->Arg(8);

void BM_Weierstrass(benchmark::State& state) {
  auto r = ring({"x1", "x2"});
  unsigned c = static_cast<unsigned>(state.range(0));
  unsigned w = weierstrass_working_order(2, c);
  auto f = series(r, "x2^2 - x1 + x1*x2", w);
  auto g = series(r, "x1^2 + x1*x2 + x2^5 + 3*x2^3*x1", w);
  for (auto _ : state) benchmark::DoNotOptimize(weierstrass_divide(f, g, c));
}
BENCHMARK(BM_Weierstrass)->Arg(4)->Arg(8)->Arg(12);

void BM_Buchberger(benchmark::State& state) {
  auto r = ring({"x1", "x2", "x3"});
  PolyIdeal I(r, {parse_polynomial(r, "x1^2 - x2*x3"), parse_polynomial(r, "x2^2 - x1*x3"),
                  parse_polynomial(r, "x3^2 - x1*x2 + x1")});
  for (auto _ : state) benchmark::DoNotOptimize(groebner(I, MonomialOrder::grevlex()));
}
BENCHMARK(BM_Buchberger);

void BM_KernelCandidates(benchmark::State& state) {
  auto src = ring({"x1", "x2", "x3"});
  auto tgt = ring({"y1", "y2"});
  std::vector<Image> images = {parse_polynomial(tgt, "y1"), parse_polynomial(tgt, "y1*y2"),
                               parse_polynomial(tgt, "y1*y2^2")};
  AlgebraMorphism phi(src, tgt, images, PolyIdeal(src, {}), PolyIdeal(tgt, {}));
  unsigned cprime = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_kernel_candidates(phi, 3, cprime));
}
BENCHMARK(BM_KernelCandidates)->Arg(5)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
