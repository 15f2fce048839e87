#include <doctest.h>

#include <random>

#include "nart/elimination.hpp"
#include "nart/error.hpp"
#include "nart/span.hpp"
#include "support/helpers.hpp"

using namespace nart;
using namespace testing_support;

namespace {

PolyModule module_of(const RingPtr& r, std::size_t rank, const std::vector<std::vector<std::string>>& gens) {
  std::vector<std::vector<Polynomial>> g;
  for (const auto& v : gens) g.push_back(Ps(r, v));
  return PolyModule(r, rank, std::move(g));
}

}  // namespace

TEST_CASE("buchberger basics") {
  auto r = ring_of({"x1"});
  auto gb = groebner(PolyIdeal(r, Ps(r, {"x1^2", "x1"})), MonomialOrder::grevlex());
  REQUIRE(gb.size() == 1);
  CHECK(basis_polynomials(gb, r)[0] == P(r, "x1"));
  CHECK(groebner(PolyIdeal(r, {}), MonomialOrder::grevlex()).size() == 0);

  auto xy = ring_of({"x1", "y"}, 1);
  auto e = groebner(PolyIdeal(xy, Ps(xy, {"y - x1", "y^2"})), MonomialOrder::block({false, true}));
  auto polys = basis_polynomials(e, xy);
  CHECK(std::find(polys.begin(), polys.end(), P(xy, "x1^2")) != polys.end());
  CHECK(satisfies_buchberger_criterion(e));
}

TEST_CASE("reduced bases are canonical and satisfy the criterion") {
  auto r = ring_of({"x1", "x2", "x3"});
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> deg(0, 2);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) {
      Polynomial p(r);
      for (int t = 0; t < 3; ++t) {
        Exponent e{static_cast<unsigned>(deg(rng)), static_cast<unsigned>(deg(rng)), static_cast<unsigned>(deg(rng))};
        int c = coeff(rng);
        if (c != 0) p.add_term(e, r->field().from_int(c));
      }
      gens.push_back(p);
    }
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block({true, false, false})}) {
      auto a = groebner(PolyIdeal(r, gens), order);
      auto reversed = gens;
      std::reverse(reversed.begin(), reversed.end());
      reversed.push_back(gens[0] * gens[1]);
      auto b = groebner(PolyIdeal(r, reversed), order);
      CHECK(satisfies_buchberger_criterion(a));
      CHECK(basis_polynomials(a, r) == basis_polynomials(b, r));
      // Same local truncations as the input generators.
      CHECK(span_equal(r, truncation_span(r, gens, 4), truncation_span(r, basis_polynomials(a, r), 4)));
    }
  }
}

TEST_CASE("eliminate_ideal") {
  auto r = ring_of({"x1", "y"}, 1);
  auto xr = x_subring(r);
  auto a = eliminate_ideal(PolyIdeal(r, Ps(r, {"y - x1", "y^2"})));
  CHECK(a.generators == Ps(xr, {"x1^2"}));
  CHECK(eliminate_ideal(PolyIdeal(r, Ps(r, {"x1 - y^2"}))).is_zero());
  CHECK(eliminate_ideal(PolyIdeal(r, Ps(r, {"x1"}))).generators == Ps(xr, {"x1"}));
}

TEST_CASE("module_intersect_zero_block") {
  auto r = ring_of({"x1", "y"}, 1);
  auto xr = x_subring(r);
  CHECK(module_intersect_zero_block(module_of(r, 2, {{"y", "x1"}}), 1).is_zero());
  auto b = module_intersect_zero_block(module_of(r, 2, {{"x1", "1"}, {"0", "x1"}}), 1);
  CHECK(same_module(b, module_of(xr, 1, {{"x1"}})));
  auto c = module_intersect_zero_block(module_of(r, 2, {{"0", "1"}}), 1);
  CHECK(same_module(c, module_of(xr, 1, {{"1"}})));
}

TEST_CASE("Nagata idealization") {
  auto r = ring_of({"x1", "y"}, 1);
  auto xr = x_subring(r);
  auto M = module_of(r, 2, {{"y", "x1"}});
  auto idl = nagata_idealize(M, 1);
  auto ir = idl.ideal.ring;
  CHECK(ir->names() == std::vector<std::string>{"x1", "y", "z1", "w1"});
  CHECK(same_ideal(idl.ideal, PolyIdeal(ir, Ps(ir, {"y*z1 + x1*w1", "z1^2", "z1*w1", "w1^2"}))));
  CHECK(idealization_route(idl, xr).is_zero());

  auto zero = nagata_idealize(PolyModule(r, 2, {}), 1);
  CHECK(zero.ideal.generators.size() == 3);

  PolyIdeal I(r, Ps(r, {"y - x1", "y^2"}));
  auto as_module = module_of(r, 1, {{"y - x1"}, {"y^2"}});
  auto route = idealization_route(nagata_idealize(as_module, 0), xr);
  auto direct = eliminate_ideal(I);
  std::vector<std::vector<Polynomial>> gens;
  for (const auto& g : direct.generators) gens.push_back({g});
  CHECK(same_module(route, PolyModule(xr, 1, gens)));
}

TEST_CASE("truncated completion elimination") {
  auto r = ring_of({"x1", "y"}, 1);
  auto xr = x_subring(r);
  PolyIdeal I(r, Ps(r, {"y - x1", "y^2"}));
  auto t = truncated_completion_elimination(I, 3, 10);
  CHECK(span_equal(xr, t, Ps(xr, {"x1^2"})));
  CHECK(truncated_completion_elimination(PolyIdeal(r, {}), 3, 5).empty());
  auto all = truncated_completion_elimination(PolyIdeal(r, Ps(r, {"1"})), 3, 4);
  CHECK(all.size() == 3);
  // Anti-chain in cprime.
  PolyIdeal J(r, Ps(r, {"x1 - y^3 - y^4"}));
  for (unsigned cp = 3; cp < 9; ++cp) {
    CHECK(span_contains(xr, truncated_completion_elimination(J, 3, cp), truncated_completion_elimination(J, 3, cp + 1)));
  }
}

TEST_CASE("compare_elimination stabilizes") {
  auto r = ring_of({"x1", "x2", "y"}, 2);
  PolyIdeal I(r, Ps(r, {"y^2 - x1", "y*x2 - x1"}));
  auto cmp = compare_elimination(I, 4, 10);
  for (const auto& e : cmp) {
    CHECK(e.stabilized_at.has_value());
  }
}

TEST_CASE("Chevalley function") {
  auto r = ring_of({"x1"});
  auto M = module_of(r, 1, {{"x1"}});
  for (unsigned c = 1; c <= 10; ++c) {
    CHECK(chevalley_beta(M, 1, c, ChevalleyMode::exact).beta == c);
    CHECK(chevalley_beta(M, 1, c, ChevalleyMode::truncated, c + 4).beta == c);
  }
  auto r2 = ring_of({"x1", "x2"});
  auto M2 = module_of(r2, 2, {{"x1", "x2"}});
  for (unsigned c = 1; c <= 6; ++c) {
    CHECK(chevalley_beta(M2, 1, c, ChevalleyMode::exact).beta == c);
    CHECK(chevalley_beta(M2, 1, c, ChevalleyMode::truncated, c + 4).beta == c);
  }
  CHECK(chevalley_beta(PolyModule(r2, 2, {}), 1, 3, ChevalleyMode::exact).beta == 0);
  auto ry = ring_of({"x1", "y"}, 1);
  CHECK_THROWS_AS(chevalley_beta(module_of(ry, 1, {{"y"}}), 1, 2, ChevalleyMode::exact), Error);
}

TEST_CASE("Chevalley function is monotone and truncated mode is a lower bound") {
  auto r = ring_of({"x1", "x2"});
  auto M = module_of(r, 2, {{"x1^2", "x2"}, {"x1*x2", "x1 + x2^2"}});
  unsigned prev = 0;
  for (unsigned c = 1; c <= 4; ++c) {
    unsigned exact = chevalley_beta(M, 1, c, ChevalleyMode::exact).beta;
    CHECK(exact >= prev);
    prev = exact;
    for (unsigned D : {c + 1, c + 3, c + 5}) {
      CHECK(chevalley_beta(M, 1, c, ChevalleyMode::truncated, D).beta <= exact);
    }
  }
}

TEST_CASE("syzygies") {
  auto r = ring_of({"x1", "x2"});
  auto a = syzygies({Ps(r, {"x1", "-x1"})});
  CHECK(same_module(a, module_of(r, 2, {{"1", "1"}})));
  auto k = syzygies({Ps(r, {"x1", "x2"})});
  CHECK(same_module(k, module_of(r, 2, {{"x2", "-x1"}})));
  CHECK(syzygies({Ps(r, {"1"})}).is_zero());
  auto three = syzygies({Ps(r, {"x1", "x2", "x1*x2"}), Ps(r, {"x2", "0", "1"})});
  for (const auto& s : three.generators) {
    CHECK((P(r, "x1") * s[0] + P(r, "x2") * s[1] + P(r, "x1*x2") * s[2]).is_zero());
    CHECK((P(r, "x2") * s[0] + s[2]).is_zero());
  }
}
