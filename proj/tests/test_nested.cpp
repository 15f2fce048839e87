#include <doctest.h>

#include "nart/elimination.hpp"
#include "nart/error.hpp"
#include "nart/nested.hpp"
#include "support/dense_oracle.hpp"
#include "support/helpers.hpp"

using namespace nart;
using namespace testing_support;

namespace {

NestedLinearSystem system_of(const RingPtr& r, const std::vector<std::vector<std::string>>& T,
                             const std::vector<std::string>& b, std::vector<std::size_t> sigma, unsigned c) {
  std::vector<std::vector<Polynomial>> t;
  for (const auto& row : T) t.push_back(Ps(r, row));
  return NestedLinearSystem::from_polynomials(t, Ps(r, b), std::move(sigma), c);
}

}  // namespace

TEST_CASE("profile permutation") {
  NestedProfile p({2, 1, 3, 1});
  CHECK(p.permutation() == std::vector<std::size_t>{1, 3, 0, 2});
  std::vector<int> v{10, 11, 12, 13};
  auto s = p.to_sorted(v);
  CHECK(s == std::vector<int>{11, 13, 10, 12});
  CHECK(p.from_sorted(s) == v);
  CHECK(p.min_sigma() == 1);
}

TEST_CASE("split by variable") {
  auto r = ring_of({"x1", "x2"});
  auto sys = system_of(r, {{"1", "1"}}, {"x1 + x2"}, {1, 2}, 4);
  auto s = solve_nested(sys);
  REQUIRE(s.solvable);
  CHECK(is_solution(sys, s.particular, 4));
  // Homogeneous solutions are (-g(x1), g(x1)) with deg g < 4.
  CHECK(s.nullspace.size() == 4);
  for (const auto& v : s.nullspace) {
    CHECK(nested_support_ok(v[0], 1));
    CHECK(v[0] + v[1] == TruncatedSeries(r, 4));
  }
  auto oracle = dense_verdict(sys);
  CHECK(oracle.solvable);
  CHECK(oracle.nullity() == s.nullspace.size());
}

TEST_CASE("obstruction degree") {
  auto r = ring_of({"x1", "x2"});
  auto sys = system_of(r, {{"1"}}, {"x2"}, {1}, 2);
  auto s = solve_nested(sys);
  CHECK_FALSE(s.solvable);
  REQUIRE(s.obstruction_degree);
  CHECK(*s.obstruction_degree == 1);
  auto deep = system_of(r, {{"1"}}, {"x1 + x1^2*x2^2"}, {1}, 7);
  auto d = solve_nested(deep);
  CHECK_FALSE(d.solvable);
  CHECK(*d.obstruction_degree == 4);
  CHECK_FALSE(dense_verdict(deep).solvable);
}

TEST_CASE("implicit linear equation as a nested system") {
  // (x2 - x1) y2 + x2 - y1 = 0, sigma = (1, 2).
  auto r = ring_of({"x1", "x2"});
  auto sys = system_of(r, {{"-1", "x2 - x1"}}, {"-x2"}, {1, 2}, 5);
  auto s = solve_nested(sys);
  REQUIRE(s.solvable);
  // Pin y1(0) = 0 and check the solution is (x1, -1) below degree 4.
  SolveOptions o;
  o.pins.push_back({0, {0, 0}, Q(0)});
  auto p = solve_nested(sys, o);
  REQUIRE(p.solvable);
  CHECK(truncate(p.particular[0], 4).polynomial() == P(r, "x1"));
  CHECK(truncate(p.particular[1], 4).polynomial() == P(r, "-1"));
}

TEST_CASE("precision checks") {
  auto r = ring_of({"x1"});
  NestedLinearSystem sys;
  sys.T = {{S(r, "1", 2)}};
  sys.b = {S(r, "x1", 5)};
  sys.profile = NestedProfile({1});
  sys.c = 4;
  CHECK_THROWS_AS(solve_nested(sys), Error);
  try {
    solve_nested(sys);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precision_too_low);
  }
}

TEST_CASE("approximate pins the target below c") {
  auto r = ring_of({"x1", "x2"});
  auto sys = system_of(r, {{"1", "1"}}, {"x1 + x2"}, {1, 2}, 5);
  SeriesVector target{S(r, "x1 + x1^3", 5), S(r, "x2 - x1^3", 5)};
  auto s = approximate(sys, target, 2);
  REQUIRE(s.solvable);
  CHECK(truncate(s.particular[0], 2) == truncate(target[0], 2));
  CHECK(is_solution(sys, s.particular, 5));
  auto same = approximate(sys, target, 5);
  CHECK(same.particular == target);
  SeriesVector wrong{S(r, "x1", 5), S(r, "x1", 5)};
  CHECK_THROWS_AS(approximate(sys, wrong, 2), Error);
}

TEST_CASE("homogenize and recover") {
  auto r = ring_of({"x1"});
  auto sys = system_of(r, {{"1"}}, {"x1"}, {1}, 4);
  auto h = homogenize(sys);
  CHECK(h.T[0][0].polynomial() == P(r, "-x1"));
  CHECK(h.T[0][1].polynomial() == P(r, "1"));
  CHECK(h.b[0].is_zero());
  CHECK(h.profile.sigma() == std::vector<std::size_t>{1, 1});

  auto again = homogenize(h);
  CHECK(again.unknowns() == 3);
  CHECK(again.T[0][0].is_zero());

  SeriesVector y{S(r, "1 + x1", 4), S(r, "x1 + x1^2", 4)};
  CHECK(recover_from_homogeneous(y, 4)[0].polynomial() == P(r, "x1"));
  SeriesVector one{S(r, "1", 4), S(r, "x1^3 - 2", 4)};
  CHECK(recover_from_homogeneous(one, 4)[0] == one[1]);
  SeriesVector bad{S(r, "x1", 4), S(r, "1", 4)};
  CHECK_THROWS_AS(recover_from_homogeneous(bad, 4), Error);

  for (auto pin : {HomogeneousPin::constant_term, HomogeneousPin::whole_series}) {
    auto rec = solve_via_homogenization(sys, pin);
    REQUIRE(rec);
    CHECK(is_solution(sys, *rec, 4));
  }
}

TEST_CASE("nested sums through homogenization") {
  auto r = ring_of({"x1", "x2", "x3"});
  auto sys = system_of(r, {{"1 + x3", "x1"}, {"x2", "1"}}, {"x1 + x2", "x3^2"}, {2, 3}, 4);
  auto direct = solve_nested(sys);
  auto rec = solve_via_homogenization(sys, HomogeneousPin::constant_term);
  CHECK(direct.solvable == rec.has_value());
  if (rec) {
    CHECK(is_solution(sys, *rec, 4));
    CHECK(is_nested(sys.profile, *rec));
  }
}

TEST_CASE("downward consistency") {
  auto r = ring_of({"x1", "x2"});
  auto sys = system_of(r, {{"1 + x1", "x2"}}, {"x1*x2 + x2^2"}, {1, 2}, 6);
  auto s = solve_nested(sys);
  REQUIRE(s.solvable);
  for (unsigned c = 1; c < 6; ++c) {
    SeriesVector cut;
    for (const auto& v : s.particular) cut.push_back(truncate(v, c));
    CHECK(is_solution(sys, cut, c));
  }
}

TEST_CASE("pivot rules agree on solvability and nullity") {
  auto r = ring_of({"x1", "x2", "x3"});
  auto sys = system_of(r, {{"x1 + x2", "x3", "1 - x2"}, {"x2^2", "1 + x1", "x3"}}, {"x1*x3", "x2"}, {1, 2, 3}, 5);
  auto hom = sys;
  for (auto& t : hom.b) t = TruncatedSeries(r, sys.c);
  std::optional<std::size_t> nullity;
  for (PivotRule rule : {PivotRule::markowitz, PivotRule::markowitz_reversed, PivotRule::ordered}) {
    SolveOptions o;
    o.rule = rule;
    CHECK(solve_nested(sys, o).solvable == dense_verdict(sys).solvable);
    auto s = solve_nested(hom, o);
    REQUIRE(s.solvable);
    if (!nullity) nullity = s.nullspace.size();
    CHECK(s.nullspace.size() == *nullity);
  }
  CHECK(*nullity == dense_verdict(hom).nullity());
}

TEST_CASE("syzygies lie in the truncated nullspace") {
  auto r = ring_of({"x1", "x2"});
  std::vector<std::vector<Polynomial>> T{Ps(r, {"x1", "x2", "x1 + x2"})};
  PolyModule syz = syzygies(T);
  const unsigned c = 5;
  auto sys = NestedLinearSystem::from_polynomials(T, Ps(r, {"0"}), {2, 2, 2}, c);
  auto s = solve_nested(sys);
  REQUIRE(s.solvable);
  // Membership of each truncated syzygy in the span of the nullspace basis.
  MonomialIndex idx(monomials_below(2, 2, c));
  auto flatten = [&](const std::vector<Polynomial>& v) {
    SparseEntries out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto part = coordinates(v[i].truncated(c), idx, i * idx.size());
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  };
  std::vector<SparseEntries> basis;
  for (const auto& v : s.nullspace) {
    std::vector<Polynomial> ps;
    for (const auto& t : v) ps.push_back(t.polynomial());
    basis.push_back(flatten(ps));
  }
  std::size_t rank = rank_of(Field::rationals(), 3 * idx.size(), basis);
  for (const auto& g : syz.generators) {
    auto with = basis;
    with.push_back(flatten(g));
    CHECK(rank_of(Field::rationals(), 3 * idx.size(), with) == rank);
  }
}

TEST_CASE("sigma zero unknowns are constants") {
  auto r = ring_of({"x1"});
  auto sys = system_of(r, {{"1", "x1"}}, {"2 + x1"}, {0, 1}, 3);
  auto s = solve_nested(sys);
  REQUIRE(s.solvable);
  CHECK(s.particular[0].polynomial().degree() <= 0);
  CHECK(dense_verdict(sys).nullity() == s.nullspace.size());
}

TEST_CASE("Weierstrass division") {
  auto r = ring_of({"x1", "x2"});
  auto big = [&](const std::string& t) { return S(r, t, 200); };
  auto w = weierstrass_divide(big("x2 - x1"), big("x2"), 6);
  CHECK(w.d == 1);
  CHECK(w.q.polynomial() == P(r, "1"));
  CHECK(w.a[0].polynomial() == P(r, "x1"));

  auto w2 = weierstrass_divide(big("x2^2 - x1"), big("x2^3"), 6);
  CHECK(w2.d == 2);
  CHECK(w2.q.polynomial() == P(r, "x2"));
  CHECK(w2.a[0].is_zero());
  CHECK(w2.a[1].polynomial() == P(r, "x1"));

  auto g = P(r, "1 + x1*x2 + x1^3 + x2^2 - 4*x2^5");
  auto w3 = weierstrass_divide(big("x2"), TruncatedSeries::from_polynomial(g, 200), 6);
  CHECK(w3.a[0].polynomial() == P(r, "1 + x1^3"));
  CHECK(w3.q.polynomial() == P(r, "x1 + x2 - 4*x2^4"));

  CHECK_THROWS_AS(weierstrass_divide(big("x1"), big("x2"), 4), Error);
  CHECK_THROWS_AS(weierstrass_divide(S(r, "x2^2 - x1", 8), big("x2"), 6), Error);
}

TEST_CASE("implicit_linear") {
  auto r = ring_of({"x1", "x2"});
  auto a = implicit_linear(S(r, "x2 - x1", 10), 6);
  CHECK(a.h.polynomial() == P(r, "x1"));
  CHECK(a.u.polynomial() == P(r, "-1"));
  auto b = implicit_linear(S(r, "x2", 10), 6);
  CHECK(b.h.is_zero());
  CHECK(b.u.polynomial() == P(r, "-1"));
  auto c = implicit_linear(S(r, "x2 - x1^2", 10), 5);
  CHECK(c.h.polynomial() == P(r, "x1^2"));
  CHECK(c.u.polynomial() == P(r, "-1"));
  auto d = implicit_linear(S(r, "x2 + x2^2 - x1", 10), 6);
  CHECK(d.h.polynomial() == P(r, "x1 - x1^2 + 2*x1^3 - 5*x1^4 + 14*x1^5"));
  CHECK_THROWS_AS(implicit_linear(S(r, "x1", 10), 4), Error);
  CHECK_THROWS_AS(implicit_linear(S(r, "1 + x2", 10), 4), Error);
}
