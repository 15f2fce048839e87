#include <doctest.h>

#include <cmath>

#include "nart/error.hpp"
#include "nart/hensel.hpp"
#include "support/helpers.hpp"

using namespace nart;
using namespace testing_support;

namespace {

// binom(1/2, k) by the recurrence b_{k+1} = b_k (1/2 - k) / (k + 1).
Polynomial binomial_half(const RingPtr& r, unsigned c) {
  Polynomial p(r);
  mpq_class b = 1;
  for (unsigned k = 0; k < c; ++k) {
    p.add_term({k}, Scalar(b));
    b = b * (mpq_class(1, 2) - k) / (k + 1);
  }
  return p;
}

Polynomial catalan(const RingPtr& r, unsigned c) {
  std::vector<mpz_class> C{1};
  for (unsigned n = 0; n + 1 < c; ++n) {
    mpz_class s = 0;
    for (unsigned i = 0; i <= n; ++i) s += C[i] * C[n - i];
    C.push_back(s);
  }
  Polynomial p(r);
  for (unsigned k = 0; k < c; ++k) p.add_term({k}, Scalar(mpq_class(C[k])));
  return p;
}

unsigned ceil_log2(unsigned c) {
  unsigned k = 0;
  while ((1u << k) < c) ++k;
  return k;
}

}  // namespace

TEST_CASE("validate") {
  auto ru = ring_of({"x1", "u"});
  CHECK(HenselCode(P(ru, "u^2 - 1 - x1"), 1, Q(1)).validate().ok);
  auto v = HenselCode(P(ru, "u^2 - x1"), 1, Q(0)).validate();
  CHECK_FALSE(v.ok);
  CHECK(v.reason.find("simple") != std::string::npos);
  CHECK_FALSE(HenselCode(P(ru, "u - x1"), 1, Q(1)).validate().ok);
  CHECK_THROWS_AS(HenselCode(P(ru, "u - x1"), 1, Q(1)).lift(3), Error);
}

TEST_CASE("square root of 1 + x1") {
  auto ru = ring_of({"x1", "u"});
  HenselCode code(P(ru, "u^2 - 1 - x1"), 1, Q(1));
  auto r = code.base_ring();
  CHECK(code.lift(4).polynomial() == P(r, "1 + 1/2*x1 - 1/8*x1^2 + 1/16*x1^3"));
  for (unsigned c = 1; c <= 40; ++c) CHECK(code.lift(c).polynomial() == binomial_half(r, c));
  HenselCode other(P(ru, "u^2 - 1 - x1"), 1, Q(-1));
  CHECK((code.lift(12) + other.lift(12)).is_zero());
}

TEST_CASE("Catalan generating function") {
  auto ru = ring_of({"x1", "u"});
  HenselCode code(P(ru, "u - 1 - x1*u^2"), 1, Q(1));
  CHECK(code.lift(5).polynomial() == P(code.base_ring(), "1 + x1 + 2*x1^2 + 5*x1^3 + 14*x1^4"));
  for (unsigned c : {1u, 2u, 7u, 16u, 33u, 64u}) {
    HenselCode fresh(P(ru, "u - 1 - x1*u^2"), 1, Q(1));
    HenselCode::Stats st;
    CHECK(fresh.lift(c, &st).polynomial() == catalan(fresh.base_ring(), c));
    CHECK(st.newton_steps <= ceil_log2(c) + 1);
  }
}

TEST_CASE("explicit roots short-circuit") {
  auto ru = ring_of({"x1", "x2", "u"});
  HenselCode code(P(ru, "u - 2 - x1*x2 + x2^3"), 2, Q(2));
  HenselCode::Stats st;
  auto f = code.lift(3, &st);
  CHECK(st.explicit_solve);
  CHECK(st.newton_steps == 0);
  CHECK(f.polynomial() == P(code.base_ring(), "2 + x1*x2"));
  HenselCode lin(P(ru, "(1 + x1)*u - x2"), 2, Q(0));
  CHECK(lin.lift(4).polynomial() == P(lin.base_ring(), "x2 - x1*x2 + x1^2*x2"));
}

TEST_CASE("lifts agree on the common prefix and the cache only grows") {
  auto ru = ring_of({"x1", "u"});
  HenselCode code(P(ru, "u^3 + u - 2 - x1"), 1, Q(1));
  auto hi = code.lift(20);
  CHECK(code.cached_order() == 20);
  auto lo = code.lift(7);
  CHECK(truncate(hi, 7) == lo);
  CHECK(code.cached_order() == 20);
  HenselCode::Stats st;
  code.lift(30, &st);
  CHECK(st.newton_steps == 1);
}

TEST_CASE("implicit_solve") {
  auto r = ring_of({"y1", "z1", "u"}, 1);
  auto g = implicit_solve(P(r, "u - y1 - z1"), 2, 5);
  CHECK(g.polynomial() == P(g.ring(), "y1 + z1"));

  auto G = P(r, "u + y1*u^2 - z1");
  auto h = implicit_solve(G, 2, 6);
  // Resubstitute: G(y, h, z) vanishes below degree 6.
  std::vector<Polynomial> coeffs{P(h.ring(), "-z1"), P(h.ring(), "1"), P(h.ring(), "y1")};
  CHECK(evaluate_in_unknown(coeffs, h.polynomial(), 6).is_zero());
  CHECK(truncate(h, 4).polynomial() == P(h.ring(), "z1 - y1*z1^2"));
  CHECK(h.coefficient({2, 3}) == Q(2));

  auto r1 = ring_of({"y1", "u"});
  auto rev = implicit_solve(P(r1, "u^2 + u - y1"), 1, 4);
  CHECK(rev.polynomial() == P(rev.ring(), "y1 - y1^2 + 2*y1^3"));
  CHECK_THROWS_AS(implicit_solve(P(r1, "u^2 - y1"), 1, 4), Error);
  CHECK_THROWS_AS(implicit_solve(P(r1, "u - 1 - y1"), 1, 4), Error);
}

TEST_CASE("prime field lift") {
  auto ru = ring_of({"x1", "u"}, Field::prime(7));
  HenselCode code(P(ru, "u^2 - 1 - x1"), 1, Scalar::modular(1, 7));
  auto f = code.lift(10);
  CHECK(truncate(f * f, 10) == TruncatedSeries::from_polynomial(P(code.base_ring(), "1 + x1"), 10));
}
