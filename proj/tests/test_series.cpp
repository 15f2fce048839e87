#include <doctest.h>

#include <random>

#include "nart/error.hpp"
#include "nart/series.hpp"
#include "nart/text.hpp"
#include "support/helpers.hpp"

using namespace nart;
using namespace testing_support;

namespace {

TruncatedSeries random_series(const RingPtr& r, std::mt19937& rng, unsigned order, bool unit = false) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Polynomial p(r);
  for (const auto& e : monomials_below(r->size(), r->size(), order)) {
    int v = coeff(rng);
    if (v != 0) p.add_term(e, r->field().from_int(v));
  }
  if (unit) p.add_term(Exponent(r->size(), 0), r->field().one());
  return TruncatedSeries::from_polynomial(p, order);
}

// Convolution by brute force over every pair of exponents.
Polynomial brute_product(const Polynomial& a, const Polynomial& b, unsigned below) {
  Polynomial out(a.ring());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e = ea + eb;
      if (total_degree(e) < below) out.add_term(e, ca * cb);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field q = Field::rationals();
  CHECK((q.from_int(1) / q.from_int(3) + q.from_int(1) / q.from_int(6)) == Scalar(mpq_class(1, 2)));
  Field f7 = Field::prime(7);
  CHECK((f7.from_int(3) * f7.from_int(5)).residue() == 1);
  CHECK((f7.from_int(3).inverse()).residue() == 5);
  CHECK((f7.from_int(-1)).residue() == 6);
  CHECK_THROWS_AS(Field::prime(6), Error);
  CHECK(f7.from_rational(mpq_class(1, 2)).residue() == 4);
}

TEST_CASE("add keeps the smaller precision") {
  auto r = ring_of({"x1", "x2"});
  CHECK(S(r, "1 + x1", 5) + S(r, "-1 + x2", 5) == S(r, "x1 + x2", 5));
  auto s = S(r, "x1", 3) + S(r, "x1^2", 7);
  CHECK(s.known_order() == 3);
  CHECK(s.polynomial() == P(r, "x1 + x1^2"));
  auto f = S(r, "1 + x1*x2 - x2^3", 6);
  CHECK(f + TruncatedSeries(r, 9) == f);
}

TEST_CASE("mul precision rule") {
  auto r = ring_of({"x1", "x2"});
  CHECK(S(r, "1 + x1", 5) * S(r, "1 - x1", 5) == S(r, "1 - x1^2", 5));
  auto p = S(r, "x1", 3) * S(r, "x2", 3);
  CHECK(p.known_order() == 4);
  CHECK(p.polynomial() == brute_product(P(r, "x1"), P(r, "x2"), 4));
  auto f = S(r, "2 + x1 - x2^2", 6);
  CHECK(f * TruncatedSeries::constant(r, r->field().one(), 6) == f);
}

TEST_CASE("invert agrees with the geometric series") {
  auto r = ring_of({"x1"});
  auto g = invert(S(r, "1 - x1", 4));
  CHECK(g == S(r, "1 + x1 + x1^2 + x1^3", 4));
  for (unsigned order = 1; order <= 20; ++order) {
    Polynomial geo(r);
    for (unsigned k = 0; k < order; ++k) geo.add_term({k}, r->field().one());
    CHECK(invert(TruncatedSeries::from_polynomial(P(r, "1 - x1"), order)).polynomial() == geo);
  }
  CHECK(invert(S(r, "2", 3)) == TruncatedSeries::constant(r, Q(1, 2), 3));
  CHECK_THROWS_AS(invert(S(r, "x1", 3)), Error);
}

TEST_CASE("invert over a prime field") {
  auto r = ring_of({"x1", "x2"}, Field::prime(101));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(r, rng, 7, true);
    if (f.constant_term().is_zero()) continue;
    auto prod = f * invert(f);
    CHECK(prod == TruncatedSeries::constant(r, r->field().one(), 7));
  }
}

TEST_CASE("substitute") {
  auto x = ring_of({"x1", "x2"});
  auto y = ring_of({"y1", "y2"});
  std::vector<TruncatedSeries> imgs{S(y, "y1", 6), S(y, "y1*y2", 6)};
  CHECK(substitute(P(x, "x1*x2"), imgs).polynomial() == P(y, "y1^2*y2"));

  auto x1 = ring_of({"x1"});
  auto y1 = ring_of({"y1"});
  auto g = S(y1, "1 + y1 + y1^3", 5);
  std::vector<TruncatedSeries> one{g};
  CHECK(substitute(P(x1, "x1"), one) == g);

  // Sum_{d<4} (y + y^2)^d expanded directly.
  std::vector<TruncatedSeries> img{S(y1, "y1 + y1^2", 4)};
  auto geo = S(x1, "1 + x1 + x1^2 + x1^3", 4);
  Polynomial direct(y1);
  Polynomial t = P(y1, "y1 + y1^2");
  Polynomial pw = Polynomial::constant(y1, 1);
  for (int d = 0; d < 4; ++d) {
    direct += pw;
    pw = pw * t;
  }
  auto got = substitute(geo, img);
  CHECK(got.known_order() == 4);
  CHECK(got.polynomial() == direct.truncated(4));
  CHECK(got.polynomial() == P(y1, "1 + y1 + 2*y1^2 + 3*y1^3"));

  std::vector<TruncatedSeries> bad{S(y1, "1 + y1", 4)};
  CHECK_THROWS_AS(substitute(geo, bad), Error);
  CHECK_NOTHROW(substitute(P(x1, "1 + x1^2"), bad));
}

TEST_CASE("nested support") {
  auto r = ring_of({"x1", "x2"});
  CHECK(nested_support_ok(S(r, "x1 + x1*x2", 4), 2));
  CHECK_FALSE(nested_support_ok(S(r, "x2", 4), 1));
  CHECK(nested_support_ok(TruncatedSeries(r, 4), 0));
  CHECK(nested_support_ok(S(r, "3 + x1^2", 4), 1));
}

TEST_CASE("ring axioms below the derived order") {
  auto r = ring_of({"x1", "x2", "x3"});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    auto f = random_series(r, rng, 8);
    auto g = random_series(r, rng, 8);
    auto h = random_series(r, rng, 8);
    CHECK((f + g) + h == f + (g + h));
    auto lhs = f * (g + h);
    auto rhs = f * g + f * h;
    unsigned k = std::min(lhs.known_order(), rhs.known_order());
    CHECK(truncate(lhs, k) == truncate(rhs, k));
    CHECK((f * g).polynomial() == brute_product(f.polynomial(), g.polynomial(), (f * g).known_order()));
  }
}

TEST_CASE("substitute commutes with truncation") {
  auto x = ring_of({"x1", "x2"});
  auto y = ring_of({"y1", "y2"});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    auto f = random_series(x, rng, 9);
    auto a = random_series(y, rng, 9);
    auto b = random_series(y, rng, 9);
    // Images must vanish at the origin.
    a = a - TruncatedSeries::constant(y, a.constant_term(), 9);
    b = b - TruncatedSeries::constant(y, b.constant_term(), 9);
    for (unsigned c = 1; c <= 6; ++c) {
      std::vector<TruncatedSeries> imgs{a, b};
      std::vector<TruncatedSeries> cut{truncate(a, c), truncate(b, c)};
      CHECK(truncate(substitute(f, imgs), c) == substitute(truncate(f, c), cut));
    }
  }
}

TEST_CASE("printing round trip") {
  auto r = ring_of({"x1", "x2", "y1"}, 2);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_series(r, rng, 5);
    f = scale(f, Q(trial + 1, 3));
    std::string text = to_string(f);
    CHECK(parse_series(r, text) == f);
    CHECK(parse_polynomial(r, to_string(f.polynomial())) == f.polynomial());
  }
  CHECK(to_string(S(r, "x2 + x1 - 1/2*x1^2", 4)) == "x1 + x2 - 1/2*x1^2 + O(deg 4)");
  CHECK(to_string(P(r, "0")) == "0");
  CHECK(to_string(P(r, "-x1*x2^2")) == "-x1*x2^2");
}

TEST_CASE("truncate and valuation") {
  auto r = ring_of({"x1", "x2"});
  auto f = S(r, "x1^2 + x1*x2^2 + x2^4", 6);
  CHECK(f.valuation() == 2);
  CHECK(truncate(f, 3) == S(r, "x1^2", 3));
  CHECK(TruncatedSeries(r, 5).valuation() == 5);
  CHECK(f.degree_slice(3).size() == 1);
}
