#include <doctest.h>

#include "nart/error.hpp"
#include "nart/morphism.hpp"
#include "nart/span.hpp"
#include "support/helpers.hpp"

using namespace nart;
using namespace testing_support;

namespace {

AlgebraMorphism make(const std::vector<std::string>& xs, const std::vector<std::string>& ys,
                     const std::vector<std::string>& images, const std::vector<std::string>& I = {},
                     const std::vector<std::string>& J = {}) {
  auto src = ring_of(xs);
  auto tgt = ring_of(ys);
  std::vector<Image> imgs;
  for (const auto& t : images) imgs.emplace_back(P(tgt, t));
  return AlgebraMorphism(src, tgt, imgs, PolyIdeal(src, Ps(src, I)), PolyIdeal(tgt, Ps(tgt, J)));
}

}  // namespace

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(make({"x1"}, {"y"}, {"1 + y"}), Error);
  try {
    make({"x1"}, {"y"}, {"y"}, {"x1"});
    FAIL("expected an ill-defined morphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ill_defined_morphism);
  }
  CHECK_NOTHROW(make({"x1"}, {"y"}, {"y"}, {"x1^2"}, {"y^2"}));
}

TEST_CASE("kernel_exact") {
  CHECK(kernel_exact(make({"x1", "x2"}, {"y1", "y2"}, {"y1", "y2"})).is_zero());
  auto diag = make({"x1", "x2"}, {"y"}, {"y", "y"});
  CHECK(kernel_exact(diag).generators == Ps(diag.source(), {"x1 - x2"}));
  CHECK(kernel_exact(make({"x1"}, {"y"}, {"y^2"})).is_zero());
  auto cusp = make({"x1", "x2"}, {"y"}, {"y^2", "y^3"});
  CHECK(same_ideal(kernel_exact(cusp), PolyIdeal(cusp.source(), Ps(cusp.source(), {"x1^3 - x2^2"}))));
  // Generators already in I are dropped.
  auto mod = make({"x1", "x2"}, {"y"}, {"y", "y"}, {"x1 - x2"});
  CHECK(kernel_exact(mod).is_zero());
}

TEST_CASE("truncated kernel candidates") {
  auto diag = make({"x1", "x2"}, {"y"}, {"y", "y"});
  for (unsigned cp = 2; cp <= 5; ++cp) {
    auto cand = truncated_kernel_candidates(diag, 2, cp)[2];
    CHECK(span_contains(diag.source(), cand, Ps(diag.source(), {"x1 - x2"})));
  }
  auto id = make({"x1", "x2"}, {"y1", "y2"}, {"y1", "y2"});
  for (unsigned c = 1; c <= 6; ++c) CHECK(truncated_kernel_candidates(id, c, c)[c].empty());
}

TEST_CASE("candidate spaces shrink and carry certificates") {
  auto cusp = make({"x1", "x2"}, {"y"}, {"y^2", "y^3"});
  for (unsigned cp = 3; cp < 10; ++cp) {
    auto a = truncated_kernel_candidates(cusp, 3, cp)[3];
    auto b = truncated_kernel_candidates(cusp, 3, cp + 1)[3];
    CHECK(span_contains(cusp.source(), a, b));
    for (const auto& f : a) {
      auto cert = kernel_certificate(cusp, f, 3, cp);
      REQUIRE(cert);
      // f - sum (x_i - phi_i) k_i vanishes below cp.
      const auto& g = cusp.graph_ring();
      Polynomial acc = (*cert)[0].polynomial();
      acc -= (P(g, "x1 - y^2") * (*cert)[1].polynomial());
      acc -= (P(g, "x2 - y^3") * (*cert)[2].polynomial());
      CHECK(acc.truncated(cp).is_zero());
    }
  }
}

TEST_CASE("strong injectivity reports") {
  CHECK(check_strong_injectivity(make({"x1", "x2"}, {"y"}, {"y", "y"}), 3, 5).equal);
  CHECK(check_strong_injectivity(make({"x1", "x2"}, {"y1", "y2"}, {"y1", "y2"}), 4, 4).equal);
  auto cusp = check_strong_injectivity(make({"x1", "x2"}, {"y"}, {"y^2", "y^3"}), 4, 12);
  CHECK(cusp.equal);
  CHECK(cusp.exact_span.size() == 3);  // x1^3 - x2^2, x1*x2^2, x2^3
}

TEST_CASE("preimage") {
  auto sq = make({"x1"}, {"y1"}, {"y1^2"});
  auto f = preimage(sq, P(sq.target(), "y1^4"), 6);
  REQUIRE(f);
  CHECK(f->polynomial() == P(sq.source(), "x1^2"));
  auto z = preimage(sq, P(sq.target(), "0"), 6);
  REQUIRE(z);
  CHECK(z->is_zero());
  CHECK_FALSE(preimage(sq, P(sq.target(), "y1"), 2).has_value());
  auto withJ = make({"x1"}, {"y1"}, {"y1^2"}, {}, {"y1^3"});
  auto g = preimage(withJ, P(withJ.target(), "y1^2 + y1^5"), 6);
  REQUIRE(g);
  CHECK(truncate(*g, 2).polynomial() == P(withJ.source(), "x1"));
}

TEST_CASE("series images") {
  auto src = ring_of({"x1", "x2"});
  auto tgt = ring_of({"y1", "y2"});
  TruncatedSeries e = TruncatedSeries::from_polynomial(P(tgt, "y1 + y1*y2 + 1/2*y1*y2^2"), 3);
  std::vector<Image> imgs{P(tgt, "y1"), e};
  AlgebraMorphism phi(src, tgt, imgs, PolyIdeal(src, {}), PolyIdeal(tgt, {}));
  CHECK_FALSE(phi.polynomial_images());
  CHECK(*phi.images_known_order() == 3);
  CHECK_THROWS_AS(truncated_kernel_candidates(phi, 2, 4), Error);
  CHECK_THROWS_AS(kernel_exact(phi), Error);
}
