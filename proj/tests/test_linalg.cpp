#include <doctest.h>

#include <random>

#include "nart/linalg.hpp"
#include "nart/span.hpp"
#include "support/dense_oracle.hpp"
#include "support/helpers.hpp"

using namespace nart;
using namespace testing_support;

namespace {

std::vector<SparseEntries> random_rows(std::mt19937& rng, std::size_t rows, std::size_t cols, int density) {
  std::uniform_int_distribution<int> v(-4, 4);
  std::uniform_int_distribution<int> keep(0, 9);
  std::vector<SparseEntries> out(rows);
  for (auto& r : out) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (keep(rng) < density) {
        int x = v(rng);
        if (x != 0) r.emplace_back(c, Q(x));
      }
    }
  }
  return out;
}

std::vector<std::vector<mpq_class>> dense(const std::vector<SparseEntries>& rows, std::size_t cols) {
  std::vector<std::vector<mpq_class>> out(rows.size(), std::vector<mpq_class>(cols, 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, x] : rows[r]) out[r][c] = x.rational();
  }
  return out;
}

Scalar dot(const SparseEntries& row, const std::vector<Scalar>& x) {
  Scalar acc;
  for (const auto& [c, v] : row) acc += v * x[c];
  return acc;
}

}  // namespace

TEST_CASE("elimination rank matches dense elimination for every pivot rule") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = 3 + trial % 7;
    std::size_t cols = 4 + trial % 5;
    auto A = random_rows(rng, rows, cols, 3 + trial % 4);
    std::size_t expected = dense_rank(dense(A, cols));
    for (PivotRule rule : {PivotRule::markowitz, PivotRule::markowitz_reversed, PivotRule::ordered}) {
      EliminationOptions o;
      o.rule = rule;
      Echelon e = eliminate(Field::rationals(), cols, A, {}, o);
      CHECK(e.rank() == expected);
      for (const auto& v : e.nullspace()) {
        std::vector<Scalar> x(cols);
        for (const auto& [c, s] : v) x[c] = s;
        for (const auto& row : A) CHECK(dot(row, x).is_zero());
      }
      CHECK(e.nullspace().size() == cols - expected);
    }
  }
}

TEST_CASE("inhomogeneous consistency and particular solution") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = 4 + trial % 4;
    std::size_t cols = 3 + trial % 4;
    auto A = random_rows(rng, rows, cols, 5);
    std::vector<Scalar> b;
    std::uniform_int_distribution<int> v(-3, 3);
    for (std::size_t r = 0; r < rows; ++r) b.push_back(Q(v(rng)));
    auto aug = dense(A, cols);
    for (std::size_t r = 0; r < rows; ++r) aug[r].push_back(b[r].rational());
    bool solvable = dense_rank(aug) == dense_rank(dense(A, cols));
    Echelon e = eliminate(Field::rationals(), cols, A, b);
    CHECK(e.consistent() == solvable);
    if (solvable) {
      auto x = e.particular();
      for (std::size_t r = 0; r < rows; ++r) CHECK(dot(A[r], x) == b[r]);
    }
  }
}

TEST_CASE("class-ordered elimination gives the coordinate-subspace intersection") {
  // span{(1,1,0), (0,1,1)} meets {first coordinate zero} in span{(0,1,1)}.
  std::vector<SparseEntries> rows{{{0, Q(1)}, {1, Q(1)}}, {{1, Q(1)}, {2, Q(1)}}};
  auto k = class_zero_kernel(Field::rationals(), 3, rows, {0, 1, 1});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == SparseEntries{{1, Q(1)}, {2, Q(1)}});
}

TEST_CASE("projected nullspace equals the projection of the solution space") {
  // x0 + x2 = 0, x1 - x2 = 0: solutions t(-1, 1, 1); projection on {x1} is all of k.
  std::vector<SparseEntries> rows{{{0, Q(1)}, {2, Q(1)}}, {{1, Q(1)}, {2, Q(-1)}}};
  EliminationOptions o;
  o.column_class = {0, 1, 0};
  Echelon e = eliminate(Field::rationals(), 3, rows, {}, o);
  auto proj = e.projected_nullspace([](std::size_t c) { return c == 1; });
  CHECK(proj.size() == 1);
  // x0 + x1 = 0 and x1 = 0 forces projection on {x1} to zero.
  std::vector<SparseEntries> rows2{{{0, Q(1)}, {1, Q(1)}}, {{1, Q(1)}}};
  Echelon e2 = eliminate(Field::rationals(), 2, rows2, {}, EliminationOptions{PivotRule::markowitz, {0, 1}});
  CHECK(e2.projected_nullspace([](std::size_t c) { return c == 1; }).empty());
}

TEST_CASE("prime field elimination") {
  Field f = Field::prime(5);
  // x + 2y = 1, 3x + y = 0 mod 5: det = 1 - 6 = -5 = 0, rank 1, inconsistent.
  std::vector<SparseEntries> rows{{{0, f.from_int(1)}, {1, f.from_int(2)}}, {{0, f.from_int(3)}, {1, f.from_int(1)}}};
  Echelon e = eliminate(f, 2, rows, {f.from_int(1), f.from_int(0)});
  CHECK_FALSE(e.consistent());
  Echelon h = eliminate(f, 2, rows, {});
  CHECK(h.rank() == 1);
}

TEST_CASE("polynomial spans") {
  auto r = ring_of({"x1", "x2"});
  auto a = Ps(r, {"x1 + x2", "x1 - x2", "x1^2"});
  auto b = Ps(r, {"x1", "x2", "x1^2 + x1"});
  CHECK(span_equal(r, a, b));
  CHECK(span_dimension(r, a) == 3);
  auto basis = span_basis(r, a);
  CHECK(basis.size() == 3);
  auto c = Ps(r, {"x1"});
  CHECK(span_contains(r, a, c));
  CHECK_FALSE(span_contains(r, c, a));
  auto q = span_quotient(r, a, c);
  CHECK(q.size() == 2);
  CHECK(span_equal(r, span_quotient(r, b, c), q));
}
