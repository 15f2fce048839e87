#include "nart/span.hpp"

#include <algorithm>
#include <set>

#include "nart/error.hpp"

namespace nart {

MonomialIndex::MonomialIndex(std::vector<Exponent> monomials) : monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (!position_.emplace(monomials_[i], i).second) fail(ErrorCode::invalid_argument, "duplicate monomial in index");
  }
}

std::optional<std::size_t> MonomialIndex::find(const Exponent& e) const {
  auto it = position_.find(e);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

SparseEntries coordinates(const Polynomial& p, const MonomialIndex& index, std::size_t offset) {
  SparseEntries v;
  v.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    auto i = index.find(e);
    if (!i) fail(ErrorCode::invalid_argument, "polynomial term outside the coordinate monomials");
    v.emplace_back(*i + offset, c);
  }
  normalize(v);
  return v;
}

Polynomial from_coordinates(const RingPtr& ring, const SparseEntries& v, const MonomialIndex& index,
                            std::size_t offset) {
  Polynomial p(ring);
  for (const auto& [col, c] : v) {
    if (col < offset || col >= offset + index.size()) continue;
    p.add_term(index.at(col - offset), c);
  }
  return p;
}

namespace {

// Columns in descending monomial order so that the ordered pivot rule picks
// leading monomials.
MonomialIndex support_index(std::initializer_list<std::span<const Polynomial>> groups) {
  std::set<Exponent, GradedLess> support;
  for (auto group : groups) {
    for (const auto& p : group) {
      for (const auto& [e, c] : p.terms()) support.insert(e);
    }
  }
  return MonomialIndex(std::vector<Exponent>(support.rbegin(), support.rend()));
}

std::vector<SparseEntries> rows_of(std::span<const Polynomial> polys, const MonomialIndex& index) {
  std::vector<SparseEntries> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) rows.push_back(coordinates(p, index));
  return rows;
}

void check_ring(const RingPtr& ring, std::span<const Polynomial> polys) {
  for (const auto& p : polys) require_same_ring(ring, p.ring(), "span computation");
}

}  // namespace

std::vector<Polynomial> span_basis(const RingPtr& ring, std::span<const Polynomial> polys) {
  check_ring(ring, polys);
  MonomialIndex index = support_index({polys});
  auto rows = row_space_basis(ring->field(), index.size(), rows_of(polys, index));
  std::vector<Polynomial> out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.push_back(from_coordinates(ring, *it, index));
  return out;
}

std::size_t span_dimension(const RingPtr& ring, std::span<const Polynomial> polys) {
  check_ring(ring, polys);
  MonomialIndex index = support_index({polys});
  return rank_of(ring->field(), index.size(), rows_of(polys, index));
}

bool span_contains(const RingPtr& ring, std::span<const Polynomial> big, std::span<const Polynomial> small) {
  check_ring(ring, big);
  check_ring(ring, small);
  MonomialIndex index = support_index({big, small});
  auto rows = rows_of(big, index);
  std::size_t r = rank_of(ring->field(), index.size(), rows);
  auto extra = rows_of(small, index);
  rows.insert(rows.end(), extra.begin(), extra.end());
  return rank_of(ring->field(), index.size(), std::move(rows)) == r;
}

bool span_equal(const RingPtr& ring, std::span<const Polynomial> a, std::span<const Polynomial> b) {
  return span_contains(ring, a, b) && span_contains(ring, b, a);
}

std::vector<Polynomial> span_quotient(const RingPtr& ring, std::span<const Polynomial> a,
                                      std::span<const Polynomial> b) {
  check_ring(ring, a);
  check_ring(ring, b);
  MonomialIndex index = support_index({a, b});
  EliminationOptions opts;
  opts.rule = PivotRule::ordered;
  Echelon eb = eliminate(ring->field(), index.size(), rows_of(b, index), {}, opts);
  // Reduce a modulo span(b), then take the canonical basis of what is left.
  std::vector<SparseEntries> reduced;
  for (auto& v : rows_of(a, index)) reduced.push_back(eb.reduce(std::move(v)));
  auto rows = row_space_basis(ring->field(), index.size(), std::move(reduced));
  std::vector<Polynomial> out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.push_back(from_coordinates(ring, *it, index));
  return out;
}

}  // namespace nart
