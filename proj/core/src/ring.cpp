#include "nart/ring.hpp"

#include <algorithm>

#include "nart/error.hpp"

namespace nart {

Ring::Ring(Field field, std::vector<std::string> names, std::size_t x_count)
    : field_(field), names_(std::move(names)), x_count_(x_count) {
  if (x_count_ > names_.size()) fail(ErrorCode::invalid_argument, "x-block larger than the ring");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (std::find(names_.begin(), names_.begin() + i, names_[i]) != names_.begin() + i) {
      fail(ErrorCode::invalid_argument, "duplicate variable name '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(Field field, std::vector<std::string> names, std::size_t x_count) {
  return std::make_shared<const Ring>(field, std::move(names), x_count);
}

RingPtr make_ring(Field field, std::vector<std::string> names) {
  std::size_t n = names.size();
  return make_ring(field, std::move(names), n);
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what) {
  if (!same_ring(a, b)) fail(ErrorCode::ring_mismatch, std::string(what));
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  auto names = ring->names();
  names.insert(names.end(), extra.begin(), extra.end());
  return make_ring(ring->field(), std::move(names), ring->x_count());
}

RingPtr x_subring(const RingPtr& ring) {
  std::vector<std::string> names(ring->names().begin(), ring->names().begin() + ring->x_count());
  return make_ring(ring->field(), std::move(names));
}

}  // namespace nart
