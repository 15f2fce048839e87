#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nart/field.hpp"

namespace nart {

// Variable-block descriptor. Variables are ordered x-block first, then the
// optional y-block; `x_count` marks the split.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> names, std::size_t x_count);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return names_.size(); }
  std::size_t x_count() const noexcept { return x_count_; }
  std::size_t y_count() const noexcept { return names_.size() - x_count_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Ring& other) const = default;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::size_t x_count_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> names, std::size_t x_count);
// All variables in one block.
RingPtr make_ring(Field field, std::vector<std::string> names);

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what);

// Appends variables after the existing ones; the x/y split is kept.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);
// The ring on the x-block alone.
RingPtr x_subring(const RingPtr& ring);

}  // namespace nart
