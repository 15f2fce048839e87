#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nart/polynomial.hpp"
#include "nart/series.hpp"

namespace nart {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error(message), column_(column) {}
  // 1-based column inside the parsed text.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// Result of evaluating an expression: an exact polynomial, or a truncated
// series when `order` is set (via an O(deg k) term or a truncated operand).
struct ExprValue {
  Polynomial value;
  std::optional<unsigned> order;

  bool exact() const noexcept { return !order.has_value(); }
  // The value as a series certified to min(order, cap).
  TruncatedSeries to_series(unsigned cap) const;
  static ExprValue from(const TruncatedSeries& s) { return {s.polynomial(), s.known_order()}; }
};

using NameLookup = std::function<const ExprValue*(std::string_view)>;

// Grammar: sums of products of powers; atoms are integers, ring variables,
// names resolved through `lookup`, parenthesised expressions and O(deg k).
// Division is allowed by nonzero constants only, so `p/q` literals work.
ExprValue parse_expression(const RingPtr& ring, std::string_view text, const NameLookup& lookup = {});

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);
// Requires an O(deg k) term unless `default_order` is given.
TruncatedSeries parse_series(const RingPtr& ring, std::string_view text,
                             std::optional<unsigned> default_order = std::nullopt);

// Canonical forms: terms in GradedLess order, `coeff*x1^a*x2^b`, rational
// coefficients as p/q, unit coefficients omitted, series end in `+ O(deg c)`.
std::string format_monomial(const Ring& ring, const Exponent& e);
std::string to_string(const Polynomial& p);
std::string to_string(const TruncatedSeries& f);

}  // namespace nart
