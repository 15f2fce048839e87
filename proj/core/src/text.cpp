#include "nart/text.hpp"

#include <cctype>
#include <limits>

#include "nart/error.hpp"

namespace nart {

namespace {

constexpr unsigned kExact = std::numeric_limits<unsigned>::max();

unsigned order_of(const ExprValue& v) { return v.order.value_or(kExact); }

unsigned valuation_of(const ExprValue& v) {
  if (v.value.is_zero()) return order_of(v);
  return static_cast<unsigned>(v.value.valuation());
}

ExprValue make_value(Polynomial p, unsigned order) {
  if (order == kExact) return {std::move(p), std::nullopt};
  return {p.truncated(order), order};
}

unsigned sat_add(unsigned a, unsigned b) { return (a == kExact || b == kExact) ? kExact : a + b; }

ExprValue add_values(const ExprValue& a, const ExprValue& b, bool negate) {
  unsigned order = std::min(order_of(a), order_of(b));
  return make_value(negate ? a.value - b.value : a.value + b.value, order);
}

ExprValue mul_values(const ExprValue& a, const ExprValue& b) {
  unsigned order = std::min(sat_add(order_of(a), valuation_of(b)), sat_add(order_of(b), valuation_of(a)));
  Polynomial product(a.value.ring());
  for (const auto& [ea, ca] : a.value.terms()) {
    unsigned da = total_degree(ea);
    if (da >= order) break;
    for (const auto& [eb, cb] : b.value.terms()) {
      if (da + total_degree(eb) >= order) break;
      product.add_term(ea + eb, ca * cb);
    }
  }
  return make_value(std::move(product), order);
}

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, const NameLookup& lookup)
      : ring_(ring), text_(text), lookup_(lookup) {}

  ExprValue parse() {
    ExprValue v = sum();
    skip_ws();
    if (pos_ < text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& message) const { throw ParseError(message, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned small_integer() {
    skip_ws();
    std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 100000) error("integer too large here");
      ++pos_;
    }
    if (pos_ == start) error("expected an integer");
    return static_cast<unsigned>(value);
  }

  ExprValue sum() {
    ExprValue acc = product();
    for (;;) {
      if (accept('+')) {
        acc = add_values(acc, product(), false);
      } else if (accept('-')) {
        acc = add_values(acc, product(), true);
      } else {
        return acc;
      }
    }
  }

  ExprValue product() {
    ExprValue acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = mul_values(acc, unary());
      } else if (accept('/')) {
        std::size_t at = pos_;
        ExprValue d = unary();
        if (!d.exact() || d.value.degree() > 0 || d.value.is_zero()) {
          pos_ = at;
          error("division only by nonzero constants");
        }
        Scalar inv = d.value.constant_term().inverse();
        acc = make_value(acc.value.scaled(inv), order_of(acc));
      } else {
        return acc;
      }
    }
  }

  ExprValue unary() {
    if (accept('-')) {
      ExprValue v = unary();
      return make_value(-v.value, order_of(v));
    }
    if (accept('+')) return unary();
    return power();
  }

  ExprValue power() {
    ExprValue base = atom();
    if (accept('^')) {
      unsigned k = small_integer();
      ExprValue result = make_value(Polynomial::constant(ring_, 1), kExact);
      for (unsigned i = 0; i < k; ++i) result = mul_values(result, base);
      return result;
    }
    return base;
  }

  ExprValue atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprValue v = sum();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)));
      Scalar s = ring_->field().from_rational(mpq_class(n));
      return make_value(Polynomial::constant(ring_, s), kExact);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name = identifier();
      if (name == "O") {
        std::size_t save = pos_;
        if (accept('(')) {
          std::string kw = identifier();
          if (kw != "deg") error("expected 'deg' in O(deg k)");
          unsigned k = small_integer();
          if (k == 0) error("known order must be positive");
          expect(')');
          return make_value(Polynomial(ring_), k);
        }
        pos_ = save;
      }
      if (auto idx = ring_->index_of(name)) return make_value(Polynomial::variable(ring_, *idx), kExact);
      if (lookup_) {
        if (const ExprValue* v = lookup_(name)) {
          if (!same_ring(v->value.ring(), ring_)) {
            pos_ = start;
            error("'" + name + "' lives in a different ring");
          }
          return *v;
        }
      }
      pos_ = start;
      error("undeclared name '" + name + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  const NameLookup& lookup_;
  std::size_t pos_ = 0;
};

}  // namespace

TruncatedSeries ExprValue::to_series(unsigned cap) const {
  unsigned o = order ? std::min(*order, cap) : cap;
  return TruncatedSeries::from_polynomial(value, o);
}

ExprValue parse_expression(const RingPtr& ring, std::string_view text, const NameLookup& lookup) {
  return Parser(ring, text, lookup).parse();
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  ExprValue v = parse_expression(ring, text);
  if (!v.exact()) throw ParseError("expected a polynomial, found a truncated series", 1);
  return v.value;
}

TruncatedSeries parse_series(const RingPtr& ring, std::string_view text, std::optional<unsigned> default_order) {
  ExprValue v = parse_expression(ring, text);
  if (v.exact()) {
    if (!default_order) throw ParseError("series needs an O(deg k) term", text.size() + 1);
    return v.to_series(*default_order);
  }
  return v.to_series(*v.order);
}

std::string format_monomial(const Ring& ring, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool negative = c.is_negative();
    Scalar magnitude = c.abs();
    std::string mono = format_monomial(*p.ring(), e);
    std::string body;
    if (mono.empty()) {
      body = magnitude.to_string();
    } else if (magnitude.is_one()) {
      body = mono;
    } else {
      body = magnitude.to_string() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string to_string(const TruncatedSeries& f) {
  return to_string(f.polynomial()) + " + O(deg " + std::to_string(f.known_order()) + ")";
}

}  // namespace nart
